"""
Exact arithmetic in GF(p^h).

Elements are plain integer codes in [0, q): the code of
c_0 + c_1 x + ... + c_{h-1} x^{h-1} is the base-p number with digits
(c_{h-1} ... c_0), which is also the integer representation galois uses.
galois selects and verifies the modulus and builds the lookup tables;
every scalar operation afterwards is a table lookup or machine arithmetic.
"""

from functools import lru_cache
from typing import Iterable, Sequence

import galois
import numpy as np

from arclab.core.config import get_settings
from arclab.core.exceptions import FieldArithmeticError, FieldError
from arclab.core.logging import get_logger

logger = get_logger(__name__)

# Canonical element code
Fe = int


class FieldSpec:
    """
    The finite field GF(p^h) with its reduction polynomial.

    Immutable after construction and safe to share between threads.
    Arithmetic methods take and return integer codes.

    Attributes:
        p: Prime characteristic.
        h: Extension degree.
        q: Field order p^h.
        modulus: Monic reduction polynomial, coefficients low degree first.
    """

    def __init__(self, p: int, h: int, modulus: tuple[int, ...]):
        """
        Build the arithmetic tables.

        Use field_new() instead of calling this directly; it validates
        the parameters and caches instances.

        Args:
            p: Prime characteristic.
            h: Extension degree (>= 1).
            modulus: Monic irreducible polynomial of degree h, low degree first.
        """
        settings = get_settings()

        self.p = p
        self.h = h
        self.q = p**h
        self.modulus = modulus
        self.zero: Fe = 0
        self.one: Fe = 1

        self._gf: type[galois.FieldArray] | None = None
        self._exp: list[int] = []
        self._log: list[int] = []
        self._add_table: list[list[int]] | None = None
        self._neg_table: list[int] = []

        if h == 1:
            self.add = self._add_prime
            self.neg = self._neg_prime
            self.mul = self._mul_prime
            self.inv = self._inv_prime
            return

        irreducible = galois.Poly(list(modulus), field=galois.GF(p), order="asc")
        self._gf = galois.GF(self.q, irreducible_poly=irreducible)
        elements = self._gf.elements

        if p == 2:
            self.add = self._add_xor
            self.neg = self._neg_identity
        else:
            self._neg_table = (-elements).view(np.ndarray).tolist()
            self.neg = self._neg_lookup
            if self.q <= settings.ADD_TABLE_MAX_Q:
                table = elements[:, np.newaxis] + elements[np.newaxis, :]
                self._add_table = table.view(np.ndarray).tolist()
                self.add = self._add_lookup
            else:
                self.add = self._add_digits

        if self.q <= settings.LOG_TABLE_MAX_Q:
            alpha = self._gf.primitive_element
            powers = (alpha ** np.arange(self.q - 1)).view(np.ndarray).tolist()
            self._exp = powers + powers
            self._log = [0] * self.q
            for i, value in enumerate(powers):
                self._log[value] = i
            self.mul = self._mul_log
            self.inv = self._inv_log
        else:
            self.mul = self._mul_galois
            self.inv = self._inv_galois

        logger.debug(f"Built tables for GF({self.q}) with modulus {list(modulus)}")

    # Prime fields

    def _add_prime(self, a: Fe, b: Fe) -> Fe:
        return (a + b) % self.p

    def _neg_prime(self, a: Fe) -> Fe:
        return -a % self.p

    def _mul_prime(self, a: Fe, b: Fe) -> Fe:
        return a * b % self.p

    def _inv_prime(self, a: Fe) -> Fe:
        if a == 0:
            raise FieldArithmeticError(f"inverse of zero in GF({self.q})")
        return pow(a, -1, self.p)

    # Extension fields

    def _add_xor(self, a: Fe, b: Fe) -> Fe:
        return a ^ b

    def _neg_identity(self, a: Fe) -> Fe:
        return a

    def _add_lookup(self, a: Fe, b: Fe) -> Fe:
        return self._add_table[a][b]

    def _add_digits(self, a: Fe, b: Fe) -> Fe:
        p = self.p
        result, place = 0, 1
        while a or b:
            result += ((a % p + b % p) % p) * place
            a //= p
            b //= p
            place *= p
        return result

    def _neg_lookup(self, a: Fe) -> Fe:
        return self._neg_table[a]

    def _mul_log(self, a: Fe, b: Fe) -> Fe:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def _inv_log(self, a: Fe) -> Fe:
        if a == 0:
            raise FieldArithmeticError(f"inverse of zero in GF({self.q})")
        return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]

    def _mul_galois(self, a: Fe, b: Fe) -> Fe:
        return int(self._gf(a) * self._gf(b))

    def _inv_galois(self, a: Fe) -> Fe:
        if a == 0:
            raise FieldArithmeticError(f"inverse of zero in GF({self.q})")
        return int(self._gf(a) ** -1)

    # Derived operations

    def sub(self, a: Fe, b: Fe) -> Fe:
        """Return a - b."""
        return self.add(a, self.neg(b))

    def div(self, a: Fe, b: Fe) -> Fe:
        """Return a / b; raises FieldArithmeticError when b is zero."""
        return self.mul(a, self.inv(b))

    def pow(self, a: Fe, e: int) -> Fe:
        """
        Raise a to an integer power by square-and-multiply.

        pow(a, 0) is 1 for every a, including zero. Negative exponents
        go through the inverse and fail for a = 0.
        """
        if e < 0:
            a = self.inv(a)
            e = -e
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def sign(self, value: Fe, exponent: int) -> Fe:
        """Multiply value by (-1)^exponent; only the parity of exponent matters."""
        if exponent % 2 == 0:
            return value
        return self.neg(value)

    def dot(self, u: Sequence[Fe], v: Sequence[Fe]) -> Fe:
        """Inner product of two equal-length code sequences."""
        total = 0
        add, mul = self.add, self.mul
        for a, b in zip(u, v):
            if a and b:
                total = add(total, mul(a, b))
        return total

    def product(self, values: Iterable[Fe]) -> Fe:
        """Product of a sequence of elements; the empty product is 1."""
        result = self.one
        for value in values:
            result = self.mul(result, value)
        return result

    def elements(self) -> range:
        """All element codes in canonical order."""
        return range(self.q)

    def decode(self, code: Fe) -> list[int]:
        """Coefficient list (low degree first, length h) of an element code."""
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} outside [0, {self.q})")
        digits = []
        for _ in range(self.h):
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return digits

    def encode(self, coefficients: Sequence[int]) -> Fe:
        """Element code of a coefficient list (low degree first)."""
        if len(coefficients) > self.h or any(not 0 <= c < self.p for c in coefficients):
            raise FieldError(f"{list(coefficients)} is not an element of GF({self.q})")
        code = 0
        for c in reversed(coefficients):
            code = code * self.p + c
        return code

    def check(self, code: int) -> Fe:
        """Validate an element code read from outside."""
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} outside [0, {self.q})")
        return code

    @property
    def header(self) -> str:
        """Field text header "p h"."""
        return f"{self.p} {self.h}"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.h, self.modulus) == (other.p, other.h, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.h, self.modulus))

    def __reduce__(self):
        return (field_new, (self.p, self.h, self.modulus))

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, h={self.h}, modulus={list(self.modulus)})"


def default_modulus(p: int, h: int) -> tuple[int, ...]:
    """
    The lexicographically smallest monic irreducible polynomial of degree h.

    Candidates are ordered by the base-p integer sum c_i p^i, which is the
    "min" order of galois. For h = 1 the modulus is x.

    Returns:
        Coefficients, low degree first, length h + 1.
    """
    if h == 1:
        return (0, 1)
    poly = galois.irreducible_poly(p, h, method="min")
    return tuple(int(c) for c in poly.coefficients(order="asc"))


def _check_modulus(p: int, h: int, modulus: Sequence[int]) -> tuple[int, ...]:
    coefficients = tuple(int(c) for c in modulus)
    if len(coefficients) != h + 1 or coefficients[-1] != 1:
        raise FieldError(f"modulus {list(coefficients)} is not monic of degree {h}")
    if any(not 0 <= c < p for c in coefficients):
        raise FieldError(f"modulus {list(coefficients)} has coefficients outside [0, {p})")
    if h > 1:
        poly = galois.Poly(list(coefficients), field=galois.GF(p), order="asc")
        if not poly.is_irreducible():
            raise FieldError(f"modulus {list(coefficients)} is reducible over GF({p})")
    return coefficients


@lru_cache(maxsize=64)
def _build_field(p: int, h: int, modulus: tuple[int, ...] | None) -> FieldSpec:
    if modulus is None:
        modulus = default_modulus(p, h)
    else:
        modulus = _check_modulus(p, h, modulus)
    field = FieldSpec(p, h, modulus)
    logger.info(f"Field GF({field.q}) ready, modulus {list(field.modulus)}")
    return field


def field_new(p: int, h: int, modulus: Sequence[int] | None = None) -> FieldSpec:
    """
    Construct GF(p^h).

    Args:
        p: Prime characteristic.
        h: Extension degree, at least 1.
        modulus: Optional explicit reduction polynomial (low degree first),
            checked for monicity and irreducibility. Defaults to the
            lexicographically smallest monic irreducible polynomial.

    Returns:
        FieldSpec, cached per (p, h, modulus).

    Raises:
        FieldError: p not prime, h < 1, bad modulus, or p^h above MAX_Q.
    """
    settings = get_settings()

    if not isinstance(p, int) or p < 2 or not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if not isinstance(h, int) or h < 1:
        raise FieldError(f"extension degree {h} must be at least 1")
    if p**h > settings.MAX_Q:
        raise FieldError(
            f"field order {p}^{h} exceeds the configured maximum {settings.MAX_Q} "
            "(raise ARCLAB_MAX_Q to allow it)"
        )

    return _build_field(p, h, tuple(modulus) if modulus is not None else None)


def field_of_order(q: int) -> FieldSpec:
    """Construct GF(q) from its order alone."""
    if q < 2:
        raise FieldError(f"{q} is not a prime power")
    factors = galois.factors(q)[0]
    if len(factors) != 1:
        raise FieldError(f"{q} is not a prime power")
    p = int(factors[0])
    h = 0
    rest = q
    while rest > 1:
        rest //= p
        h += 1
    return field_new(p, h)
