"""
Exact linear algebra over F_q.

Vectors are tuples of element codes. Matrices are given by their rows,
which is also the argument order of det_seq: det_seq(field, (z, A, D))
is the determinant whose rows are z, then A in order, then D in order.
"""

from dataclasses import dataclass
from typing import Sequence, Union

from arclab.core.exceptions import DependentPointsError, DimensionError
from arclab.utils.gf import Fe, FieldSpec

# A vector of F_q^k as a tuple of element codes
Vek = tuple[int, ...]

# det_seq accepts single vectors and ordered groups of vectors
VectorGroup = Union[Sequence[int], Sequence[Sequence[int]]]


@dataclass(frozen=True)
class LinearForm:
    """
    A nonzero covector on F_q^k; its kernel is a hyperplane.

    Attributes:
        covector: Coefficients as element codes.
        normalized: True when the first nonzero coordinate equals 1.
    """

    covector: Vek
    normalized: bool = True

    def __post_init__(self) -> None:
        if not any(self.covector):
            raise DimensionError("the zero covector is not a linear form")

    @property
    def dimension(self) -> int:
        return len(self.covector)

    def evaluate(self, field: FieldSpec, x: Sequence[int]) -> Fe:
        """Value of the form at x."""
        return field.dot(self.covector, x)

    def scaled(self, field: FieldSpec, factor: Fe) -> "LinearForm":
        """The same hyperplane with the covector multiplied by a nonzero factor."""
        if factor == 0:
            raise DimensionError("cannot scale a linear form by zero")
        covector = tuple(field.mul(factor, c) for c in self.covector)
        return LinearForm(covector, normalized=self.normalized and factor == field.one)


def normalize(field: FieldSpec, v: Sequence[int]) -> Vek:
    """
    Scale a nonzero vector so its first nonzero coordinate is 1.

    Raises:
        DimensionError: If v is the zero vector.
    """
    for c in v:
        if c:
            if c == field.one:
                return tuple(v)
            factor = field.inv(c)
            return tuple(field.mul(factor, x) for x in v)
    raise DimensionError("the zero vector has no normalized representative")


def normal_form(field: FieldSpec, covector: Sequence[int]) -> LinearForm:
    """The normalized LinearForm with the given kernel."""
    return LinearForm(normalize(field, covector))


def _is_vector(part: Sequence) -> bool:
    return len(part) > 0 and not isinstance(part[0], (tuple, list))


def flatten_rows(parts: Sequence[VectorGroup]) -> list[Vek]:
    """Concatenate single vectors and ordered vector groups into a row list."""
    rows: list[Vek] = []
    for part in parts:
        if _is_vector(part):
            rows.append(tuple(part))
        else:
            rows.extend(tuple(v) for v in part)
    return rows


def det_seq(field: FieldSpec, parts: Sequence[VectorGroup], k: int | None = None) -> Fe:
    """
    Determinant of the matrix whose rows are the given vectors in order.

    Gaussian elimination with field inverses; every row swap flips the sign.

    Args:
        field: The field.
        parts: Vectors or ordered vector groups, concatenated in order.
        k: Expected dimension; defaults to the number of rows.

    Returns:
        The exact determinant.

    Raises:
        DimensionError: If the rows do not form a k x k matrix.
    """
    rows = flatten_rows(parts)
    n = len(rows)
    if k is not None and n != k:
        raise DimensionError(f"determinant needs {k} vectors, got {n}")
    if any(len(row) != n for row in rows):
        raise DimensionError(f"determinant needs {n} vectors of length {n}")
    if n == 0:
        return field.one

    matrix = [list(row) for row in rows]
    add, mul, neg = field.add, field.mul, field.neg
    det = field.one
    for col in range(n):
        pivot = next((r for r in range(col, n) if matrix[r][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            matrix[col], matrix[pivot] = matrix[pivot], matrix[col]
            det = neg(det)
        pivot_row = matrix[col]
        det = mul(det, pivot_row[col])
        pivot_inv = field.inv(pivot_row[col])
        for r in range(col + 1, n):
            row = matrix[r]
            if row[col]:
                factor = neg(mul(row[col], pivot_inv))
                for j in range(col, n):
                    if pivot_row[j]:
                        row[j] = add(row[j], mul(factor, pivot_row[j]))
    return det


def det_cofactor(field: FieldSpec, rows: Sequence[Sequence[int]]) -> Fe:
    """Cofactor expansion along the first row; an independent oracle for small k."""
    n = len(rows)
    if n == 0:
        return field.one
    if n == 1:
        return rows[0][0]
    total = field.zero
    for j, entry in enumerate(rows[0]):
        if entry == 0:
            continue
        minor = [row[:j] + row[j + 1 :] for row in (tuple(r) for r in rows[1:])]
        term = field.mul(entry, det_cofactor(field, minor))
        total = field.add(total, field.sign(term, j))
    return total


def rref(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> tuple[list[list[int]], list[int]]:
    """
    Reduced row echelon form with a deterministic pivot order.

    Pivots are taken column by column, choosing the first usable row.

    Returns:
        (nonzero reduced rows, pivot column of each row)
    """
    matrix = [list(row) for row in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        scale = field.inv(matrix[r][col])
        matrix[r] = [field.mul(scale, x) for x in matrix[r]]
        pivot_row = matrix[r]
        for i in range(len(matrix)):
            if i != r and matrix[i][col]:
                factor = field.neg(matrix[i][col])
                matrix[i] = [field.add(x, field.mul(factor, y)) for x, y in zip(matrix[i], pivot_row)]
        pivots.append(col)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(field: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    """Rank of a list of equal-length vectors."""
    if not rows:
        return 0
    return len(rref(field, rows, len(rows[0]))[1])


def nullspace(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> list[Vek]:
    """
    Basis of {v : row . v = 0 for every row}, one vector per free column.

    Each basis vector is normalized; the order follows the free columns.
    """
    reduced, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis: list[Vek] = []
    for f in free:
        v = [field.zero] * ncols
        v[f] = field.one
        for row, pc in zip(reduced, pivots):
            v[pc] = field.neg(row[f])
        basis.append(normalize(field, v))
    return basis


def nullspace_forms(field: FieldSpec, points: Sequence[Sequence[int]], k: int | None = None) -> list[LinearForm]:
    """
    Normalized forms spanning the annihilator of span(points).

    Args:
        field: The field.
        points: m independent vectors of F_q^k, m <= k - 1.
        k: Ambient dimension; required when points is empty.

    Returns:
        k - m independent normalized LinearForms, each vanishing on every point.

    Raises:
        DimensionError: Wrong vector lengths or too many points.
        DependentPointsError: The points are linearly dependent.
    """
    if k is None:
        if not points:
            raise DimensionError("ambient dimension is unknown for an empty point list")
        k = len(points[0])
    if any(len(v) != k for v in points):
        raise DimensionError(f"all points must have length {k}")
    if len(points) > k - 1:
        raise DimensionError(f"at most {k - 1} points span a proper subspace of F_q^{k}")
    forms = [LinearForm(v) for v in nullspace(field, points, k)]
    if len(forms) != k - len(points):
        raise DependentPointsError(f"{len(points)} points are linearly dependent")
    return forms


def pencil(field: FieldSpec, Y: Sequence[Sequence[int]], k: int) -> tuple[LinearForm, LinearForm]:
    """
    Two independent normalized forms vanishing on the (k-2)-subset Y.

    Every hyperplane through span(Y) is the kernel of exactly one member of
    {alpha1 + mu alpha2 : mu in F_q} together with alpha2; see pencil_members.

    Raises:
        DimensionError: |Y| != k - 2.
        DependentPointsError: Y is dependent.
    """
    if len(Y) != k - 2:
        raise DimensionError(f"a pencil needs {k - 2} points, got {len(Y)}")
    alpha1, alpha2 = nullspace_forms(field, Y, k)
    return alpha1, alpha2


def pencil_members(field: FieldSpec, alpha1: LinearForm, alpha2: LinearForm) -> list[LinearForm]:
    """The q + 1 normalized hyperplane forms of the pencil, alpha1 + mu alpha2 first."""
    members = []
    for mu in field.elements():
        covector = [field.add(a, field.mul(mu, b)) for a, b in zip(alpha1.covector, alpha2.covector)]
        members.append(normal_form(field, covector))
    members.append(alpha2)
    return members


def pencil_parameter(field: FieldSpec, alpha1: LinearForm, alpha2: LinearForm, x: Sequence[int]) -> int | None:
    """
    Index of the pencil member vanishing at x (matching pencil_members order).

    Returns mu for the member alpha1 + mu alpha2, q for alpha2, or None when
    x lies on every member (x in span(Y)).
    """
    a = alpha1.evaluate(field, x)
    b = alpha2.evaluate(field, x)
    if b == 0:
        return None if a == 0 else field.q
    return field.neg(field.div(a, b))


def is_independent(field: FieldSpec, points: Sequence[Sequence[int]]) -> bool:
    """True when the vectors are linearly independent."""
    return rank(field, points) == len(points)

