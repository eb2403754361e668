"""
Configuration service: the valid configurations of every lemma on an arc.

A lemma family lists shapes. A shape is a sequence of parts drawn from the
arc without repetition; ordered parts are sequences (permutations), the
others are index sets (ascending combinations). A shape may also carry a
number of variants, such as the position of a transposition.

Enumeration order is deterministic: shapes in family order, parts in
shape order, itertools order within a part, variants innermost. Sampling
picks a shape uniformly among the non-empty ones, then a uniform
configuration of that shape.
"""

import random
from dataclasses import dataclass, field as dataclass_field
from itertools import combinations, permutations
from math import comb, perm
from typing import Callable, Iterator

from arclab.core.exceptions import ConfigurationError, NoValidConfigurationError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.schemas.identity import IdentityReport, MainLemmaConfig, TwoToTheNConfig
from arclab.services import identity_service as identities
from arclab.services.tangent_service import TangentBundle

logger = get_logger(__name__)

# Largest Segre length exercised by the transposition and switch lemmas
SIGN_LEMMA_MAX_N = 2


@dataclass(frozen=True)
class Part:
    name: str
    size: int
    ordered: bool = True


@dataclass(frozen=True)
class Shape:
    parts: tuple[Part, ...]
    variants: int = 1

    def count(self, points: int) -> int:
        """Number of configurations of this shape on an arc with the given size."""
        total = self.variants
        available = points
        for part in self.parts:
            if part.size < 0 or part.size > available:
                return 0
            total *= perm(available, part.size) if part.ordered else comb(available, part.size)
            available -= part.size
        return total


@dataclass(frozen=True)
class Configuration:
    """One concrete configuration: the chosen indices of every part."""

    tag: str
    values: dict[str, tuple[int, ...]] = dataclass_field(hash=False)
    variant: int = 0

    def __getitem__(self, name: str) -> tuple[int, ...]:
        return self.values[name]


Verifier = Callable[[TangentBundle, Configuration], IdentityReport]


@dataclass(frozen=True)
class LemmaFamily:
    tag: str
    shapes: Callable[[Arc], list[Shape]]
    verify: Verifier


# =============================================================================
# FAMILIES
# =============================================================================

def _tangent_shapes(arc: Arc) -> list[Shape]:
    if arc.k < 3 or arc.t < 1:
        return []
    return [Shape((Part("D", arc.k - 3, False), Part("x", 1), Part("y", 1), Part("z", 1)))]


def _interpolation_shapes(arc: Arc) -> list[Shape]:
    if not arc.size >= arc.k + arc.t > arc.k:
        return []
    return [Shape((Part("Y", arc.k - 2, False), Part("E", arc.t + 2, False)))]


def _transposition_shapes(arc: Arc) -> list[Shape]:
    if arc.t < 1:
        return []
    return [
        Shape((Part("A", n), Part("B", n), Part("D", arc.k - n - 1, False)), variants=n - 1)
        for n in range(2, min(SIGN_LEMMA_MAX_N, arc.k - 1) + 1)
    ]


def _switch_shapes(arc: Arc) -> list[Shape]:
    if arc.t < 1:
        return []
    return [
        Shape((Part("D", arc.k - n - 2, False), Part("B", n), Part("A", n - 1), Part("x", 1), Part("y", 1)))
        for n in range(1, min(SIGN_LEMMA_MAX_N, arc.k - 2) + 1)
    ]


def _main_shapes(arc: Arc) -> list[Shape]:
    p, t, k = arc.field.p, arc.t, arc.k
    shapes = []
    for n in range(0, t + 2):
        for r in range(n, min(n + p - 1, t + 2, k - 1) + 1):
            shapes.append(
                Shape((Part("A", n), Part("L", r), Part("D", k - 1 - r, False), Part("Omega", t + 1 - n, False)))
            )
    return shapes


def _appendix_shapes(arc: Arc) -> list[Shape]:
    p, t, k = arc.field.p, arc.t, arc.k
    return [
        Shape((Part("L", r), Part("D", k - 1 - r, False), Part("Omega", t + 2, False)))
        for r in range(1, min(t + 2, p - 1, k - 1) + 1)
    ]


def _twotothen_shapes(arc: Arc) -> list[Shape]:
    k, p = arc.k, arc.field.p
    if arc.size != arc.q + 2:
        return []
    shapes = []
    for n in range(max(0, k - p), k - 1):
        for m in range(0, n + 1):
            shapes.append(
                Shape((
                    Part("A", n - m),
                    Part("L", k - 1 - m),
                    Part("Omega", k - 2 - n, False),
                    Part("X", m),
                    Part("Y", m),
                ))
            )
    return shapes


def _twotothen_reduction_shapes(arc: Arc) -> list[Shape]:
    k = arc.k
    return [
        Shape((Part("A", n), Part("L", k - 1), Part("Omega", k - 2 - n, False)))
        for n in range(0, k - 1)
    ]


def _appendix_reduction_shapes(arc: Arc) -> list[Shape]:
    return [Shape((Part("l0", 1), Part("D", arc.k - 2, False), Part("Omega", arc.t + 2, False)))]


FAMILIES: dict[str, LemmaFamily] = {
    family.tag: family
    for family in (
        LemmaFamily(
            "tangents",
            _tangent_shapes,
            lambda b, c: identities.check_lemma_of_tangents(b, c["D"], c["x"][0], c["y"][0], c["z"][0]),
        ),
        LemmaFamily(
            "interpolation",
            _interpolation_shapes,
            lambda b, c: identities.check_interpolation(b, c["Y"], c["E"]),
        ),
        LemmaFamily(
            "numerator",
            _transposition_shapes,
            lambda b, c: identities.check_numerator_sign(b, c["A"], c["B"], c["D"], c.variant, c.variant + 1),
        ),
        LemmaFamily(
            "denominator",
            _transposition_shapes,
            lambda b, c: identities.check_denominator_sign(b, c["A"], c["B"], c["D"], c.variant, c.variant + 1),
        ),
        LemmaFamily(
            "switch",
            _switch_shapes,
            lambda b, c: identities.check_switch(b, c["D"], c["A"], c["B"], c["x"][0], c["y"][0]),
        ),
        LemmaFamily(
            "main",
            _main_shapes,
            lambda b, c: identities.check_main_lemma(
                b, MainLemmaConfig(A=c["A"], L=c["L"], D=c["D"], Omega=c["Omega"])
            ),
        ),
        LemmaFamily(
            "appendix",
            _appendix_shapes,
            lambda b, c: identities.check_appendix(b, c["L"], c["D"], c["Omega"]),
        ),
        LemmaFamily(
            "twotothen",
            _twotothen_shapes,
            lambda b, c: identities.check_twotothen(
                b,
                TwoToTheNConfig(
                    A=c["A"], L=c["L"], Omega=c["Omega"], X=c["X"], Y=c["Y"], n=len(c["A"]) + len(c["X"])
                ),
            ),
        ),
        LemmaFamily(
            "twotothen-reduction",
            _twotothen_reduction_shapes,
            lambda b, c: identities.check_twotothen_reduction(b, c["A"], c["L"], c["Omega"]),
        ),
        LemmaFamily(
            "appendix-reduction",
            _appendix_reduction_shapes,
            lambda b, c: identities.check_appendix_reduction(b, c["l0"][0], c["D"], c["Omega"]),
        ),
    )
}

ARC_LEMMAS: tuple[str, ...] = tuple(FAMILIES)


def get_family(tag: str) -> LemmaFamily:
    """
    Look up a lemma family.

    Raises:
        ConfigurationError: Unknown tag (laplace is not arc based).
    """
    if tag not in FAMILIES:
        raise ConfigurationError(f"unknown arc lemma '{tag}', expected one of {list(FAMILIES)}")
    return FAMILIES[tag]


# =============================================================================
# ENUMERATION AND SAMPLING
# =============================================================================

def _live_shapes(arc: Arc, tag: str) -> list[tuple[Shape, int]]:
    return [(shape, shape.count(arc.size)) for shape in get_family(tag).shapes(arc) if shape.count(arc.size) > 0]


def count_configurations(arc: Arc, tag: str) -> int:
    """Total number of valid configurations of a lemma on the arc."""
    return sum(count for _, count in _live_shapes(arc, tag))


def _fill(parts: tuple[Part, ...], remaining: tuple[int, ...]) -> Iterator[dict[str, tuple[int, ...]]]:
    if not parts:
        yield {}
        return
    part, rest = parts[0], parts[1:]
    choose = permutations if part.ordered else combinations
    for chosen in choose(remaining, part.size):
        taken = set(chosen)
        left = tuple(i for i in remaining if i not in taken)
        for values in _fill(rest, left):
            yield {part.name: chosen, **values}


def enumerate_configurations(arc: Arc, tag: str) -> Iterator[Configuration]:
    """Every valid configuration, in deterministic order."""
    for shape, _ in _live_shapes(arc, tag):
        for values in _fill(shape.parts, tuple(range(arc.size))):
            for variant in range(shape.variants):
                yield Configuration(tag, values, variant)


def sample_configurations(arc: Arc, tag: str, count: int, seed: int) -> list[Configuration]:
    """
    Draw configurations with a seeded generator; repeats are possible.

    Raises:
        NoValidConfigurationError: The lemma has no configuration on this arc.
    """
    shapes = [shape for shape, _ in _live_shapes(arc, tag)]
    if not shapes:
        raise NoValidConfigurationError(f"no valid configuration of '{tag}' on {arc.label()}")
    rng = random.Random(seed)
    samples = []
    for _ in range(count):
        shape = rng.choice(shapes)
        remaining = list(range(arc.size))
        values: dict[str, tuple[int, ...]] = {}
        for part in shape.parts:
            chosen = rng.sample(remaining, part.size)
            if not part.ordered:
                chosen.sort()
            values[part.name] = tuple(chosen)
            taken = set(chosen)
            remaining = [i for i in remaining if i not in taken]
        samples.append(Configuration(tag, values, rng.randrange(shape.variants)))
    return samples


def verify_configuration(bundle: TangentBundle, configuration: Configuration) -> IdentityReport:
    """Run the verifier of the configuration's lemma."""
    return get_family(configuration.tag).verify(bundle, configuration)
