"""
Identity service: one verifier per lemma about tangent functions.

Each verifier evaluates the statement literally: every sum runs over all
the subsets it names, every determinant takes its rows in the order the
statement writes them (det(z, A, L minus B, D) means z, then A in order,
then L minus B in L-order, then D), and signs are applied by parity.
No term is simplified away, so a fault in the Segre or tangent machinery
cannot cancel itself.

Configurations are given as point indices into the arc of the bundle.
"""

from itertools import combinations
from typing import Iterable, Sequence, Union

from arclab.core.exceptions import ConfigurationError
from arclab.core.logging import get_logger
from arclab.schemas.identity import IdentityReport, MainLemmaConfig, TwoToTheNConfig
from arclab.services.tangent_service import TangentBundle, segre, sigma
from arclab.utils.gf import Fe, FieldSpec
from arclab.utils.linalg import Vek, det_seq

logger = get_logger(__name__)

IndexGroup = Union[int, Sequence[int]]


# =============================================================================
# HELPERS
# =============================================================================

def _rows(bundle: TangentBundle, groups: Sequence[IndexGroup]) -> list[Vek]:
    points = bundle.arc.points
    rows: list[Vek] = []
    for group in groups:
        if isinstance(group, int):
            rows.append(points[group])
        else:
            rows.extend(points[i] for i in group)
    return rows


def _det_inv(bundle: TangentBundle, *groups: IndexGroup) -> Fe:
    """det(groups...)^{-1} with rows in the given order."""
    det = det_seq(bundle.field, _rows(bundle, groups), bundle.arc.k)
    if det == 0:
        raise ConfigurationError(f"singular determinant on rows {list(groups)}")
    return bundle.field.inv(det)


def _product_inv_dets(bundle: TangentBundle, zs: Iterable[int], *rest: IndexGroup) -> Fe:
    """Product over z of det(z, rest...)^{-1}."""
    field = bundle.field
    return field.product(_det_inv(bundle, z, *rest) for z in zs)


def _require_disjoint(bundle: TangentBundle, **parts: Sequence[int]) -> None:
    """All indices in range and no index shared or repeated."""
    seen: dict[int, str] = {}
    size = bundle.arc.size
    for name, indices in parts.items():
        for i in indices:
            if not 0 <= i < size:
                raise ConfigurationError(f"{name}: index {i} is not a point of {bundle.arc.label()}")
            if i in seen:
                raise ConfigurationError(f"index {i} appears in both {seen[i]} and {name}")
            seen[i] = name


def _require_size(name: str, values: Sequence, size: int) -> None:
    if size < 0:
        raise ConfigurationError(f"{name} would need negative size {size}")
    if len(values) != size:
        raise ConfigurationError(f"{name} must have {size} entries, got {len(values)}")


def _minus(sequence: Sequence[int], removed: Iterable[int]) -> tuple[int, ...]:
    """Subsequence of sequence without removed, order kept."""
    removed = set(removed)
    return tuple(i for i in sequence if i not in removed)


def _sum(field: FieldSpec, terms: Iterable[Fe]) -> Fe:
    total = field.zero
    for term in terms:
        total = field.add(total, term)
    return total


# =============================================================================
# LEMMA OF TANGENTS AND INTERPOLATION
# =============================================================================

def check_lemma_of_tangents(bundle: TangentBundle, D: Sequence[int], x: int, y: int, z: int) -> IdentityReport:
    """
    T_{x+D}(y) T_{y+D}(z) T_{z+D}(x) = (-1)^{t+1} T_{x+D}(z) T_{y+D}(x) T_{z+D}(y).

    Args:
        bundle: Tangent bundle of an arc with k >= 3 and t >= 1.
        D: k - 3 point indices.
        x, y, z: Distinct points outside D.

    Raises:
        ConfigurationError: Size or overlap violations.
    """
    arc, field = bundle.arc, bundle.field
    if arc.k < 3:
        raise ConfigurationError("the lemma of tangents needs k >= 3")
    if bundle.t < 1:
        raise ConfigurationError(f"the lemma of tangents assumes t >= 1, got t={bundle.t}")
    _require_size("D", D, arc.k - 3)
    _require_disjoint(bundle, D=D, x=[x], y=[y], z=[z])

    D = tuple(D)

    def T(base: int, point: int) -> Fe:
        return bundle.at((base,) + D, point)

    lhs = field.product((T(x, y), T(y, z), T(z, x)))
    rhs = field.sign(field.product((T(x, z), T(y, x), T(z, y))), bundle.t + 1)
    return IdentityReport(
        lemma="tangents",
        configuration={"D": list(D), "x": x, "y": y, "z": z},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )


def interpolation_terms(bundle: TangentBundle, Y: Sequence[int], E: Sequence[int]) -> list[Fe]:
    """Terms T_Y(a) prod_{z in E - a} det(z, a, Y)^{-1}, one per a in E."""
    field = bundle.field
    return [
        field.mul(bundle.at(Y, a), _product_inv_dets(bundle, _minus(E, [a]), a, Y))
        for a in E
    ]


def check_interpolation(bundle: TangentBundle, Y: Sequence[int], E: Sequence[int]) -> IdentityReport:
    """
    0 = sum_{a in E} T_Y(a) prod_{z in E - a} det(z, a, Y)^{-1}.

    Requires |S| >= k + t > k, |Y| = k - 2, |E| = t + 2, Y and E disjoint.
    """
    arc = bundle.arc
    if not arc.size >= arc.k + arc.t > arc.k:
        raise ConfigurationError(
            f"interpolation needs |S| >= k + t > k, got |S|={arc.size}, k={arc.k}, t={arc.t}"
        )
    _require_size("Y", Y, arc.k - 2)
    _require_size("E", E, arc.t + 2)
    _require_disjoint(bundle, Y=Y, E=E)

    total = _sum(bundle.field, interpolation_terms(bundle, tuple(Y), tuple(E)))
    return IdentityReport(
        lemma="interpolation",
        configuration={"Y": list(Y), "E": list(E)},
        sum=total,
        passed=total == 0,
    )


# =============================================================================
# SEGRE PRODUCT SIGN LEMMAS
# =============================================================================

def _swap(sequence: Sequence[int], i: int, j: int) -> tuple[int, ...]:
    if not (0 <= i < len(sequence) and 0 <= j < len(sequence)) or i == j:
        raise ConfigurationError(f"cannot interchange positions {i} and {j} of {list(sequence)}")
    swapped = list(sequence)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    return tuple(swapped)


def check_numerator_sign(
    bundle: TangentBundle, A: Sequence[int], B: Sequence[int], D: Sequence[int], i: int, j: int
) -> IdentityReport:
    """P_D(A*, B) = (-1)^{t+1} P_D(A, B), where A* interchanges positions i and j of A."""
    _require_disjoint(bundle, A=A, B=B, D=D)
    swapped = _swap(A, i, j)
    lhs = segre(bundle, D, swapped, B)
    rhs = bundle.field.sign(segre(bundle, D, A, B), bundle.t + 1)
    return IdentityReport(
        lemma="numerator",
        configuration={"A": list(A), "B": list(B), "D": list(D), "swap": [i, j]},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )


def check_denominator_sign(
    bundle: TangentBundle, A: Sequence[int], B: Sequence[int], D: Sequence[int], i: int, j: int
) -> IdentityReport:
    """P_D(A, B*) = (-1)^{t+1} P_D(A, B), where B* interchanges positions i and j of B."""
    _require_disjoint(bundle, A=A, B=B, D=D)
    swapped = _swap(B, i, j)
    lhs = segre(bundle, D, A, swapped)
    rhs = bundle.field.sign(segre(bundle, D, A, B), bundle.t + 1)
    return IdentityReport(
        lemma="denominator",
        configuration={"A": list(A), "B": list(B), "D": list(D), "swap": [i, j]},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )


def check_switch(
    bundle: TangentBundle, D: Sequence[int], A: Sequence[int], B: Sequence[int], x: int, y: int
) -> IdentityReport:
    """
    T_{D+B}(y) / T_{D+B}(x) * P_{D+y}((x) + A, B) = (-1)^{t+1} P_{D+x}((y) + A, B).

    Requires |A| = |B| - 1 and |D| = k - |B| - 2, everything disjoint.
    """
    arc, field = bundle.arc, bundle.field
    if len(B) < 1:
        raise ConfigurationError("the switch lemma needs |B| >= 1")
    _require_size("A", A, len(B) - 1)
    _require_size("D", D, arc.k - len(B) - 2)
    _require_disjoint(bundle, D=D, A=A, B=B, x=[x], y=[y])

    base = tuple(D) + tuple(B)
    ratio = field.div(bundle.at(base, y), bundle.at(base, x))
    lhs = field.mul(ratio, segre(bundle, tuple(D) + (y,), (x,) + tuple(A), B))
    rhs = field.sign(segre(bundle, tuple(D) + (x,), (y,) + tuple(A), B), bundle.t + 1)
    return IdentityReport(
        lemma="switch",
        configuration={"D": list(D), "A": list(A), "B": list(B), "x": x, "y": y},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )


# =============================================================================
# MAIN LEMMA
# =============================================================================

def validate_main_config(bundle: TangentBundle, cfg: MainLemmaConfig) -> None:
    """
    Check the hypotheses of the main lemma.

    n <= r <= n + p - 1, r <= t + 2, |D| = k - 1 - r, |Omega| = t + 1 - n,
    all sequences pairwise disjoint.

    Raises:
        ConfigurationError: A hypothesis fails.
    """
    arc, p, t = bundle.arc, bundle.field.p, bundle.t
    n, r = cfg.n, cfg.r
    if not n <= r <= n + p - 1:
        raise ConfigurationError(f"main lemma needs n <= r <= n + p - 1, got n={n}, r={r}, p={p}")
    if r > t + 2:
        raise ConfigurationError(f"main lemma needs r <= t + 2, got r={r}, t={t}")
    _require_size("D", cfg.D, arc.k - 1 - r)
    _require_size("Omega", cfg.Omega, t + 1 - n)
    _require_disjoint(bundle, A=cfg.A, L=cfg.L, D=cfg.D, Omega=cfg.Omega)


def main_lemma_lhs_terms(
    bundle: TangentBundle, A: Sequence[int], L: Sequence[int], D: Sequence[int], Omega: Sequence[int]
) -> list[Fe]:
    """
    Left side terms, one per n-subset B of L in combination order:
    (-1)^sigma(B, L) P_{D + (L - B)}(A, B) prod_{z in Omega + B} det(z, A, L - B, D)^{-1}.
    """
    field, t = bundle.field, bundle.t
    A, L, D = tuple(A), tuple(L), tuple(D)
    terms = []
    for B in combinations(L, len(A)):
        rest = _minus(L, B)
        value = field.mul(
            segre(bundle, D + rest, A, B),
            _product_inv_dets(bundle, tuple(Omega) + B, A, rest, D),
        )
        terms.append(field.sign(value, sigma(B, L, t)))
    return terms


def main_lemma_rhs_terms(
    bundle: TangentBundle, A: Sequence[int], L: Sequence[int], D: Sequence[int], Omega: Sequence[int]
) -> list[Fe]:
    """
    Right side terms before the global sign, one per (r - n)-subset Delta of Omega:
    P_D(A + Delta, L) prod_{z in (Omega - Delta) + L} det(z, A, Delta, D)^{-1}.
    """
    field = bundle.field
    A, L, D = tuple(A), tuple(L), tuple(D)
    terms = []
    for delta in combinations(Omega, len(L) - len(A)):
        zs = _minus(Omega, delta) + L
        terms.append(
            field.mul(
                segre(bundle, D, A + delta, L),
                _product_inv_dets(bundle, zs, A, delta, D),
            )
        )
    return terms


def check_main_lemma(bundle: TangentBundle, cfg: MainLemmaConfig) -> IdentityReport:
    """
    The main lemma:

        sum_{B in L, |B| = n} (-1)^sigma(B,L) P_{D+(L-B)}(A, B) prod_{z in Omega+B} det(z, A, L-B, D)^{-1}
        = (-1)^{(r-n)(nt+n+1)} sum_{Delta in Omega, |Delta| = r-n}
              P_D(A+Delta, L) prod_{z in (Omega-Delta)+L} det(z, A, Delta, D)^{-1}

    Raises:
        ConfigurationError: A hypothesis fails.
    """
    validate_main_config(bundle, cfg)
    field, t = bundle.field, bundle.t
    n, r = cfg.n, cfg.r

    lhs = _sum(field, main_lemma_lhs_terms(bundle, cfg.A, cfg.L, cfg.D, cfg.Omega))
    rhs = field.sign(
        _sum(field, main_lemma_rhs_terms(bundle, cfg.A, cfg.L, cfg.D, cfg.Omega)),
        (r - n) * (n * t + n + 1),
    )
    return IdentityReport(
        lemma="main",
        configuration={"A": cfg.A, "L": cfg.L, "D": cfg.D, "Omega": cfg.Omega, "n": n, "r": r},
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )


# =============================================================================
# SUMS FOR |S| = q + 2
# =============================================================================

def validate_twotothen_config(bundle: TangentBundle, cfg: TwoToTheNConfig) -> None:
    """
    Check the hypotheses of the q + 2 sum lemma.

    |S| = q + 2, n >= k - p, m <= n, |A| = n - m, |L| = k - 1 - m,
    |Omega| = k - 2 - n, |X| = |Y| = m, all disjoint.
    """
    arc, p = bundle.arc, bundle.field.p
    n, m, k = cfg.n, cfg.m, arc.k
    if arc.size != arc.q + 2:
        raise ConfigurationError(f"the lemma needs |S| = q + 2, got |S|={arc.size}, q={arc.q}")
    if n < k - p:
        raise ConfigurationError(f"the lemma needs n >= k - p, got n={n}, k={k}, p={p}")
    if m > n:
        raise ConfigurationError(f"m={m} exceeds n={n}")
    _require_size("A", cfg.A, n - m)
    _require_size("L", cfg.L, k - 1 - m)
    _require_size("Omega", cfg.Omega, k - 2 - n)
    _require_size("Y", cfg.Y, m)
    _require_disjoint(bundle, A=cfg.A, L=cfg.L, Omega=cfg.Omega, X=cfg.X, Y=cfg.Y)


def twotothen_terms(
    bundle: TangentBundle,
    A: Sequence[int],
    L: Sequence[int],
    Omega: Sequence[int],
    X: Sequence[int],
    Y: Sequence[int],
    n: int,
) -> list[Fe]:
    """
    Terms of the double sum, B in combination order outermost, tau in
    combination order by size within:

        (-1)^{sigma(B,L) + sigma(X_tau,X) + |tau|}
        P_{(L-B) + X_{M-tau}}(A + Y_tau, B + X_tau)
        prod_{z in Omega + B + X_tau + Y_{M-tau}} det(z, A, X_{M-tau}, Y_tau, L-B)^{-1}
    """
    field, t = bundle.field, bundle.t
    A, L, Omega, X, Y = tuple(A), tuple(L), tuple(Omega), tuple(X), tuple(Y)
    m = len(X)
    taus = [tau for size in range(m + 1) for tau in combinations(range(m), size)]

    terms = []
    for B in combinations(L, n - m):
        rest = _minus(L, B)
        for tau in taus:
            complement = tuple(i for i in range(m) if i not in tau)
            x_tau = tuple(X[i] for i in tau)
            y_tau = tuple(Y[i] for i in tau)
            x_rest = tuple(X[i] for i in complement)
            y_rest = tuple(Y[i] for i in complement)

            value = field.mul(
                segre(bundle, rest + x_rest, A + y_tau, B + x_tau),
                _product_inv_dets(bundle, Omega + B + x_tau + y_rest, A, x_rest, y_tau, rest),
            )
            exponent = sigma(B, L, t) + sigma(x_tau, X, t) + len(tau)
            terms.append(field.sign(value, exponent))
    return terms


def check_twotothen(bundle: TangentBundle, cfg: TwoToTheNConfig) -> IdentityReport:
    """
    The double sum over B and tau, expected to vanish when |S| = q + 2 and n >= k - p.

    Reports for t < 1 are informational: the lemma is stated under t >= 1.
    """
    validate_twotothen_config(bundle, cfg)
    total = _sum(bundle.field, twotothen_terms(bundle, cfg.A, cfg.L, cfg.Omega, cfg.X, cfg.Y, cfg.n))
    informational = bundle.t < 1
    if informational:
        logger.debug(f"twotothen at t={bundle.t} is informational, sum={total}")
    return IdentityReport(
        lemma="twotothen",
        configuration={"A": cfg.A, "L": cfg.L, "Omega": cfg.Omega, "X": cfg.X, "Y": cfg.Y, "n": cfg.n, "m": cfg.m},
        sum=total,
        passed=total == 0,
        informational=informational,
    )


def check_twotothen_reduction(
    bundle: TangentBundle, A: Sequence[int], L: Sequence[int], Omega: Sequence[int]
) -> IdentityReport:
    """
    At m = 0 the q + 2 double sum has the terms of the main lemma left side
    with r = k - 1 and D empty. The two term lists come from different
    builders and are compared term for term.

    When |S| = q + 2 and n >= k - p the main lemma applies with
    |Omega| = k - 2 - n < r - n, so its right side is an empty sum and the
    reduced sum itself must vanish; the report then also carries that sum.
    On other arcs only the term structure is checked.

    Requires |L| = k - 1, |A| <= k - 2 and A, L, Omega disjoint.
    """
    arc, field = bundle.arc, bundle.field
    n = len(A)
    _require_size("L", L, arc.k - 1)
    if n > arc.k - 2:
        raise ConfigurationError(f"|A| must be at most k - 2, got {n}")
    _require_disjoint(bundle, A=A, L=L, Omega=Omega)

    sum_terms = twotothen_terms(bundle, A, L, Omega, (), (), n)
    lemma_terms = main_lemma_lhs_terms(bundle, A, L, (), Omega)
    structural = sum_terms == lemma_terms
    closed_form = arc.size == arc.q + 2 and n >= arc.k - field.p
    total = _sum(field, sum_terms)
    return IdentityReport(
        lemma="twotothen-reduction",
        configuration={"A": list(A), "L": list(L), "Omega": list(Omega), "n": n},
        sum=total if closed_form and structural else None,
        passed=structural and (not closed_form or total == 0),
        terms=sum_terms,
    )


# =============================================================================
# APPENDIX LEMMA
# =============================================================================

def appendix_terms(bundle: TangentBundle, L: Sequence[int], D: Sequence[int], Omega: Sequence[int]) -> list[Fe]:
    """
    Terms P_D(Delta, L) prod_{z in (Omega - Delta) + (L - l0)} det(z, Delta, D)^{-1},
    one per r-subset Delta of Omega.
    """
    field = bundle.field
    L, D = tuple(L), tuple(D)
    terms = []
    for delta in combinations(Omega, len(L)):
        zs = _minus(Omega, delta) + L[1:]
        terms.append(field.mul(segre(bundle, D, delta, L), _product_inv_dets(bundle, zs, delta, D)))
    return terms


def check_appendix(bundle: TangentBundle, L: Sequence[int], D: Sequence[int], Omega: Sequence[int]) -> IdentityReport:
    """
    0 = sum_{Delta in Omega, |Delta| = r} P_D(Delta, L) prod_{z in (Omega-Delta)+(L-l0)} det(z, Delta, D)^{-1}

    l0 is the first element of L. Requires 1 <= r <= t + 2, r <= p - 1,
    |D| = k - 1 - r, |Omega| = t + 2, all disjoint.
    """
    arc, p, t = bundle.arc, bundle.field.p, bundle.t
    r = len(L)
    if not 1 <= r <= t + 2:
        raise ConfigurationError(f"appendix lemma needs 1 <= r <= t + 2, got r={r}, t={t}")
    if r > p - 1:
        raise ConfigurationError(f"appendix lemma needs r <= p - 1, got r={r}, p={p}")
    _require_size("D", D, arc.k - 1 - r)
    _require_size("Omega", Omega, t + 2)
    _require_disjoint(bundle, L=L, D=D, Omega=Omega)

    total = _sum(bundle.field, appendix_terms(bundle, L, D, Omega))
    return IdentityReport(
        lemma="appendix",
        configuration={"L": list(L), "D": list(D), "Omega": list(Omega), "r": r},
        sum=total,
        passed=total == 0,
    )


def check_appendix_reduction(bundle: TangentBundle, l0: int, D: Sequence[int], Omega: Sequence[int]) -> IdentityReport:
    """
    At r = 1 each appendix term times T_D(l0) is the matching interpolation
    term with Y = D and E = Omega.
    """
    arc, field = bundle.arc, bundle.field
    _require_size("D", D, arc.k - 2)
    _require_size("Omega", Omega, bundle.t + 2)
    _require_disjoint(bundle, L=[l0], D=D, Omega=Omega)

    scale = bundle.at(D, l0)
    scaled = [field.mul(term, scale) for term in appendix_terms(bundle, (l0,), D, Omega)]
    expected = interpolation_terms(bundle, tuple(D), tuple(Omega))
    return IdentityReport(
        lemma="appendix-reduction",
        configuration={"l0": l0, "D": list(D), "Omega": list(Omega)},
        passed=scaled == expected,
        terms=scaled,
    )


# =============================================================================
# LAPLACE EXPANSION
# =============================================================================

def check_laplace(
    field: FieldSpec,
    W: Sequence[Vek],
    X: Sequence[Vek],
    L: Sequence[Vek],
    y: Vek,
) -> IdentityReport:
    """
    sum_{j=1}^{n+1} (-1)^{j-1} det(y, W - w_j, L) det(w_j, X, L) = det(W, L) det(y, X, L).

    The identity is polynomial in the vectors, so only the sizes are
    enforced; whether W + L is a basis is recorded in the configuration.

    Args:
        field: The field.
        W: n + 1 vectors.
        X: n vectors.
        L: k - n - 1 vectors.
        y: A vector.
    """
    k = len(y)
    n = len(X)
    _require_size("W", W, n + 1)
    _require_size("L", L, k - n - 1)
    if any(len(v) != k for v in (*W, *X, *L)):
        raise ConfigurationError(f"all vectors must have length {k}")

    W, X, L = [tuple(v) for v in W], [tuple(v) for v in X], [tuple(v) for v in L]
    lhs = field.zero
    for j, w in enumerate(W):
        others = W[:j] + W[j + 1 :]
        term = field.mul(det_seq(field, (y, others, L), k), det_seq(field, (w, X, L), k))
        lhs = field.add(lhs, field.sign(term, j))

    det_wl = det_seq(field, (W, L), k)
    rhs = field.mul(det_wl, det_seq(field, (y, X, L), k))
    return IdentityReport(
        lemma="laplace",
        configuration={
            "W": [list(v) for v in W],
            "X": [list(v) for v in X],
            "L": [list(v) for v in L],
            "y": list(y),
            "basis": det_wl != 0,
        },
        lhs=lhs,
        rhs=rhs,
        passed=lhs == rhs,
    )
