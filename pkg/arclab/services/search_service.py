"""
Search service: exhaustive backtracking for maximum arcs of F_q^k.

This service handles:
- The candidate space of normalized points, in lexicographic code order
- Frame fixing: every arc of size >= k + 1 is projectively equivalent to
  one containing e_1, ..., e_k, e_1 + ... + e_k, so the frame-fixed search
  roots there and adds points in increasing index order
- The naive search from the empty arc, kept as a completeness oracle
- Splitting at the first free decision level and merging branch results
  by size, then lexicographic witness

Each branch prunes only against its own best size, so node counts and
witnesses do not depend on the number of workers.
"""

import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from arclab.core.exceptions import BudgetExhaustedError, DimensionError
from arclab.core.logging import get_logger
from arclab.models.arc import Arc
from arclab.schemas.search import SearchResult, SearchTask
from arclab.services.arc_service import bush_frame, normalized_points
from arclab.utils.gf import FieldSpec, field_new
from arclab.utils.linalg import Vek, is_independent, nullspace_forms

logger = get_logger(__name__)

# Nodes between wall-clock checks
TIME_CHECK_INTERVAL = 4096


class SearchSpace:
    """
    Normalized points of F_q^k with memoized span masks.

    A mask is an int whose bit i is set when point i lies in the span.
    """

    def __init__(self, field: FieldSpec, k: int):
        self.field = field
        self.k = k
        self.points: list[Vek] = normalized_points(field, k)
        self.index: dict[Vek, int] = {point: i for i, point in enumerate(self.points)}
        self.full_mask = (1 << len(self.points)) - 1
        self._spans: dict[tuple[int, ...], int] = {}

    def __len__(self) -> int:
        return len(self.points)

    def span_mask(self, indices: Sequence[int]) -> int:
        """Mask of the points in the span of the given independent points."""
        key = tuple(sorted(indices))
        mask = self._spans.get(key)
        if mask is None:
            forms = nullspace_forms(self.field, [self.points[i] for i in key], self.k)
            mask = 0
            for i, point in enumerate(self.points):
                if all(form.evaluate(self.field, point) == 0 for form in forms):
                    mask |= 1 << i
            self._spans[key] = mask
        return mask

    def extend(self, arc: Sequence[int], candidate: int, alive: int) -> int:
        """
        Alive mask after adding candidate to arc.

        Kills the span of every (k-1)-subset containing the candidate, or
        the span of the whole set while it has fewer than k points.
        """
        if len(arc) + 1 <= self.k - 1:
            return alive & ~self.span_mask(tuple(arc) + (candidate,))
        for subset in combinations(arc, self.k - 2):
            alive &= ~self.span_mask(subset + (candidate,))
        return alive

    def grow(self, indices: Sequence[int]) -> int:
        """Alive mask of a whole prefix, built point by point."""
        alive = self.full_mask
        for j, i in enumerate(indices):
            alive = self.extend(indices[:j], i, alive)
        return alive

    def frame(self) -> list[int]:
        """Indices of e_1, ..., e_k, e_1 + ... + e_k."""
        return [self.index[point] for point in bush_frame(self.field, self.k).points]


@lru_cache(maxsize=8)
def get_search_space(field: FieldSpec, k: int) -> SearchSpace:
    """Cached search space; each worker process builds its own."""
    space = SearchSpace(field, k)
    logger.debug(f"Search space for GF({field.q})^{k}: {len(space)} normalized points")
    return space


@dataclass
class BranchState:
    """Mutable counters of one depth-first search."""

    census: bool
    node_budget: int
    deadline: float
    nodes: int = 0
    best: int = 0
    witness: tuple[int, ...] = ()
    complete: Counter = dataclass_field(default_factory=Counter)


def _visit(space: SearchSpace, arc: list[int], last: int, alive: int, state: BranchState) -> None:
    state.nodes += 1
    if state.nodes > state.node_budget:
        raise BudgetExhaustedError(f"node budget {state.node_budget} exhausted", nodes=state.nodes)
    if state.nodes % TIME_CHECK_INTERVAL == 0 and time.monotonic() > state.deadline:
        raise BudgetExhaustedError("time budget exhausted", nodes=state.nodes)

    size = len(arc)
    if size > state.best:
        state.best = size
        state.witness = tuple(arc)
    if state.census and alive == 0:
        state.complete[size] += 1

    candidates = alive >> (last + 1) << (last + 1)
    if not state.census and size + candidates.bit_count() <= state.best:
        return
    while candidates:
        low = candidates & -candidates
        candidates ^= low
        if not state.census and size + 1 + candidates.bit_count() <= state.best:
            break
        c = low.bit_length() - 1
        arc.append(c)
        _visit(space, arc, c, space.extend(arc[:-1], c, alive), state)
        arc.pop()


@dataclass(frozen=True)
class BranchResult:
    best: int
    witness: tuple[int, ...]
    nodes: int
    complete: dict[int, int]


def search_branch(
    field: FieldSpec,
    k: int,
    prefix: tuple[int, ...],
    census: bool,
    node_budget: int,
    deadline: float,
) -> BranchResult:
    """
    Depth-first search below a fixed prefix whose last point bounds the candidates.

    Top level so a process pool can run it.
    """
    space = get_search_space(field, k)
    state = BranchState(census=census, node_budget=node_budget, deadline=deadline)
    _visit(space, list(prefix), prefix[-1], space.grow(prefix), state)
    return BranchResult(state.best, state.witness, state.nodes, dict(state.complete))


def frame_fix(field: FieldSpec, k: int) -> Arc:
    """The search root e_1, ..., e_k, e_1 + ... + e_k."""
    return bush_frame(field, k)


def max_arc_size(task: SearchTask) -> SearchResult:
    """
    Exact maximum arc size of F_q^k with a witness.

    Args:
        task: Field, dimension, mode, budgets and parallel width.

    Returns:
        SearchResult; identical size, witness and node count for every jobs value.

    Raises:
        BudgetExhaustedError: The node budget or time budget ran out.
    """
    field = field_new(task.p, task.h)
    k = task.k
    census = task.mode == "census"
    start = time.monotonic()
    deadline = start + task.time_budget

    space = get_search_space(field, k)
    root = [] if task.naive else space.frame()
    alive = space.grow(root)

    # The root node is visited here; its children become branches
    nodes = 1
    best, witness = len(root), tuple(root)
    complete: Counter = Counter()
    if census and alive == 0:
        complete[len(root)] += 1
    children = [i for i in range(len(space)) if alive >> i & 1]
    prefixes = [tuple(root) + (c,) for c in children]

    logger.info(
        f"Searching GF({field.q})^{k} ({'naive' if task.naive else 'frame-fixed'}, {task.mode}): "
        f"{len(prefixes)} branches, jobs={task.jobs}"
    )
    args = [(field, k, prefix, census, task.node_budget, deadline) for prefix in prefixes]
    if task.jobs > 1 and len(prefixes) > 1:
        with ProcessPoolExecutor(max_workers=task.jobs) as executor:
            results = list(executor.map(search_branch, *zip(*args)))
    else:
        results = [search_branch(*arg) for arg in args]

    for result in results:
        nodes += result.nodes
        complete.update(result.complete)
        if (result.best, _negated(result.witness)) > (best, _negated(witness)):
            best, witness = result.best, result.witness
    if nodes > task.node_budget:
        raise BudgetExhaustedError(f"node budget {task.node_budget} exhausted", nodes=nodes)

    elapsed = round(time.monotonic() - start, 3)
    logger.info(f"GF({field.q})^{k}: max={best} after {nodes} nodes in {elapsed}s")
    return SearchResult(
        p=field.p,
        h=field.h,
        k=k,
        size=best,
        witness=[list(space.points[i]) for i in witness],
        nodes=nodes,
        elapsed=elapsed,
        naive=task.naive,
        census=dict(sorted(complete.items())) if census else None,
    )


def _negated(witness: tuple[int, ...]) -> tuple[int, ...]:
    # Larger after negation means lexicographically smaller
    return tuple(-i for i in witness)


def witness_arc(result: SearchResult) -> Arc:
    """The witness of a search result as an Arc."""
    field = field_new(result.p, result.h)
    return Arc(field, result.k, tuple(tuple(row) for row in result.witness), name="witness")


def extend_candidates(arc: Arc) -> list[Vek]:
    """
    Normalized points x, in lexicographic order, such that arc + x still
    passes the incremental check: every min(k, n+1)-subset containing x is
    independent.
    """
    field, k = arc.field, arc.k
    if k < 1:
        raise DimensionError("dimension must be positive")
    size = min(k, arc.size + 1) - 1
    candidates = []
    for x in normalized_points(field, k):
        if all(is_independent(field, arc.vectors(subset) + [x]) for subset in combinations(range(arc.size), size)):
            candidates.append(x)
    return candidates
