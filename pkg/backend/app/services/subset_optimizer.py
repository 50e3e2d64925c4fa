# backend/app/services/subset_optimizer.py
"""
The two subset minimizations behind the gamma_p formula.

    s1 = min f(I) over I with f(I) >= p              (take whole parts)
    s2 = min ceil((p - f(I)) / (t - |I| - 1))        over the admissible family

Part indices are 0-based throughout.
"""
import logging
from itertools import combinations
from typing import Dict, Iterator, List, Optional, Tuple, Union

from app.config import EXHAUSTIVE_MAX_PARTS
from app.models.schemas import INFINITY, PartSet, PartSizes
from app.utils.errors import InvalidArgumentError, PreconditionError

logger = logging.getLogger(__name__)

Demand = Union[int, float]


def check_indices(parts: PartSizes, I: PartSet) -> None:
    for i in I.members:
        if i >= parts.t:
            raise InvalidArgumentError(f"part index {i} out of range for t={parts.t}")


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def _all_subsets(t: int) -> Iterator[Tuple[int, ...]]:
    """Every subset of range(t): by cardinality, ascending-lexicographic within one."""
    for k in range(t + 1):
        yield from combinations(range(t), k)


# --- s1


def min_sum_at_least(
    parts: PartSizes, p: int, exhaustive_max_parts: int = EXHAUSTIVE_MAX_PARTS
) -> Tuple[int, PartSet]:
    """Smallest f(I) >= p with its canonical witness (fewest parts, then lexicographic)."""
    if p < 1:
        raise InvalidArgumentError(f"p must be >= 1, got {p}")
    if parts.total < p:
        raise PreconditionError(f"f(N_t) = {parts.total} < p = {p}: no union of parts reaches p")

    if parts.t <= exhaustive_max_parts:
        s1, members = _min_sum_enumerate(parts.sizes, p)
        logger.debug("s1 by enumeration over %d parts: %d", parts.t, s1)
    else:
        s1, members = _min_sum_dp(parts.sizes, p)
        logger.debug("s1 by subset-sum DP over %d parts: %d", parts.t, s1)
    return s1, PartSet(members=members)


def _min_sum_enumerate(sizes: Tuple[int, ...], p: int) -> Tuple[int, Tuple[int, ...]]:
    best: Optional[Tuple[int, int, Tuple[int, ...]]] = None
    for subset in _all_subsets(len(sizes)):
        f = sum(sizes[i] for i in subset)
        if f < p:
            continue
        key = (f, len(subset), subset)
        if best is None or key < best:
            best = key
    assert best is not None
    return best[0], best[2]


def _min_sum_dp(sizes: Tuple[int, ...], p: int) -> Tuple[int, Tuple[int, ...]]:
    """
    Subset-sum DP keeping, for every reachable sum, its canonical subset.

    A minimal qualifying union drops below p once any part is removed, so
    s1 < p + max(n_i) and larger sums are never tracked.
    """
    limit = p + max(sizes)
    # sum -> (cardinality, members)
    best: Dict[int, Tuple[int, Tuple[int, ...]]] = {0: (0, ())}
    for i, n in enumerate(sizes):
        extended = {}
        for s, (k, members) in best.items():
            target = s + n
            if target >= limit:
                continue
            candidate = (k + 1, members + (i,))
            current = best.get(target)
            if current is None or candidate < current:
                if target not in extended or candidate < extended[target]:
                    extended[target] = candidate
        best.update(extended)
    s1 = min(s for s in best if s >= p)
    return s1, best[s1][1]


# --- s2


def demand(parts: PartSizes, p: int, I: PartSet) -> int:
    """ceil((p - f(I)) / (t - |I| - 1)) for |I| <= t-2 and f(I) < p."""
    check_indices(parts, I)
    f = sum(parts.sizes[i] for i in I.members)
    k = I.size
    if k > parts.t - 2:
        raise InvalidArgumentError(f"|I| = {k} exceeds t - 2 = {parts.t - 2}")
    if f >= p:
        raise InvalidArgumentError(f"f(I) = {f} is not below p = {p}")
    return _ceil_div(p - f, parts.t - k - 1)


def is_admissible(parts: PartSizes, p: int, I: PartSet) -> bool:
    check_indices(parts, I)
    return _admissible_demand(parts.sizes, p, I.members) is not None


def _admissible_demand(sizes: Tuple[int, ...], p: int, members: Tuple[int, ...]) -> Optional[int]:
    """Demand of I when I is admissible, otherwise None."""
    t, k = len(sizes), len(members)
    if k > t - 2:
        return None
    f = sum(sizes[i] for i in members)
    if f >= p:
        return None
    d = _ceil_div(p - f, t - k - 1)
    inside = set(members)
    smallest_excluded = min(n for i, n in enumerate(sizes) if i not in inside)
    return d if d <= smallest_excluded else None


def enumerate_family(parts: PartSizes, p: int) -> List[PartSet]:
    """The admissible family, fewest parts first, lexicographic within a cardinality."""
    if p < 1:
        raise InvalidArgumentError(f"p must be >= 1, got {p}")
    return [
        PartSet(members=subset)
        for subset in _all_subsets(parts.t)
        if _admissible_demand(parts.sizes, p, subset) is not None
    ]


def _check_demand_preconditions(parts: PartSizes, p: int) -> None:
    if p < 1:
        raise InvalidArgumentError(f"p must be >= 1, got {p}")
    if parts.t < 2:
        raise PreconditionError("s2 needs at least two parts")
    if parts.total <= p:
        raise PreconditionError(f"s2 needs f(N_t) > p, got f(N_t) = {parts.total}, p = {p}")


def min_demand(parts: PartSizes, p: int) -> Tuple[Demand, Optional[PartSet]]:
    """
    Exact s2 by enumerating all 2^t subsets.

    Ties break by smallest demand, then fewest parts, then lexicographic order.
    Returns (INFINITY, None) when no subset is admissible.
    """
    _check_demand_preconditions(parts, p)
    best: Optional[Tuple[int, int, Tuple[int, ...]]] = None
    for subset in _all_subsets(parts.t):
        d = _admissible_demand(parts.sizes, p, subset)
        if d is None:
            continue
        key = (d, len(subset), subset)
        if best is None or key < best:
            best = key
    if best is None:
        return INFINITY, None
    return best[0], PartSet(members=best[2])


def min_demand_fast(parts: PartSizes, p: int) -> Tuple[Demand, Optional[PartSet]]:
    """
    s2 by pivot decomposition.

    Sort parts by (size, index). For an admissible I let the pivot be the first
    excluded part in that order: every earlier part is in I and the pivot's size
    is the smallest excluded size. For each pivot j the remaining choice is which
    later parts join I; for each cardinality a bitset subset-sum DP gives the
    largest f(I) <= p - 1, which minimizes the demand for that cardinality.
    """
    _check_demand_preconditions(parts, p)
    t = parts.t
    order = sorted(range(t), key=lambda i: (parts.sizes[i], i))
    best: Optional[Tuple[int, int, Tuple[int, ...]]] = None

    forced_sum = 0
    for j, pivot in enumerate(order):
        if j > t - 2 or forced_sum >= p:
            break
        pivot_size = parts.sizes[pivot]
        max_extra = t - 2 - j
        later = order[j + 1:]
        later_sizes = [parts.sizes[i] for i in later]
        budget = min(p - 1 - forced_sum, sum(later_sizes))
        stages = _count_sum_stages(later_sizes, budget, max_extra)
        reach = stages[-1]
        for m in range(max_extra + 1):
            if not reach[m]:
                continue
            s = reach[m].bit_length() - 1
            d = _ceil_div(p - forced_sum - s, t - j - m - 1)
            if d > pivot_size:
                continue
            chosen = _backtrack(stages, later_sizes, m, s)
            members = tuple(sorted(order[:j] + [later[x] for x in chosen]))
            key = (d, len(members), members)
            if best is None or key < best:
                best = key
        forced_sum += pivot_size

    if best is None:
        return INFINITY, None
    return best[0], PartSet(members=best[2])


def _count_sum_stages(sizes: List[int], budget: int, max_count: int) -> List[List[int]]:
    """
    stages[x][m] is a bitset of sums reachable with exactly m of the first x sizes,
    restricted to sums <= budget.
    """
    mask = (1 << (budget + 1)) - 1
    reach = [0] * (max_count + 1)
    reach[0] = 1
    stages = [reach[:]]
    for n in sizes:
        for m in range(max_count, 0, -1):
            reach[m] |= (reach[m - 1] << n) & mask
        stages.append(reach[:])
    return stages


def _backtrack(stages: List[List[int]], sizes: List[int], m: int, s: int) -> List[int]:
    chosen = []
    for x in range(len(sizes), 0, -1):
        if (stages[x - 1][m] >> s) & 1:
            continue
        chosen.append(x - 1)
        s -= sizes[x - 1]
        m -= 1
    return chosen
