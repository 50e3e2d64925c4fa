# backend/app/services/domination_oracle.py
"""
Ground truth for gamma_p that does not rely on the closed formula.

count_vector_gamma works on per-part counts of a complete multipartite graph:
a vertex of part i sees exactly |D| - c_i selected neighbors. The generic
solvers know only the definition of p-domination and run on any Graph.
"""
import logging
from itertools import combinations, product
from math import prod
from typing import Iterable, Optional, Tuple

import networkx as nx

from app.config import MAX_COUNT_STATES, MAX_EXPAND_VERTICES, MAX_GENERIC_VERTICES
from app.models.graph import Graph
from app.models.schemas import PartSizes, VertexSet, WitnessCounts
from app.utils.errors import InvalidArgumentError, ResourceLimitError

logger = logging.getLogger(__name__)


def _check_p(p: int) -> None:
    if p < 1:
        raise InvalidArgumentError(f"p must be >= 1, got {p}")


def expand_graph(parts: PartSizes, max_vertices: int = MAX_EXPAND_VERTICES) -> Graph:
    """K_{n_0,...,n_{t-1}} with blockwise ids; part i holds [offset_i, offset_i + n_i)."""
    n = parts.total
    if n > max_vertices:
        logger.warning("refusing to expand %d vertices (cap %d)", n, max_vertices)
        raise ResourceLimitError(f"{n} vertices exceed the expansion cap of {max_vertices}")
    # networkx numbers the blocks consecutively in part order
    return Graph.from_networkx(nx.complete_multipartite_graph(*parts.sizes))


def _vertex_mask(g: Graph, D: Iterable[int]) -> int:
    mask = 0
    for v in D:
        if not 0 <= v < g.vertex_count:
            raise InvalidArgumentError(f"vertex id {v} out of range 0..{g.vertex_count - 1}")
        mask |= 1 << v
    return mask


def is_p_dominating(g: Graph, D: Iterable[int], p: int) -> bool:
    """True iff every vertex outside D has at least p neighbors in D."""
    _check_p(p)
    return _dominates(g.neighbor_masks, g.vertex_count, _vertex_mask(g, D), p)


def forced_vertices(g: Graph, p: int) -> VertexSet:
    """Vertices of degree at most p - 1; they lie in every p-dominating set."""
    _check_p(p)
    return tuple(v for v in range(g.vertex_count) if g.degree(v) <= p - 1)


def count_vector_gamma(
    parts: PartSizes, p: int, max_states: int = MAX_COUNT_STATES
) -> Tuple[int, WitnessCounts]:
    """Minimum over all count vectors, with the lexicographically smallest optimum."""
    _check_p(p)
    states = prod(n + 1 for n in parts.sizes)
    if states > max_states:
        logger.warning("refusing %d count vectors (cap %d)", states, max_states)
        raise ResourceLimitError(f"{states} count vectors exceed the cap of {max_states}")

    best: Optional[Tuple[int, ...]] = None
    best_total = parts.total + 1
    for counts in product(*(range(n + 1) for n in parts.sizes)):
        total = sum(counts)
        if total >= best_total:
            continue
        if all(c == n or total - c >= p for c, n in zip(counts, parts.sizes)):
            best, best_total = counts, total
    assert best is not None
    return best_total, WitnessCounts(counts=best)


def _check_generic(g: Graph, p: int, max_vertices: int) -> None:
    _check_p(p)
    if g.vertex_count > max_vertices:
        logger.warning("refusing exhaustive search on %d vertices (cap %d)", g.vertex_count, max_vertices)
        raise ResourceLimitError(
            f"{g.vertex_count} vertices exceed the exhaustive search cap of {max_vertices}"
        )


def _dominates(masks: Tuple[int, ...], n: int, chosen: int, p: int) -> bool:
    for v in range(n):
        if not (chosen >> v) & 1 and (masks[v] & chosen).bit_count() < p:
            return False
    return True


def _members(mask: int) -> VertexSet:
    return tuple(v for v in range(mask.bit_length()) if (mask >> v) & 1)


def exact_gamma_generic(
    g: Graph, p: int, max_vertices: int = MAX_GENERIC_VERTICES
) -> Tuple[int, VertexSet]:
    """
    Exact gamma_p by increasing cardinality. Low-degree vertices are taken
    first; the remaining vertices are tried in lexicographic combinations, so
    the first hit is the lexicographically least minimum p-dominating set.
    """
    _check_generic(g, p, max_vertices)
    n = g.vertex_count
    masks = g.neighbor_masks
    forced = _vertex_mask(g, forced_vertices(g, p))
    rest = [v for v in range(n) if not (forced >> v) & 1]

    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            chosen = forced
            for v in combo:
                chosen |= 1 << v
            if _dominates(masks, n, chosen, p):
                witness = _members(chosen)
                logger.debug("generic search: gamma_%d = %d on %d vertices", p, len(witness), n)
                return len(witness), witness
    raise AssertionError("the full vertex set always p-dominates")


def exact_gamma_bounded(
    g: Graph, p: int, max_vertices: int = MAX_GENERIC_VERTICES
) -> Tuple[int, VertexSet]:
    """
    Exact gamma_p by include/exclude branching. A branch dies once it is no
    smaller than the incumbent or some excluded vertex can no longer collect p
    chosen neighbors. The witness is minimum but not necessarily canonical.
    """
    _check_generic(g, p, max_vertices)
    n = g.vertex_count
    masks = g.neighbor_masks
    forced = _vertex_mask(g, forced_vertices(g, p))
    order = [v for v in range(n) if not (forced >> v) & 1]
    best = [n, (1 << n) - 1]

    def branch(index: int, chosen: int, excluded: int, undecided: int) -> None:
        size = chosen.bit_count()
        if size >= best[0]:
            return
        pending = excluded
        while pending:
            low = pending & -pending
            v = low.bit_length() - 1
            if (masks[v] & (chosen | undecided)).bit_count() < p:
                return
            pending ^= low
        if index == len(order):
            best[0], best[1] = size, chosen
            return
        bit = 1 << order[index]
        branch(index + 1, chosen, excluded | bit, undecided & ~bit)
        branch(index + 1, chosen | bit, excluded, undecided & ~bit)

    undecided = 0
    for v in order:
        undecided |= 1 << v
    branch(0, forced, 0, undecided)
    return best[0], _members(best[1])
