# backend/app/services/witness_builder.py
import logging
from typing import Optional

from app.models.enums import GammaCase
from app.models.schemas import BalancedFillParams, GammaBreakdown, PartSet, PartSizes, VertexSet, WitnessCounts
from app.services.gamma_formula import compute_gamma
from app.services.subset_optimizer import demand, is_admissible
from app.utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def fill_params(parts: PartSizes, p: int, I: PartSet) -> BalancedFillParams:
    """q and r with p - f(I) = q * (t - k - 1) + r, 0 <= r < t - k - 1."""
    if not is_admissible(parts, p, I):
        raise InvalidArgumentError(f"I={list(I.members)} is not admissible for p={p}")
    k = I.size
    q, r = divmod(p - sum(parts.sizes[i] for i in I.members), parts.t - k - 1)
    return BalancedFillParams(I=I, k=k, q=q, r=r)


def balanced_fill(parts: PartSizes, p: int, I: PartSet) -> WitnessCounts:
    """
    A p-dominating set of size p + demand(I): all of every part in I, then,
    over the excluded parts in ascending index order, r parts get q + 1,
    t - k - 1 - r parts get q, and the last excluded part gets demand(I).
    """
    params = fill_params(parts, p, I)
    d = demand(parts, p, I)
    excluded = [i for i in range(parts.t) if i not in I]
    counts = [n if i in I else 0 for i, n in enumerate(parts.sizes)]
    for position, i in enumerate(excluded[:-1]):
        counts[i] = params.q + 1 if position < params.r else params.q
    counts[excluded[-1]] = d

    witness = WitnessCounts(counts=tuple(counts))
    assert witness.total == p + d
    return witness


def build_witness(parts: PartSizes, p: int, breakdown: Optional[GammaBreakdown] = None) -> WitnessCounts:
    """Minimum witness for the winning case; pass `breakdown` to reuse an existing compute_gamma result."""
    if breakdown is None:
        breakdown = compute_gamma(parts, p)
    elif breakdown.p != p:
        raise InvalidArgumentError(f"breakdown is for p={breakdown.p}, not p={p}")
    if breakdown.case is GammaCase.ALL_VERTICES:
        return WitnessCounts(counts=parts.sizes)
    if breakdown.case is GammaCase.FULL_PARTS:
        chosen = breakdown.s1_witness
        return WitnessCounts(counts=tuple(n if i in chosen else 0 for i, n in enumerate(parts.sizes)))
    logger.debug("balanced fill on I=%s", breakdown.s2_witness.members)
    return balanced_fill(parts, p, breakdown.s2_witness)


def realize(parts: PartSizes, counts: WitnessCounts) -> VertexSet:
    """Lowest c_i vertex ids of each part's block [offset_i, offset_i + n_i)."""
    if len(counts.counts) != parts.t:
        raise InvalidArgumentError(f"expected {parts.t} counts, got {len(counts.counts)}")
    ids = []
    for i, (offset, n, c) in enumerate(zip(parts.offsets(), parts.sizes, counts.counts)):
        if c > n:
            raise InvalidArgumentError(f"count {c} exceeds size {n} of part {i}")
        ids.extend(range(offset, offset + c))
    return tuple(ids)
