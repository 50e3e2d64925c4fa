# backend/app/services/gamma_formula.py
import logging

from app.config import EXHAUSTIVE_MAX_PARTS
from app.models.enums import GammaCase
from app.models.schemas import GammaBreakdown, PartSet, PartSizes
from app.services.subset_optimizer import (
    check_indices,
    min_demand,
    min_demand_fast,
    min_sum_at_least,
)
from app.utils.errors import InvalidArgumentError

logger = logging.getLogger(__name__)


def subset_weight(parts: PartSizes, I: PartSet) -> int:
    """f(I): total size of the parts indexed by I."""
    check_indices(parts, I)
    return sum(parts.sizes[i] for i in I.members)


def compute_gamma(
    parts: PartSizes, p: int, exhaustive_max_parts: int = EXHAUSTIVE_MAX_PARTS
) -> GammaBreakdown:
    """
    gamma_p of K_{n_0,...,n_{t-1}} as min(s1, p + s2).

    With a single part, or when f(N_t) <= p, every vertex has degree at most
    p - 1 and must be taken, so gamma_p = n. A tie s1 = p + s2 is reported as
    FULL_PARTS.
    """
    if p < 1:
        raise InvalidArgumentError(f"p must be >= 1, got {p}")

    n = parts.total
    if parts.t == 1 or n <= p:
        logger.debug("parts=%s p=%d: every vertex forced, gamma=%d", parts.sizes, p, n)
        return GammaBreakdown(gamma=n, p=p, case=GammaCase.ALL_VERTICES)

    s1, s1_witness = min_sum_at_least(parts, p, exhaustive_max_parts=exhaustive_max_parts)
    if parts.t <= exhaustive_max_parts:
        s2, s2_witness = min_demand(parts, p)
    else:
        s2, s2_witness = min_demand_fast(parts, p)

    if s1 <= p + s2:
        gamma, case = s1, GammaCase.FULL_PARTS
    else:
        gamma, case = p + s2, GammaCase.BALANCED

    logger.info("parts=%s p=%d: s1=%s s2=%s gamma=%d (%s)", parts.sizes, p, s1, s2, gamma, case.value)
    return GammaBreakdown(
        gamma=gamma,
        p=p,
        case=case,
        s1=s1,
        s2=s2,
        s1_witness=s1_witness,
        s2_witness=s2_witness,
    )
