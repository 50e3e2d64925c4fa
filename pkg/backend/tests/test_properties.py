"""Property-based tests for the gamma_p formula."""
import random

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from app.models.enums import GammaCase
from app.models.schemas import INFINITY, PartSizes
from app.services.gamma_formula import compute_gamma
from app.services.subset_optimizer import min_demand, min_demand_fast

PROPERTY_SETTINGS = settings(
    max_examples=200,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

_SIZES = st.lists(st.integers(min_value=1, max_value=20), min_size=1, max_size=7)


@st.composite
def _instances(draw: st.DrawFn):
    sizes = draw(_SIZES)
    p = draw(st.integers(min_value=1, max_value=sum(sizes) + 2))
    return PartSizes(sizes=tuple(sizes)), p


class TestGammaProperties:
    @PROPERTY_SETTINGS
    @given(instance=_instances())
    def test_bounds(self, instance):
        parts, p = instance
        gamma = compute_gamma(parts, p).gamma
        assert min(p, parts.total) <= gamma <= parts.total

    @PROPERTY_SETTINGS
    @given(instance=_instances())
    def test_monotone_in_p(self, instance):
        parts, p = instance
        assert compute_gamma(parts, p).gamma <= compute_gamma(parts, p + 1).gamma

    @PROPERTY_SETTINGS
    @given(instance=_instances(), data=st.data())
    def test_permutation_invariant(self, instance, data):
        parts, p = instance
        order = data.draw(st.permutations(range(parts.t)))
        shuffled = PartSizes(sizes=tuple(parts.sizes[i] for i in order))
        original, permuted = compute_gamma(parts, p), compute_gamma(shuffled, p)
        assert original.gamma == permuted.gamma
        if permuted.s1_witness is not None:
            mapped = sum(parts.sizes[order[i]] for i in permuted.s1_witness.members)
            assert mapped == original.s1

    @PROPERTY_SETTINGS
    @given(instance=_instances())
    def test_breakdown_invariants(self, instance):
        parts, p = instance
        result = compute_gamma(parts, p)
        if result.case is GammaCase.ALL_VERTICES:
            assert parts.t == 1 or parts.total <= p
            assert result.s1 is None and result.s2 is None
            return
        assert result.s1 >= p
        assert result.s2 == INFINITY or result.s2 >= 1
        assert result.gamma == min(result.s1, p + result.s2)
        if result.case is GammaCase.BALANCED:
            assert p + result.s2 < result.s1


def test_fast_demand_matches_enumeration():
    rng = random.Random(20240601)
    for _ in range(1000):
        t = rng.randint(2, 12)
        parts = PartSizes(sizes=tuple(rng.randint(1, 50) for _ in range(t)))
        p = rng.randint(1, parts.total)
        if parts.total <= p:
            continue
        assert min_demand_fast(parts, p)[0] == min_demand(parts, p)[0], (parts.sizes, p)
