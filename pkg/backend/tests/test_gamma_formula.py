import math

import pytest
from pydantic import ValidationError

from app.models.enums import GammaCase
from app.models.schemas import PartSet, PartSizes
from app.services.gamma_formula import compute_gamma, subset_weight
from app.utils.errors import InvalidArgumentError


@pytest.mark.parametrize(
    "members, expected",
    [((0, 2), 12), ((), 0), ((0, 1, 2, 3), 31)],
)
def test_subset_weight(k_2_2_10_17, members, expected):
    assert subset_weight(k_2_2_10_17, PartSet(members=members)) == expected


def test_subset_weight_rejects_bad_index(k_2_2_10_17):
    with pytest.raises(InvalidArgumentError):
        subset_weight(k_2_2_10_17, PartSet.of(0, 4))


def test_balanced_case(k_2_2_10_17):
    result = compute_gamma(k_2_2_10_17, 6)
    assert (result.gamma, result.s1, result.s2, result.case) == (8, 10, 2, GammaCase.BALANCED)
    assert result.s1_witness == PartSet.of(2)
    assert result.s2_witness == PartSet.of()


def test_full_parts_with_empty_family(k_2_2_10_17):
    result = compute_gamma(k_2_2_10_17, 15)
    assert (result.gamma, result.s1, result.case) == (17, 17, GammaCase.FULL_PARTS)
    assert result.s2 == math.inf
    assert result.s2_witness is None


def test_tie_resolves_to_full_parts(k_2_2_10_17):
    result = compute_gamma(k_2_2_10_17, 7)
    assert result.s1 == result.p + result.s2 == 10
    assert result.case is GammaCase.FULL_PARTS


@pytest.mark.parametrize("parts, p, n", [((2, 2, 10, 17), 31, 31), ((2, 2, 10, 17), 40, 31), ((5,), 2, 5)])
def test_all_vertices(parts, p, n):
    result = compute_gamma(PartSizes(sizes=parts), p)
    assert result.case is GammaCase.ALL_VERTICES
    assert result.gamma == n
    assert result.s1 is None and result.s2 is None


def test_rejects_nonpositive_p(k_2_2_10_17):
    with pytest.raises(InvalidArgumentError):
        compute_gamma(k_2_2_10_17, 0)


def test_dp_paths_agree_with_enumeration(k_2_2_10_17):
    for p in range(1, 32):
        exact = compute_gamma(k_2_2_10_17, p)
        fast = compute_gamma(k_2_2_10_17, p, exhaustive_max_parts=0)
        assert (fast.gamma, fast.s1, fast.s2, fast.case) == (exact.gamma, exact.s1, exact.s2, exact.case)


@pytest.mark.parametrize("sizes", [(), (0, 3), (-1,), (2**64, 1)])
def test_part_sizes_validation(sizes):
    with pytest.raises(ValidationError):
        PartSizes(sizes=sizes)


def test_part_set_rejects_duplicates():
    with pytest.raises(ValidationError):
        PartSet.of(1, 1)


def test_part_set_is_sorted():
    assert PartSet.of(3, 0, 2).members == (0, 2, 3)
