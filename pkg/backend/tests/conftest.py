import math
from itertools import combinations_with_replacement

import pytest

from app.models.schemas import PartSizes

INF = math.inf

# K_{2,2,10,17}: p -> (s1, s2, gamma, admissible family with 0-based indices).
# Two rows differ from the commonly printed table for this graph:
#   p=11: parts {0} and {1} are not admissible (ceil(9/2) = 5 > 2).
#   p=14: parts {0,1,2} sum to exactly 14, so s1 = gamma = 14.
TABLE_K_2_2_10_17 = {
    1: (2, 1, 2, [()]),
    2: (2, 1, 2, [()]),
    3: (4, 1, 4, [(), (0,), (1,)]),
    4: (4, 1, 4, [(), (0,), (1,)]),
    5: (10, 1, 6, [(), (0,), (1,), (0, 1)]),
    6: (10, 2, 8, [(), (0,), (1,), (0, 1)]),
    7: (10, 3, 10, [(0, 1)]),
    9: (10, 5, 10, [(0, 1)]),
    11: (12, 1, 12, [(2,), (0, 1)]),
    13: (14, 1, 14, [(2,), (0, 1), (0, 2), (1, 2)]),
    14: (14, 2, 14, [(2,), (0, 1), (0, 2), (1, 2)]),
    15: (17, INF, 17, []),
}


@pytest.fixture
def k_2_2_10_17() -> PartSizes:
    return PartSizes.of(2, 2, 10, 17)


def small_instances(max_parts: int = 4, max_size: int = 4):
    """Every nondecreasing size vector with 2..max_parts parts of sizes 1..max_size."""
    out = []
    for t in range(2, max_parts + 1):
        for sizes in combinations_with_replacement(range(1, max_size + 1), t):
            out.append(PartSizes(sizes=sizes))
    return out
