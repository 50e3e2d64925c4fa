# backend/app/models/schemas.py
import math
from typing import Annotated, Any, List, Optional, Tuple, Union

from pydantic import (
    BaseModel,
    BeforeValidator,
    ConfigDict,
    Field,
    PlainSerializer,
    field_validator,
    model_validator,
)

from app.config import MAX_U64
from app.models.enums import GammaCase

INFINITY = math.inf


def _parse_demand(value: Any) -> Any:
    if isinstance(value, str) and value.strip().lower() in ("inf", "infinity"):
        return INFINITY
    return value


def _dump_demand(value: Union[int, float]) -> Union[int, str]:
    return "inf" if value == INFINITY else int(value)


# s2 codomain: a positive integer or infinity ("inf" on the wire).
DemandValue = Annotated[
    Union[int, float],
    BeforeValidator(_parse_demand),
    PlainSerializer(_dump_demand, return_type=Union[int, str], when_used="json"),
]

PartSize = Annotated[int, Field(ge=1, le=MAX_U64)]
Count = Annotated[int, Field(ge=0, le=MAX_U64)]


class PartSizes(BaseModel):
    """Sizes (n_0, ..., n_{t-1}) of a complete multipartite graph, in the order given."""

    model_config = ConfigDict(frozen=True)

    sizes: Tuple[PartSize, ...] = Field(..., min_length=1)

    @model_validator(mode="after")
    def _total_fits(self) -> "PartSizes":
        if sum(self.sizes) > MAX_U64:
            raise ValueError("total vertex count exceeds 2^64 - 1")
        return self

    @classmethod
    def of(cls, *sizes: int) -> "PartSizes":
        return cls(sizes=tuple(sizes))

    @property
    def t(self) -> int:
        return len(self.sizes)

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def offsets(self) -> List[int]:
        """Start id of each part's block of vertex ids."""
        out, acc = [], 0
        for n in self.sizes:
            out.append(acc)
            acc += n
        return out


class PartSet(BaseModel):
    """A subset I of part indices, kept in ascending order."""

    model_config = ConfigDict(frozen=True)

    members: Tuple[Annotated[int, Field(ge=0)], ...] = ()

    @field_validator("members")
    @classmethod
    def _canonical(cls, members: Tuple[int, ...]) -> Tuple[int, ...]:
        if len(set(members)) != len(members):
            raise ValueError(f"duplicate part index in {list(members)}")
        return tuple(sorted(members))

    @classmethod
    def of(cls, *members: int) -> "PartSet":
        return cls(members=tuple(members))

    @property
    def size(self) -> int:
        return len(self.members)

    def __contains__(self, index: object) -> bool:
        return index in self.members


class GammaBreakdown(BaseModel):
    model_config = ConfigDict(frozen=True)

    gamma: Count
    p: Annotated[int, Field(ge=1)]
    case: GammaCase
    s1: Optional[Count] = None
    s2: Optional[DemandValue] = None
    s1_witness: Optional[PartSet] = None
    s2_witness: Optional[PartSet] = None


class WitnessCounts(BaseModel):
    """Vertices selected per part; represents a vertex set up to symmetry inside parts."""

    model_config = ConfigDict(frozen=True)

    counts: Tuple[Count, ...]

    @classmethod
    def of(cls, *counts: int) -> "WitnessCounts":
        return cls(counts=tuple(counts))

    @property
    def total(self) -> int:
        return sum(self.counts)


class BalancedFillParams(BaseModel):
    model_config = ConfigDict(frozen=True)

    I: PartSet
    k: Count
    q: Count
    r: Count


# Vertex ids in ascending order.
VertexSet = Tuple[int, ...]


class ResultRecord(BaseModel):
    """Flat, line-oriented form of a computation, as printed by `compute --json`."""

    parts: List[int]
    p: int
    gamma: int
    case: GammaCase
    s1: Optional[int] = None
    s2: Optional[DemandValue] = None
    s1_witness: Optional[List[int]] = None
    s2_witness: Optional[List[int]] = None
    witness_counts: List[int]

    @model_validator(mode="after")
    def _counts_match_gamma(self) -> "ResultRecord":
        if sum(self.witness_counts) != self.gamma:
            raise ValueError("witness_counts must sum to gamma")
        return self

    @classmethod
    def from_breakdown(
        cls, parts: PartSizes, breakdown: GammaBreakdown, counts: WitnessCounts
    ) -> "ResultRecord":
        return cls(
            parts=list(parts.sizes),
            p=breakdown.p,
            gamma=breakdown.gamma,
            case=breakdown.case,
            s1=breakdown.s1,
            s2=breakdown.s2,
            s1_witness=list(breakdown.s1_witness.members) if breakdown.s1_witness is not None else None,
            s2_witness=list(breakdown.s2_witness.members) if breakdown.s2_witness is not None else None,
            witness_counts=list(counts.counts),
        )


class TableRow(BaseModel):
    p: int
    s1: Optional[int] = None
    s2: Optional[DemandValue] = None
    gamma: int
    case: GammaCase
    family: Optional[List[List[int]]] = None
