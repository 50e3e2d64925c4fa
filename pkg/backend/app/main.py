# backend/app/main.py
import logging
from typing import List, Optional, Tuple

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field, ValidationError

from app.config import LOG_LEVEL, MAX_COUNT_STATES, MAX_GENERIC_VERTICES
from app.models.enums import OracleEngine
from app.models.graph import Graph
from app.models.schemas import PartSizes, ResultRecord, TableRow
from app.services.domination_oracle import (
    count_vector_gamma,
    exact_gamma_bounded,
    exact_gamma_generic,
    expand_graph,
    is_p_dominating,
)
from app.services.gamma_formula import compute_gamma
from app.services.table_builder import build_rows
from app.services.witness_builder import build_witness, realize
from app.utils.errors import PDominationError, ResourceLimitError

logger = logging.getLogger(__name__)
logging.basicConfig(level=LOG_LEVEL)

app = FastAPI(
    title="p-Domination API",
    description="Exact p-domination numbers of complete multipartite graphs, with witnesses and oracles",
    version="1.0.0",
)


# Request models
class InstanceRequest(BaseModel):
    parts: List[int] = Field(..., min_length=1, description="part sizes n_0..n_{t-1}")
    p: int = Field(..., ge=1)


class WitnessRequest(InstanceRequest):
    explicit: bool = Field(default=False, description="also return the vertex ids")


class EdgeListGraph(BaseModel):
    vertex_count: int = Field(..., ge=0)
    edges: List[Tuple[int, int]] = Field(default_factory=list)


class VerifyRequest(BaseModel):
    parts: Optional[List[int]] = None
    graph: Optional[EdgeListGraph] = None
    vertices: List[int]
    p: int = Field(..., ge=1)


class OracleRequest(BaseModel):
    parts: Optional[List[int]] = None
    graph: Optional[EdgeListGraph] = None
    p: int = Field(..., ge=1)
    engine: Optional[OracleEngine] = None
    bounded: bool = False
    max_vertices: int = Field(default=MAX_GENERIC_VERTICES, ge=1)
    max_states: int = Field(default=MAX_COUNT_STATES, ge=1)


class TableRequest(BaseModel):
    parts: List[int] = Field(..., min_length=1)
    p_from: int = Field(..., ge=1)
    p_to: int = Field(..., ge=1)
    family: bool = False


def _run(action):
    """Map domain failures onto HTTP status codes."""
    try:
        return action()
    except HTTPException:
        raise
    except ResourceLimitError as e:
        raise HTTPException(status_code=413, detail=str(e))
    except (PDominationError, ValidationError) as e:
        raise HTTPException(status_code=400, detail=str(e))
    except Exception as e:
        logger.exception("request failed: %s", e)
        raise HTTPException(status_code=500, detail=f"Error processing request: {str(e)}")


def _graph_from(parts: Optional[List[int]], graph: Optional[EdgeListGraph]) -> Graph:
    if (parts is None) == (graph is None):
        raise HTTPException(status_code=400, detail="give exactly one of 'parts' or 'graph'")
    if parts is not None:
        return expand_graph(PartSizes(sizes=tuple(parts)))
    return Graph.from_edges(graph.vertex_count, graph.edges)


@app.get("/")
async def root():
    return {
        "message": "p-Domination API v1.0.0",
        "endpoints": {
            "/gamma": "POST - gamma_p = min(s1, p + s2) with breakdown and witness counts",
            "/witness": "POST - minimum p-dominating set (counts, optionally vertex ids)",
            "/verify": "POST - check that a vertex set is p-dominating",
            "/oracle": "POST - gamma_p by exhaustive search",
            "/table": "POST - s1, s2, gamma_p and case for a range of p",
            "/docs": "GET - API documentation",
        },
    }


@app.post("/gamma", response_model=ResultRecord)
def gamma(request: InstanceRequest):
    def action():
        parts = PartSizes(sizes=tuple(request.parts))
        breakdown = compute_gamma(parts, request.p)
        return ResultRecord.from_breakdown(parts, breakdown, build_witness(parts, request.p, breakdown=breakdown))

    return _run(action)


@app.post("/witness")
def witness(request: WitnessRequest):
    def action():
        parts = PartSizes(sizes=tuple(request.parts))
        counts = build_witness(parts, request.p)
        body = {"counts": list(counts.counts), "total": counts.total}
        if request.explicit:
            body["vertices"] = list(realize(parts, counts))
        return body

    return _run(action)


@app.post("/verify")
def verify(request: VerifyRequest):
    def action():
        g = _graph_from(request.parts, request.graph)
        return {"dominating": is_p_dominating(g, request.vertices, request.p)}

    return _run(action)


@app.post("/oracle")
def oracle(request: OracleRequest):
    def action():
        engine = request.engine or (OracleEngine.COUNTS if request.parts is not None else OracleEngine.GENERIC)
        if engine is OracleEngine.COUNTS:
            if request.parts is None:
                raise HTTPException(status_code=400, detail="the counts engine needs 'parts'")
            parts = PartSizes(sizes=tuple(request.parts))
            value, counts = count_vector_gamma(parts, request.p, max_states=request.max_states)
            return {"gamma": value, "counts": list(counts.counts), "vertices": list(realize(parts, counts))}
        g = _graph_from(request.parts, request.graph)
        solve = exact_gamma_bounded if request.bounded else exact_gamma_generic
        value, members = solve(g, request.p, max_vertices=request.max_vertices)
        return {"gamma": value, "vertices": list(members)}

    return _run(action)


@app.post("/table", response_model=List[TableRow])
def table(request: TableRequest):
    def action():
        if request.p_to < request.p_from:
            raise HTTPException(status_code=400, detail="p_to must be >= p_from")
        parts = PartSizes(sizes=tuple(request.parts))
        return build_rows(parts, range(request.p_from, request.p_to + 1), family=request.family)

    return _run(action)
