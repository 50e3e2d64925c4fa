# backend/app/utils/validators.py
import re
from typing import List, Optional, Tuple

from app.config import MAX_EXPAND_VERTICES, MAX_U64
from app.models.graph import Graph
from app.models.schemas import PartSizes
from app.utils.errors import InvalidArgumentError, ParseError, ResourceLimitError

_UINT = re.compile(r"[+-]?[0-9]+")
_FIELD_SEP = re.compile(r"[ \t]+")


def _parse_uint(token: str, what: str, position: Optional[int] = None, line: Optional[int] = None) -> int:
    if not _UINT.fullmatch(token):
        raise ParseError(f"{what} {token!r} is not an integer", position=position, line=line)
    value = int(token)
    if value < 0:
        raise ParseError(f"{what} {value} is negative", position=position, line=line)
    if value > MAX_U64:
        raise ParseError(f"{what} {value} does not fit in 64 bits", position=position, line=line)
    return value


def parse_parts(text: str) -> PartSizes:
    """'2, 2, 10, 17' -> PartSizes((2, 2, 10, 17)); order is kept."""
    if not text.strip():
        raise ParseError("empty part list", position=1)
    sizes = []
    for position, raw in enumerate(text.split(","), start=1):
        token = raw.strip()
        if not token:
            raise ParseError("empty entry", position=position)
        value = _parse_uint(token, "part size", position=position)
        if value == 0:
            raise ParseError("part size must be at least 1", position=position)
        sizes.append(value)
    if sum(sizes) > MAX_U64:
        raise ParseError("total vertex count does not fit in 64 bits", position=len(sizes))
    return PartSizes(sizes=tuple(sizes))


def parse_vertex_list(text: str) -> List[int]:
    """Comma-separated vertex ids; an empty string is the empty set."""
    if not text.strip():
        return []
    return [
        _parse_uint(raw.strip(), "vertex id", position=position)
        for position, raw in enumerate(text.split(","), start=1)
    ]


def parse_p_range(text: str) -> List[int]:
    """'A..B' inclusive on both ends."""
    match = re.fullmatch(r"\s*([0-9]+)\s*\.\.\s*([0-9]+)\s*", text)
    if not match:
        raise ParseError(f"p range {text!r} is not of the form A..B")
    low, high = int(match.group(1)), int(match.group(2))
    if low < 1 or high < low:
        raise ParseError(f"p range {text!r} must satisfy 1 <= A <= B")
    return list(range(low, high + 1))


def parse_graph_file(text: str, max_vertices: int = MAX_EXPAND_VERTICES) -> Graph:
    """
    Edge-list format: '#' lines are comments, the first data line is 'n m',
    then exactly m lines 'u v' with 0 <= u, v < n and u != v. LF or CRLF.
    """
    header = None
    edges: List[Tuple[int, int]] = []
    seen = set()
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip(" \t")
        if not line or line.startswith("#"):
            continue
        fields = _FIELD_SEP.split(line)
        if len(fields) != 2:
            raise ParseError(f"expected two fields, got {len(fields)}", line=line_no)
        if header is None:
            n = _parse_uint(fields[0], "vertex count", line=line_no)
            m = _parse_uint(fields[1], "edge count", line=line_no)
            if n > max_vertices:
                raise ResourceLimitError(f"{n} vertices exceed the graph cap of {max_vertices}")
            header = (n, m)
            continue
        n, m = header
        if len(edges) == m:
            raise ParseError(f"more than the declared {m} edges", line=line_no)
        u = _parse_uint(fields[0], "vertex id", line=line_no)
        v = _parse_uint(fields[1], "vertex id", line=line_no)
        if u >= n or v >= n:
            raise ParseError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}", line=line_no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line=line_no)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge ({u}, {v})", line=line_no)
        seen.add(key)
        edges.append((u, v))

    if header is None:
        raise ParseError("missing 'n m' header", line=1)
    n, m = header
    if len(edges) != m:
        raise ParseError(f"declared {m} edges but found {len(edges)}", line=line_no)
    try:
        return Graph.from_edges(n, edges)
    except InvalidArgumentError as e:
        raise ParseError(str(e), line=line_no) from e
