# backend/app/cli.py
"""
Command-line entry point.

    pdom compute --parts 2,2,10,17 --p 6 [--json]
    pdom witness --parts 2,2,10,17 --p 6 [--explicit]
    pdom verify  (--parts LIST | --graph FILE) --set 0,1,4 --p 2
    pdom oracle  (--parts LIST | --graph FILE) --p 2 [--engine counts|generic] [--bounded]
    pdom table   --parts 2,2,10,17 --p-range 1..15 [--format plain|csv|json] [--family]
    pdom report  --parts 2,2,10,17 --p-range 1..15 [--output FILE]
    pdom serve   [--host 0.0.0.0] [--port 5000]

Exit codes: 0 success or verified, 2 verification failed, 1 usage/parse/resource error.
Part indices and vertex ids are 0-based.
"""
import argparse
import logging
import sys
from typing import List, Optional

from pydantic import ValidationError

from app.config import (
    LOG_LEVEL,
    MAX_COUNT_STATES,
    MAX_EXPAND_VERTICES,
    MAX_GENERIC_VERTICES,
)
from app.models.enums import OracleEngine, TableFormat
from app.models.schemas import ResultRecord
from app.services.domination_oracle import (
    count_vector_gamma,
    exact_gamma_bounded,
    exact_gamma_generic,
    expand_graph,
    is_p_dominating,
)
from app.services.gamma_formula import compute_gamma
from app.services.table_builder import emit_table, format_cell, format_part_set
from app.services.witness_builder import build_witness, realize
from app.utils.errors import InvalidArgumentError, PDominationError
from app.utils.validators import parse_graph_file, parse_p_range, parse_parts, parse_vertex_list

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NOT_DOMINATING = 2


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; 2 is reserved for failed verification here."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} must be at least 1")
    return value


def _read_graph(path: str, max_vertices: int):
    with open(path, "r", encoding="ascii", newline="") as f:
        return parse_graph_file(f.read(), max_vertices=max_vertices)


def _format_ids(ids) -> str:
    return ",".join(str(v) for v in ids)


# --- subcommands


def cmd_compute(args) -> int:
    parts = parse_parts(args.parts)
    breakdown = compute_gamma(parts, args.p)
    record = ResultRecord.from_breakdown(parts, breakdown, build_witness(parts, args.p, breakdown=breakdown))
    if args.json:
        print(record.model_dump_json())
        return EXIT_OK
    print(f"parts:          {_format_ids(parts.sizes)}")
    print(f"p:              {args.p}")
    print(f"gamma_p:        {breakdown.gamma}")
    print(f"case:           {breakdown.case.value}")
    print(f"s1:             {format_cell(breakdown.s1, '-')}  witness {format_part_set(breakdown.s1_witness)}")
    print(f"s2:             {format_cell(breakdown.s2, '-')}  witness {format_part_set(breakdown.s2_witness)}")
    print(f"witness counts: {_format_ids(record.witness_counts)}")
    return EXIT_OK


def cmd_witness(args) -> int:
    parts = parse_parts(args.parts)
    counts = build_witness(parts, args.p)
    print(_format_ids(counts.counts))
    if args.explicit:
        print(_format_ids(realize(parts, counts)))
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.parts is not None:
        g = expand_graph(parse_parts(args.parts), max_vertices=args.max_vertices)
    else:
        g = _read_graph(args.graph, args.max_vertices)
    members = parse_vertex_list(args.set)
    if is_p_dominating(g, members, args.p):
        print(f"p-dominating (p={args.p}, |D|={len(set(members))})")
        return EXIT_OK
    print(f"not p-dominating (p={args.p})")
    return EXIT_NOT_DOMINATING


def cmd_oracle(args) -> int:
    engine = OracleEngine(args.engine) if args.engine else None
    if engine is None:
        engine = OracleEngine.COUNTS if args.parts is not None else OracleEngine.GENERIC

    if engine is OracleEngine.COUNTS:
        if args.parts is None:
            raise InvalidArgumentError("the counts engine needs --parts")
        parts = parse_parts(args.parts)
        value, counts = count_vector_gamma(parts, args.p, max_states=args.max_states)
        print(f"gamma_p: {value}")
        print(f"counts:  {_format_ids(counts.counts)}")
        print(f"set:     {_format_ids(realize(parts, counts))}")
        return EXIT_OK

    if args.parts is not None:
        g = expand_graph(parse_parts(args.parts))
    else:
        g = _read_graph(args.graph, MAX_EXPAND_VERTICES)
    solve = exact_gamma_bounded if args.bounded else exact_gamma_generic
    value, witness = solve(g, args.p, max_vertices=args.max_vertices)
    print(f"gamma_p: {value}")
    print(f"set:     {_format_ids(witness)}")
    return EXIT_OK


def cmd_table(args) -> int:
    parts = parse_parts(args.parts)
    sys.stdout.write(emit_table(parts, parse_p_range(args.p_range), fmt=args.format, family=args.family))
    return EXIT_OK


def cmd_report(args) -> int:
    from app.services.report_generator import GammaReportGenerator

    parts = parse_parts(args.parts)
    path = GammaReportGenerator().generate_document(
        parts, parse_p_range(args.p_range), filepath=args.output, family=args.family
    )
    print(path)
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    uvicorn.run("app.main:app", host=args.host, port=args.port)
    return EXIT_OK


# --- parser


def _add_source(sub: argparse.ArgumentParser) -> None:
    source = sub.add_mutually_exclusive_group(required=True)
    source.add_argument("--parts", help="comma-separated part sizes, e.g. 2,2,10,17")
    source.add_argument("--graph", help="edge-list file ('n m' header, then 'u v' lines)")


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="pdom",
        description="Exact p-domination numbers of complete multipartite graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)

    sub = commands.add_parser("compute", help="gamma_p = min(s1, p + s2) with its breakdown")
    sub.add_argument("--parts", required=True)
    sub.add_argument("--p", type=_positive_int, required=True)
    sub.add_argument("--json", action="store_true", help="one-line structured record")
    sub.set_defaults(func=cmd_compute)

    sub = commands.add_parser("witness", help="a minimum p-dominating set as per-part counts")
    sub.add_argument("--parts", required=True)
    sub.add_argument("--p", type=_positive_int, required=True)
    sub.add_argument("--explicit", action="store_true", help="also print the vertex ids")
    sub.set_defaults(func=cmd_witness)

    sub = commands.add_parser("verify", help="check that a vertex set is p-dominating")
    _add_source(sub)
    sub.add_argument("--set", required=True, help="comma-separated vertex ids")
    sub.add_argument("--p", type=_positive_int, required=True)
    sub.add_argument("--max-vertices", type=_positive_int, default=MAX_EXPAND_VERTICES)
    sub.set_defaults(func=cmd_verify)

    sub = commands.add_parser("oracle", help="gamma_p by exhaustive search")
    _add_source(sub)
    sub.add_argument("--p", type=_positive_int, required=True)
    sub.add_argument("--engine", choices=[e.value for e in OracleEngine], default=None)
    sub.add_argument("--bounded", action="store_true", help="generic engine: branch and bound")
    sub.add_argument("--max-vertices", type=_positive_int, default=MAX_GENERIC_VERTICES)
    sub.add_argument("--max-states", type=_positive_int, default=MAX_COUNT_STATES)
    sub.set_defaults(func=cmd_oracle)

    sub = commands.add_parser("table", help="s1, s2, gamma_p and case for a range of p")
    sub.add_argument("--parts", required=True)
    sub.add_argument("--p-range", required=True, help="A..B, inclusive")
    sub.add_argument("--format", choices=[f.value for f in TableFormat], default=TableFormat.PLAIN.value)
    sub.add_argument("--family", action="store_true", help="list the admissible family per row")
    sub.set_defaults(func=cmd_table)

    sub = commands.add_parser("report", help="write the table and witnesses to a .docx report")
    sub.add_argument("--parts", required=True)
    sub.add_argument("--p-range", required=True, help="A..B, inclusive")
    sub.add_argument("--family", action="store_true")
    sub.add_argument("--output", default=None, help="target .docx path")
    sub.set_defaults(func=cmd_report)

    sub = commands.add_parser("serve", help="run the HTTP API")
    sub.add_argument("--host", default="0.0.0.0")
    sub.add_argument("--port", type=int, default=5000)
    sub.set_defaults(func=cmd_serve)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else LOG_LEVEL,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args)
    except (PDominationError, ValidationError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
