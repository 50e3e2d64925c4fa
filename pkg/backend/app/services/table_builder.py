# backend/app/services/table_builder.py
import logging
from typing import Iterable, List, Optional

import pandas as pd

from app.models.enums import TableFormat
from app.models.schemas import INFINITY, GammaBreakdown, PartSet, PartSizes, TableRow
from app.services.gamma_formula import compute_gamma
from app.services.subset_optimizer import enumerate_family

logger = logging.getLogger(__name__)

COLUMNS = ["p", "s1", "s2", "gamma", "case"]


def row_from_breakdown(parts: PartSizes, breakdown: GammaBreakdown, family: bool = False) -> TableRow:
    members = None
    if family:
        members = [list(I.members) for I in enumerate_family(parts, breakdown.p)]
    return TableRow(
        p=breakdown.p,
        s1=breakdown.s1,
        s2=breakdown.s2,
        gamma=breakdown.gamma,
        case=breakdown.case,
        family=members,
    )


def build_rows(parts: PartSizes, p_values: Iterable[int], family: bool = False) -> List[TableRow]:
    rows = [row_from_breakdown(parts, compute_gamma(parts, p), family=family) for p in p_values]
    logger.info("built %d table rows for parts=%s", len(rows), parts.sizes)
    return rows


def format_family(family: List[List[int]]) -> str:
    """'{} {0} {0,1}' (0-based indices); 'none' for the empty family."""
    if not family:
        return "none"
    return " ".join("{" + ",".join(str(i) for i in members) + "}" for members in family)


def format_part_set(I: Optional[PartSet]) -> str:
    if I is None:
        return "-"
    return "{" + ",".join(str(i) for i in I.members) + "}"


def format_cell(value, missing: str) -> str:
    if value is None:
        return missing
    if value == INFINITY:
        return "inf"
    return str(value)


def _frame(rows: List[TableRow], family: bool, missing: str) -> pd.DataFrame:
    records = []
    for row in rows:
        record = {
            "p": str(row.p),
            "s1": format_cell(row.s1, missing),
            "s2": format_cell(row.s2, missing),
            "gamma": str(row.gamma),
            "case": row.case.value,
        }
        if family:
            record["family"] = format_family(row.family or [])
        records.append(record)
    columns = COLUMNS + (["family"] if family else [])
    return pd.DataFrame.from_records(records, columns=columns)


def emit_table(
    parts: PartSizes,
    p_values: Iterable[int],
    fmt: TableFormat = TableFormat.PLAIN,
    family: bool = False,
) -> str:
    """One row per p with columns p, s1, s2, gamma, case (and optionally the admissible family)."""
    rows = build_rows(parts, p_values, family=family)
    fmt = TableFormat(fmt)
    if fmt is TableFormat.JSON:
        exclude = None if family else {"family"}
        return "".join(row.model_dump_json(exclude=exclude) + "\n" for row in rows)
    if fmt is TableFormat.CSV:
        return _frame(rows, family, missing="").to_csv(index=False, lineterminator="\n")
    return _frame(rows, family, missing="-").to_string(index=False) + "\n"
