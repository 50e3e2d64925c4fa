# backend/app/services/report_generator.py
import logging
import os
from datetime import datetime
from typing import Iterable, List, Optional

from docx import Document
from docx.enum.text import WD_ALIGN_PARAGRAPH
from docx.shared import Pt, RGBColor
from docx.text.paragraph import Paragraph

from app.config import REPORTS_DIR
from app.models.schemas import PartSizes, TableRow
from app.services.gamma_formula import compute_gamma
from app.services.table_builder import format_cell, format_family, row_from_breakdown
from app.services.witness_builder import build_witness

logger = logging.getLogger(__name__)

# name -> (point size, rgb, bold, italic, centered)
_STYLES = {
    "title": (26, (0, 51, 102), True, False, True),
    "subtitle": (16, (64, 64, 64), False, False, True),
    "metadata": (10, (128, 128, 128), False, True, True),
    "section": (18, (0, 51, 102), False, False, False),
}

TABLE_HEADERS = ["p", "s1", "s2", "gamma_p", "case"]


class GammaReportGenerator:
    """Word report of s1, the admissible family, s2 and gamma_p over a range of p."""

    def __init__(self, reports_dir: str = REPORTS_DIR):
        self.reports_dir = reports_dir

    def default_path(self, parts: PartSizes) -> str:
        label = "_".join(str(n) for n in parts.sizes)
        filename = f"gamma_K_{label}_{datetime.now().strftime('%Y%m%d_%H%M%S')}.docx"
        return os.path.join(self.reports_dir, filename)

    def generate_document(
        self,
        parts: PartSizes,
        p_values: Iterable[int],
        filepath: Optional[str] = None,
        family: bool = True,
    ) -> str:
        p_values = list(p_values)
        filepath = filepath or self.default_path(parts)
        breakdowns = [compute_gamma(parts, p) for p in p_values]
        rows = [row_from_breakdown(parts, b, family=family) for b in breakdowns]

        doc = Document()
        self._styled(doc.add_heading("p-Domination Report", level=0), "title")
        self._styled(doc.add_paragraph("K_{" + ",".join(str(n) for n in parts.sizes) + "}"), "subtitle")
        self._styled(doc.add_paragraph(f"Generated: {datetime.now().strftime('%B %d, %Y')}"), "metadata")

        self._styled(doc.add_heading("Instance", level=1), "section")
        doc.add_paragraph(f"Parts (t = {parts.t}): {', '.join(str(n) for n in parts.sizes)}")
        doc.add_paragraph(f"Vertices: {parts.total}")
        doc.add_paragraph(f"p range: {p_values[0]}..{p_values[-1]}" if p_values else "p range: empty")
        doc.add_paragraph("Part indices are 0-based.")

        self._styled(doc.add_heading("Summary Table", level=1), "section")
        self._add_summary_table(doc, rows, family)

        self._styled(doc.add_heading("Minimum Witnesses", level=1), "section")
        for breakdown in breakdowns:
            counts = build_witness(parts, breakdown.p, breakdown=breakdown)
            doc.add_paragraph(
                f"p = {breakdown.p}: take {', '.join(str(c) for c in counts.counts)} vertices per part "
                f"({counts.total} in total)",
                style="List Bullet",
            )

        directory = os.path.dirname(filepath)
        if directory:
            os.makedirs(directory, exist_ok=True)
        doc.save(filepath)
        logger.info("report with %d rows written to %s", len(rows), filepath)
        return filepath

    def _add_summary_table(self, doc: Document, rows: List[TableRow], family: bool) -> None:
        headers = TABLE_HEADERS + (["admissible family"] if family else [])
        table = doc.add_table(rows=1, cols=len(headers))
        table.style = "Light Grid Accent 1"
        for cell, text in zip(table.rows[0].cells, headers):
            cell.text = text
        for row in rows:
            values = [
                str(row.p),
                format_cell(row.s1, "-"),
                format_cell(row.s2, "-"),
                str(row.gamma),
                row.case.value,
            ]
            if family:
                values.append(format_family(row.family or []))
            for cell, text in zip(table.add_row().cells, values):
                cell.text = text

    def _styled(self, paragraph: Paragraph, style: str) -> Paragraph:
        size, rgb, bold, italic, centered = _STYLES[style]
        if centered:
            paragraph.alignment = WD_ALIGN_PARAGRAPH.CENTER
        for run in paragraph.runs:
            run.font.size = Pt(size)
            run.font.color.rgb = RGBColor(*rgb)
            if bold:
                run.font.bold = True
            if italic:
                run.font.italic = True
        return paragraph
