import os

from docx import Document
from docx.enum.text import WD_ALIGN_PARAGRAPH
from docx.shared import Pt, RGBColor

from app.services.report_generator import GammaReportGenerator


def _table_text(path):
    table = Document(path).tables[0]
    return [[cell.text for cell in row.cells] for row in table.rows]


def test_summary_table(tmp_path, k_2_2_10_17):
    path = GammaReportGenerator(reports_dir=str(tmp_path)).generate_document(k_2_2_10_17, range(5, 16))
    assert os.path.dirname(path) == str(tmp_path)
    assert os.path.basename(path).startswith("gamma_K_2_2_10_17_")

    rows = _table_text(path)
    assert rows[0] == ["p", "s1", "s2", "gamma_p", "case", "admissible family"]
    assert len(rows) == 1 + 11
    assert rows[1] == ["5", "10", "1", "6", "balanced", "{} {0} {1} {0,1}"]
    assert rows[-1] == ["15", "17", "inf", "17", "full-parts", "none"]


def test_without_family(tmp_path, k_2_2_10_17):
    target = str(tmp_path / "nested" / "report.docx")
    path = GammaReportGenerator().generate_document(k_2_2_10_17, [31], filepath=target, family=False)
    assert path == target
    assert _table_text(path) == [["p", "s1", "s2", "gamma_p", "case"], ["31", "-", "-", "31", "all-vertices"]]


def test_witness_section(tmp_path, k_2_2_10_17):
    path = GammaReportGenerator(reports_dir=str(tmp_path)).generate_document(k_2_2_10_17, [6])
    text = [paragraph.text for paragraph in Document(path).paragraphs]
    assert "Minimum Witnesses" in text
    assert "p = 6: take 2, 2, 2, 2 vertices per part (8 in total)" in text


def test_heading_styles(tmp_path, k_2_2_10_17):
    path = GammaReportGenerator(reports_dir=str(tmp_path)).generate_document(k_2_2_10_17, [6])
    paragraphs = Document(path).paragraphs
    title, subtitle, metadata = paragraphs[:3]
    assert title.text == "p-Domination Report"
    assert title.alignment == WD_ALIGN_PARAGRAPH.CENTER
    assert all(run.font.size == Pt(26) and run.font.bold for run in title.runs)
    assert subtitle.text == "K_{2,2,10,17}"
    assert all(run.font.color.rgb == RGBColor(64, 64, 64) for run in subtitle.runs)
    assert metadata.text.startswith("Generated: ")
    assert all(run.font.italic for run in metadata.runs)

    section = next(p for p in paragraphs if p.text == "Summary Table")
    assert section.alignment is None
    assert all(run.font.size == Pt(18) for run in section.runs)
