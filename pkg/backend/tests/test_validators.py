import pytest

from app.utils.errors import ParseError, ResourceLimitError
from app.utils.validators import parse_graph_file, parse_p_range, parse_parts, parse_vertex_list


class TestParseParts:
    def test_whitespace_and_order_kept(self):
        assert parse_parts(" 17, 2,10 ,2").sizes == (17, 2, 10, 2)

    def test_single_part(self):
        assert parse_parts("5").sizes == (5,)

    def test_largest_single_part(self):
        assert parse_parts("18446744073709551615").sizes == (2**64 - 1,)

    @pytest.mark.parametrize(
        "text, position",
        [
            ("", 1),
            ("2,,3", 2),
            ("2,0", 2),
            ("3, 0, 2", 2),
            ("2,-1", 2),
            ("x", 1),
            ("1.5", 1),
            ("\u0662,\uff13", 1),
            ("2,\uff13", 2),
            ("3,18446744073709551616", 2),
            ("18446744073709551615,1", 2),
        ],
    )
    def test_rejects(self, text, position):
        with pytest.raises(ParseError) as e:
            parse_parts(text)
        assert e.value.position == position
        assert str(e.value).startswith(f"entry {position}:")


class TestParseVertexList:
    def test_empty_is_empty_set(self):
        assert parse_vertex_list("  ") == []

    def test_values(self):
        assert parse_vertex_list("0, 4,2") == [0, 4, 2]

    def test_rejects_negative(self):
        with pytest.raises(ParseError):
            parse_vertex_list("1,-2")


class TestParsePRange:
    def test_inclusive(self):
        assert parse_p_range("1..15") == list(range(1, 16))

    def test_single(self):
        assert parse_p_range(" 3 .. 3 ") == [3]

    @pytest.mark.parametrize("text", ["0..2", "5..1", "1-5", "a..b", "", "\u0661..\u0663"])
    def test_rejects(self, text):
        with pytest.raises(ParseError):
            parse_p_range(text)


class TestParseGraphFile:
    def test_comments_blank_lines_and_crlf(self):
        text = "# a path\r\n\r\n3 2\r\n0\t1\r\n# middle\r\n1  2\r\n"
        g = parse_graph_file(text)
        assert g.vertex_count == 3
        assert sorted(g.edges()) == [(0, 1), (1, 2)]

    def test_cycle(self):
        g = parse_graph_file("4 4\n0 1\n1 2\n2 3\n3 0")
        assert g.edge_count == 4
        assert {g.degree(v) for v in range(4)} == {2}

    def test_no_edges(self):
        g = parse_graph_file("4 0\n")
        assert (g.vertex_count, g.edge_count) == (4, 0)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("", 1),
            ("3\n", 1),
            ("3 1\n0 3\n", 2),
            ("3 1\n1 1\n", 2),
            ("2 1\n0 0", 2),
            ("3 2\n0 1\n1 0\n", 3),
            ("3 1\n0 1\n1 2\n", 3),
            ("3 1\n0 1 2\n", 2),
            ("3 x\n", 1),
            ("\u0663 0\n", 1),
            ("3 1\n0 \uff11\n", 2),
        ],
    )
    def test_rejects_with_line(self, text, line):
        with pytest.raises(ParseError) as e:
            parse_graph_file(text)
        assert e.value.line == line
        assert str(e.value).startswith(f"line {line}:")

    def test_too_few_edges(self):
        with pytest.raises(ParseError, match="declared 2 edges but found 1"):
            parse_graph_file("3 2\n0 1\n")

    def test_vertex_cap(self):
        with pytest.raises(ResourceLimitError):
            parse_graph_file("100 0\n", max_vertices=99)
