from fractions import Fraction

import pytest

from debruijn_balance.core.balance import EdgeWeightAssignment
from debruijn_balance.core.graph import VertexWeights
from debruijn_balance.formats import (
    key_value_block,
    parse_digraph,
    parse_edge_weights,
    parse_vertex_weights,
    serialize_digraph,
    serialize_edge_weights,
    serialize_value_rows,
    serialize_vertex_weights,
    table_rows,
)
from debruijn_balance.utils.exceptions import ParseError, SinkError
from debruijn_balance.utils.rationals import format_rational, parse_rational


class TestRationals:
    def test_parse(self):
        assert parse_rational("3") == 3
        assert parse_rational("-7/4") == Fraction(-7, 4)
        assert parse_rational("+2/6") == Fraction(1, 3)

    @pytest.mark.parametrize("token", ["1.5", "1e3", "a", "1/", "/2", "1/-2"])
    def test_rejects(self, token):
        with pytest.raises(ParseError):
            parse_rational(token)

    def test_zero_denominator(self):
        with pytest.raises(ParseError, match="line 4: zero denominator"):
            parse_rational("1/0", line=4)

    def test_format_exact(self):
        assert format_rational(Fraction(6, 3)) == "2"
        assert format_rational(Fraction(-3, 4)) == "-3/4"

    @pytest.mark.parametrize(
        "value,digits,text",
        [
            (Fraction(1, 3), 3, "0.333"),
            (Fraction(5, 2), 0, "2"),
            (Fraction(7, 2), 0, "4"),
            (Fraction(1, 8), 2, "0.12"),
            (Fraction(3, 8), 2, "0.38"),
            (Fraction(-1, 8), 2, "-0.12"),
            (Fraction(-1, 1000), 2, "0.00"),
            (Fraction(1), 2, "1.00"),
        ],
    )
    def test_format_decimal_rounds_half_to_even(self, value, digits, text):
        assert format_rational(value, digits) == text


class TestDigraphFormat:
    def test_parse_with_comments(self):
        g = parse_digraph("# triangle\n3\n\n0 1\n1 2\n# closing edge\n2 0\n")
        assert g.edges() == [(0, 1), (1, 2), (2, 0)]

    def test_serialize_sorted(self, b21):
        assert serialize_digraph(b21) == "2\n0 0\n0 1\n1 0\n1 1\n"
        assert serialize_digraph(parse_digraph("2\n1 1\n0 1\n1 0\n0 0\n")) == serialize_digraph(b21)

    def test_sink(self):
        with pytest.raises(SinkError, match="vertex 2 has no outgoing edges"):
            parse_digraph("3\n0 1\n1 2\n")

    @pytest.mark.parametrize(
        "text,line",
        [
            ("2\n0 1\n1 x\n", 3),
            ("2\n0 1\n1 2\n", 3),
            ("2\n0 1\n0 1\n1 0\n", 3),
            ("2\n0 1 1\n", 2),
            ("two\n", 1),
            ("2 3\n", 1),
        ],
    )
    def test_errors_carry_line_numbers(self, text, line):
        with pytest.raises(ParseError) as info:
            parse_digraph(text)
        assert info.value.line == line

    def test_empty(self):
        with pytest.raises(ParseError, match="missing vertex count"):
            parse_digraph("# nothing\n")


class TestVertexWeightFormat:
    def test_any_order(self):
        c = parse_vertex_weights("1 4\n0 0\n3 -1/2\n2 0\n", 4)
        assert c == VertexWeights.of([0, 4, 0, Fraction(-1, 2)])

    def test_missing_vertex_named(self):
        with pytest.raises(ParseError, match="no weight for vertex 3"):
            parse_vertex_weights("0 0\n1 4\n2 0\n", 4)

    def test_duplicate_vertex_named(self):
        with pytest.raises(ParseError, match="line 2: vertex 0 given twice"):
            parse_vertex_weights("0 1\n0 2\n", 2)

    def test_out_of_range(self):
        with pytest.raises(ParseError):
            parse_vertex_weights("0 1\n2 2\n", 2)

    def test_serialize_in_vertex_order(self):
        c = VertexWeights.of([3, Fraction(-1, 2), 0, Fraction(7, 3)])
        text = serialize_vertex_weights(c)
        assert text == "0 3\n1 -1/2\n2 0\n3 7/3\n"
        assert parse_vertex_weights(text, 4) == c


class TestEdgeWeightFormat:
    def test_sorted_output(self, spike_balanced):
        f = EdgeWeightAssignment(spike_balanced)
        assert serialize_edge_weights(f).splitlines()[:3] == ["0 0 1", "0 1 -1", "1 2 -1"]
        assert serialize_edge_weights(f, decimal=1).splitlines()[0] == "0 0 1.0"

    def test_checked_against_graph(self, b21):
        f = parse_edge_weights("1 1 -1\n0 0 1\n0 1 -1\n1 0 1\n", b21)
        assert list(f) == b21.edges()
        with pytest.raises(ParseError, match="no weight for edge 1 1"):
            parse_edge_weights("0 0 1\n0 1 -1\n1 0 1\n", b21)
        with pytest.raises(ParseError, match="not an edge"):
            parse_edge_weights("0 2 1\n", b21)

    def test_without_graph(self):
        assert dict(parse_edge_weights("5 6 1/2\n")) == {(5, 6): Fraction(1, 2)}


class TestTables:
    def test_value_rows(self):
        rows = table_rows([(Fraction(3), Fraction(1, 2)), (Fraction(1), Fraction(0))])
        assert serialize_value_rows(rows) == "0 0 3\n0 1 1/2\n1 0 1\n1 1 0\n"
        assert serialize_value_rows(rows, decimal=2).splitlines()[1] == "0 1 0.50"

    def test_key_value_block(self):
        assert key_value_block(["a 1", "b 2"]) == "a 1\nb 2\n"
