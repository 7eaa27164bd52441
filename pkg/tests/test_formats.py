"""Tests for the edge-list and pair text formats."""

import io

import pytest

from induced_paths.exceptions import GraphFormatError
from induced_paths.formats import (
    format_edgelist,
    format_pair,
    parse_edgelist,
    parse_pair,
    read_graph,
    read_pair,
)
from induced_paths.generators import gen_named
from induced_paths.graph import Graph, GraphPair, build_graph
from induced_paths.types import GraphModel

C5_TEXT = "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n"


class TestParseEdgelist:
    """Test cases for single-graph parsing."""

    def test_cycle(self, c5: Graph) -> None:
        """Test cycle."""
        assert parse_edgelist(C5_TEXT.splitlines()) == c5

    def test_trailing_blank_lines_ignored(self) -> None:
        """Test trailing blank lines ignored."""
        g = parse_edgelist(["2 1", "0 1", "", ""])
        assert g.m == 1

    def test_wrong_edge_count_reports_line(self) -> None:
        """Test wrong edge count reports line."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edgelist(["3 2", "0 1"])
        assert excinfo.value.line == 1

    def test_extra_edge_reports_first_surplus_line(self) -> None:
        """Test extra edge reports first surplus line."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edgelist(["3 1", "0 1", "1 2"])
        assert excinfo.value.line == 3

    def test_non_integer_field(self) -> None:
        """Test non integer field."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edgelist(["3 1", "0 x"])
        assert excinfo.value.line == 2
        assert "line 2" in str(excinfo.value)

    def test_out_of_range_endpoint(self) -> None:
        """Test out of range endpoint."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_edgelist(["3 2", "0 1", "1 5"])
        assert excinfo.value.line == 3

    def test_self_loop(self) -> None:
        """Test self loop."""
        with pytest.raises(GraphFormatError):
            parse_edgelist(["3 1", "1 1"])

    def test_missing_header(self) -> None:
        """Test missing header."""
        with pytest.raises(GraphFormatError):
            parse_edgelist([])

    def test_separator_rejected(self) -> None:
        """Test separator rejected."""
        with pytest.raises(GraphFormatError):
            parse_edgelist(["2 0", "---", "2 0"])

    def test_repeated_edge_merged(self) -> None:
        """Test repeated edge merged."""
        assert parse_edgelist(["2 2", "0 1", "1 0"]).m == 1


class TestParsePair:
    """Test cases for pair parsing."""

    def test_pair(self) -> None:
        """Test pair."""
        pair = parse_pair(["3 2", "0 1", "1 2", "---", "3 1", "0 1"])
        assert pair.g.m == 2
        assert pair.g_prime.edge_list() == [(0, 1)]

    def test_subgraph_violation(self) -> None:
        """Test subgraph violation."""
        with pytest.raises(GraphFormatError):
            parse_pair(["3 1", "0 1", "---", "3 1", "1 2"])

    def test_second_block_line_numbers(self) -> None:
        """Test second block line numbers."""
        with pytest.raises(GraphFormatError) as excinfo:
            parse_pair(["3 1", "0 1", "---", "3 1", "0 q"])
        assert excinfo.value.line == 5

    def test_missing_separator(self) -> None:
        """Test missing separator."""
        with pytest.raises(GraphFormatError):
            parse_pair(["3 0"])


class TestStreams:
    """Test cases for stream readers and writers."""

    def test_read_pair_detects_single_graph(self) -> None:
        """Test read pair detects single graph."""
        pair = read_pair(io.StringIO(C5_TEXT))
        assert pair.g is pair.g_prime
        assert pair.d_min == 2

    def test_read_pair_detects_pair(self) -> None:
        """Test read pair detects pair."""
        pair = read_pair(io.StringIO("2 1\n0 1\n---\n2 0\n"))
        assert pair.g.m == 1 and pair.g_prime.m == 0

    def test_explicit_format(self) -> None:
        """Test explicit format."""
        with pytest.raises(GraphFormatError):
            read_pair(io.StringIO(C5_TEXT), "pair")

    def test_format_edgelist(self) -> None:
        """Test format edgelist."""
        g = build_graph(3, [(2, 1), (1, 0)])
        assert format_edgelist(g) == "3 2\n0 1\n1 2\n"

    def test_written_pair_reads_back(self) -> None:
        """Test written pair reads back."""
        pair = GraphPair(gen_named(GraphModel.COMPLETE, 4), gen_named(GraphModel.CYCLE, 4))
        parsed = read_pair(io.StringIO(format_pair(pair)))
        assert parsed.g == pair.g and parsed.g_prime == pair.g_prime

    def test_read_graph(self, petersen: Graph) -> None:
        """Test read graph."""
        assert read_graph(io.StringIO(format_edgelist(petersen))) == petersen
