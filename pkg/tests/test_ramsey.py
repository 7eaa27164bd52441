"""Tests for the multicolour Ramsey pipeline."""

from typing import Any

import numpy as np
import pytest

from induced_paths.exceptions import PipelineError
from induced_paths.generators import gen_gnp, gen_named
from induced_paths.graph import build_graph
from induced_paths.ramsey import (
    ColoredGraph,
    color_edges,
    densest_color_class,
    peel_min_degree,
    run_ramsey_pipeline,
)
from induced_paths.search import is_induced, is_path
from induced_paths.types import ColoringStrategy, GraphModel, RamseyParams, RamseyReport


class TestColoring:
    """Test cases for edge colourings."""

    def test_uniform_colours_every_edge(self) -> None:
        """Test uniform colours every edge."""
        g = gen_gnp(60, 0.2, seed=1)
        colored = color_edges(g, 4, ColoringStrategy.UNIFORM_RANDOM, seed=2)
        assert len(colored.colors) == g.m
        assert colored.colors.min() >= 0 and colored.colors.max() < 4
        assert colored.class_sizes().sum() == g.m

    def test_uniform_is_seeded(self) -> None:
        """Test uniform is seeded."""
        g = gen_gnp(60, 0.2, seed=1)
        a = color_edges(g, 3, ColoringStrategy.UNIFORM_RANDOM, seed=5)
        b = color_edges(g, 3, ColoringStrategy.UNIFORM_RANDOM, seed=5)
        assert np.array_equal(a.colors, b.colors)

    def test_balanced_ignores_seed(self) -> None:
        """Test balanced ignores seed."""
        g = gen_named(GraphModel.COMPLETE, 7)
        a = color_edges(g, 3, ColoringStrategy.ADVERSARIAL_BALANCED, seed=1)
        b = color_edges(g, 3, ColoringStrategy.ADVERSARIAL_BALANCED, seed=2)
        assert np.array_equal(a.colors, b.colors)

    def test_balanced_spreads_colours_at_a_vertex(self) -> None:
        """Test balanced spreads colours at a vertex."""
        g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
        colored = color_edges(g, 3, ColoringStrategy.ADVERSARIAL_BALANCED)
        assert sorted(colored.colors.tolist()) == [0, 1, 2]

    def test_densest_colour_tie_takes_least_index(self) -> None:
        """Test densest colour tie takes least index."""
        g = build_graph(3, [(0, 1), (1, 2)])
        colored = ColoredGraph(g, np.array([1, 0], dtype=np.int64), 2)
        assert colored.densest_color == 0
        assert densest_color_class(colored).edge_list() == [(1, 2)]

    def test_invalid_colouring(self) -> None:
        """Test invalid colouring."""
        g = build_graph(3, [(0, 1), (1, 2)])
        with pytest.raises(ValueError):
            ColoredGraph(g, np.array([0, 2], dtype=np.int64), 2)
        with pytest.raises(ValueError):
            ColoredGraph(g, np.array([0], dtype=np.int64), 2)
        with pytest.raises(ValueError):
            color_edges(g, 0, ColoringStrategy.UNIFORM_RANDOM)


class TestPeeling:
    """Test cases for minimum-degree peeling."""

    def test_pendant_removed(self) -> None:
        """Test pendant removed."""
        g = build_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])
        result = peel_min_degree(g, 2)
        assert result.survivors.tolist() == [0, 1, 2]
        assert result.removed_order == [3]
        assert result.g_prime.min_degree() == 2

    def test_path_peels_completely(self) -> None:
        """Test path peels completely."""
        result = peel_min_degree(gen_named(GraphModel.PATH, 6), 2)
        assert len(result.survivors) == 0
        assert result.removed_order == [0, 1, 2, 3, 4, 5]

    def test_cycle_untouched(self) -> None:
        """Test cycle untouched."""
        result = peel_min_degree(gen_named(GraphModel.CYCLE, 6), 2)
        assert result.survivors.tolist() == list(range(6))
        assert result.removed_order == []

    def test_fractional_threshold(self) -> None:
        """Test fractional threshold."""
        result = peel_min_degree(gen_named(GraphModel.PATH, 3), 0.5)
        assert len(result.survivors) == 3

    def test_survivors_independent_of_order(self) -> None:
        """Test survivors independent of order."""
        g = gen_gnp(120, 0.05, seed=9)
        reference = peel_min_degree(g, 4).survivors
        for seed in range(3):
            shuffled = peel_min_degree(g, 4, order="random", seed=seed)
            assert np.array_equal(shuffled.survivors, reference)
            assert shuffled.g_prime.n == 0 or shuffled.g_prime.min_degree() >= 4

    def test_average_degree_never_drops(self) -> None:
        """Test peeling a sparse binomial graph keeps min degree and average degree up."""
        g = gen_gnp(5000, 0.004, seed=1)
        result = peel_min_degree(g, 5)
        assert result.g_prime.n > 0
        assert result.g_prime.min_degree() >= 5
        assert 2 * result.g_prime.m / result.g_prime.n >= 2 * g.m / g.n

    def test_negative_threshold(self) -> None:
        """Test negative threshold."""
        with pytest.raises(ValueError):
            peel_min_degree(build_graph(2, []), -1)


class TestPipeline:
    """Test cases for the end-to-end pipeline."""

    def test_witness_is_monochromatic_and_induced(self) -> None:
        """Test witness is monochromatic and induced."""
        params = RamseyParams(n=100, k=3, c=10.0)
        report = run_ramsey_pipeline(params, seed=4)
        assert report.checks_passed
        assert report.failure is None
        assert report.survivor_n > 0
        assert report.survivor_min_deg >= report.threshold
        assert report.found_len == len(report.witness) - 1
        assert report.m_host > report.m_densest > 0
        assert report.avg_degree_survivor >= report.threshold

    @pytest.mark.parametrize("k,c", [(2, 6.0), (3, 8.0), (3, 12.0)])
    def test_peeling_raises_average_degree(self, k: int, c: float) -> None:
        """Test survivors of every run keep the threshold and a non-decreasing average degree."""
        params = RamseyParams(n=1000, k=k, c=c)
        for seed in range(2):
            report = run_ramsey_pipeline(params, seed=seed)
            assert report.checks_passed
            assert report.survivor_min_deg >= report.threshold
            assert report.avg_degree_survivor >= report.avg_degree_densest

    @pytest.mark.slow
    @pytest.mark.parametrize("k", [2, 3])
    @pytest.mark.parametrize("c", [6.0, 8.0, 12.0])
    def test_acceptance_scale_runs(self, k: int, c: float, record_property: Any) -> None:
        """Test twenty seeded runs at n = 20000 and record how often the target is met."""
        params = RamseyParams(n=20000, k=k, c=c)
        met = 0
        for seed in range(20):
            report = run_ramsey_pipeline(params, seed=seed)
            assert report.checks_passed
            assert report.survivor_min_deg >= report.threshold
            assert report.avg_degree_survivor >= report.avg_degree_densest
            met += report.target_met
        record_property(f"target_met_k{k}_c{c:g}", met)

    def test_witness_uses_host_ids(self) -> None:
        """Test witness uses host ids."""
        params = RamseyParams(n=100, k=3, c=10.0)
        report = run_ramsey_pipeline(params, seed=4)
        assert report.seed == 4
        assert all(0 <= v < params.vertex_count for v in report.witness)

    def test_reproducible(self) -> None:
        """Test reproducible."""
        params = RamseyParams(n=60, k=2, c=8.0)
        first = run_ramsey_pipeline(params, ColoringStrategy.ADVERSARIAL_BALANCED, seed=7)
        second = run_ramsey_pipeline(params, ColoringStrategy.ADVERSARIAL_BALANCED, seed=7)
        assert first == second

    def test_empty_survivors_raise_with_report(self) -> None:
        """Test empty survivors raise with report."""
        params = RamseyParams(n=10, k=2, c=1.0, edge_probability=1e-9)
        with pytest.raises(PipelineError) as excinfo:
            run_ramsey_pipeline(params, seed=0)
        report = excinfo.value.report
        assert isinstance(report, RamseyReport)
        assert report.failure is not None
        assert report.m_host == 0

    def test_single_colour_needs_probability(self) -> None:
        """Test single colour needs probability."""
        with pytest.raises(ValueError):
            RamseyParams(n=10, k=1, c=1.0)
        params = RamseyParams(n=30, k=1, c=1.0, edge_probability=0.3)
        assert params.target_len is None
        report = run_ramsey_pipeline(params, seed=1)
        assert report.densest_color == 0
        assert report.m_densest == report.m_host
        assert not report.target_met

    def test_target_length(self) -> None:
        """Test target length."""
        params = RamseyParams(n=5000, k=8, c=2.0)
        assert params.target_len == int(5000 / (8 * np.log(8)))
        assert params.peel_threshold == pytest.approx(2 * np.log(8) / 4)


def test_path_helpers_on_witness_graph() -> None:
    """Test path helpers on witness graph."""
    g = gen_named(GraphModel.CYCLE, 6)
    assert is_path(g, [0, 1, 2, 3]) and is_induced(g, [0, 1, 2, 3])
