"""Tests for the benchmark harness."""

from typing import Any, List

import pytest
from pydantic import ValidationError

from induced_paths.bench import CSV_COLUMNS, format_csv, instance_spec, measure, run_bench
from induced_paths.generators import gen_random_regular
from induced_paths.graph import GraphPair
from induced_paths.search import WORK_CONSTANT, run, verify_induced_path
from induced_paths.types import BenchOptions, BenchRow, GraphModel


class TestBench:
    """Test cases for benchmark rows and CSV output."""

    def test_regular_rows(self) -> None:
        """Test regular rows."""
        rows = run_bench(BenchOptions(sizes=[100, 200], d=4, repeats=2))
        assert [row.n for row in rows] == [100, 200]
        assert [row.m for row in rows] == [200, 400]
        for row in rows:
            assert row.median_nanos > 0
            assert 0 < row.work_ratio <= WORK_CONSTANT

    def test_gnp_probability_scales(self) -> None:
        """Test gnp probability scales."""
        spec = instance_spec(BenchOptions(model=GraphModel.GNP, sizes=[1000], p_scale=20), 1000)
        assert spec.p == pytest.approx(0.02)

    def test_work_counter_is_deterministic(self) -> None:
        """Test work counter is deterministic."""
        options = BenchOptions(model=GraphModel.GNP, sizes=[300], p_scale=10, repeats=1)
        assert measure(options, 300).work_counter == measure(options, 300).work_counter

    def test_csv(self) -> None:
        """Test csv."""
        rows = [BenchRow(n=10, m=15, median_nanos=1234, work_counter=99, work_ratio=2.475)]
        text = format_csv(rows)
        assert text.splitlines()[0] == ",".join(CSV_COLUMNS)
        assert text.splitlines()[1] == "10,15,1234,99,2.475000"

    def test_only_random_models(self) -> None:
        """Test only random models."""
        with pytest.raises(ValidationError):
            BenchOptions(model=GraphModel.PETERSEN, sizes=[10])

    def test_sizes_required(self) -> None:
        """Test sizes required."""
        with pytest.raises(ValidationError):
            BenchOptions(sizes=[])

    @pytest.mark.slow
    def test_parallel_matches_serial_counters(self) -> None:
        """Test parallel matches serial counters."""
        serial = run_bench(BenchOptions(sizes=[500, 1000], repeats=1))
        parallel = run_bench(BenchOptions(sizes=[500, 1000], repeats=1, jobs=2))
        assert [r.work_counter for r in serial] == [r.work_counter for r in parallel]

    def test_work_ratio_flat_across_doubling_sizes(self) -> None:
        """Test the work ratio stays in a narrow band as n doubles."""
        rows = run_bench(BenchOptions(sizes=[1024, 2048, 4096], d=10, repeats=1))
        ratios = [row.work_ratio for row in rows]
        assert max(ratios) <= WORK_CONSTANT
        assert max(ratios) <= 2.5 * min(ratios)

    @pytest.mark.slow
    def test_work_ratio_at_scale(self, record_property: Any) -> None:
        """Test the work ratio band for n from 2^14 to 2^20."""
        rows = run_bench(BenchOptions(sizes=[2**e for e in range(14, 21)], d=10, repeats=1))
        ratios = [row.work_ratio for row in rows]
        assert max(ratios) <= WORK_CONSTANT
        assert max(ratios) <= 2.5 * min(ratios)
        per_edge = [row.median_nanos / row.m for row in rows]
        record_property("nanos_per_edge_spread", max(per_edge) / min(per_edge))


class TestExpanderRuns:
    """Path lengths on random regular expanders, recorded rather than asserted."""

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [10, 20])
    def test_path_length_against_linear_scale(self, d: int, record_property: Any) -> None:
        """Test ten seeds at n = 50000 and record bestLen / (n / 32d)."""
        n = 50000
        scale = n / (32 * d)
        ratios: List[float] = []
        for seed in range(10):
            pair = GraphPair.single(gen_random_regular(n, d, seed))
            result = run(pair)
            assert verify_induced_path(pair, result.best_path)
            ratios.append(result.best_len / scale)
        record_property(f"length_ratios_d{d}", ratios)
        record_property(f"seeds_below_one_d{d}", sum(r < 1 for r in ratios))
