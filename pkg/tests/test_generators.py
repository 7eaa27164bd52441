"""Tests for the seeded graph generators."""

import networkx as nx
import numpy as np
import pytest

from induced_paths.exceptions import GenerationError
from induced_paths.generators import (
    gen_clique_superimposed,
    gen_gnp,
    gen_named,
    gen_random_regular,
    generate,
    generate_with_cliques,
    make_rng,
)
from induced_paths.graph import Graph
from induced_paths.types import GenSpec, GraphModel


def as_networkx(g: Graph) -> nx.Graph:
    reference = nx.Graph()
    reference.add_nodes_from(range(g.n))
    reference.add_edges_from(g.edge_list())
    return reference


class TestRandomRegular:
    """Test cases for the configuration-model generator."""

    def test_degrees(self) -> None:
        """Test degrees."""
        g = gen_random_regular(10, 3, seed=1)
        assert g.degrees.tolist() == [3] * 10
        assert g.m == 15

    @pytest.mark.parametrize("n,d", [(50, 4), (101, 10), (64, 1), (30, 0)])
    def test_simple_and_regular(self, n: int, d: int) -> None:
        """Test simple and regular."""
        g = gen_random_regular(n, d, seed=n + d)
        assert g.is_regular()
        assert g.min_degree() == d
        reference = as_networkx(g)
        assert nx.number_of_selfloops(reference) == 0
        assert reference.number_of_edges() == n * d // 2

    def test_reproducible(self) -> None:
        """Test reproducible."""
        assert gen_random_regular(40, 10, seed=9) == gen_random_regular(40, 10, seed=9)

    def test_seed_changes_graph(self) -> None:
        """Test seed changes graph."""
        assert gen_random_regular(40, 4, seed=1) != gen_random_regular(40, 4, seed=2)

    def test_parity(self) -> None:
        """Test parity."""
        with pytest.raises(ValueError):
            gen_random_regular(5, 3, seed=0)

    def test_degree_range(self) -> None:
        """Test degree range."""
        with pytest.raises(ValueError):
            gen_random_regular(4, 4, seed=0)

    def test_restart_budget(self) -> None:
        """Test restart budget."""
        with pytest.raises(GenerationError):
            gen_random_regular(8, 6, seed=0, max_restarts=0)


class TestBinomial:
    """Test cases for G(n, p)."""

    def test_extremes(self) -> None:
        """Test extremes."""
        assert gen_gnp(20, 0.0, seed=0).m == 0
        assert gen_gnp(20, 1.0, seed=0).m == 190

    def test_edge_count_near_expectation(self) -> None:
        """Test edge count near expectation."""
        g = gen_gnp(2000, 0.01, seed=4)
        expected = 0.01 * 2000 * 1999 / 2
        assert abs(g.m - expected) < 5 * np.sqrt(expected)

    def test_reproducible(self) -> None:
        """Test reproducible."""
        assert gen_gnp(300, 0.05, seed=8) == gen_gnp(300, 0.05, seed=8)

    def test_endpoints_in_range(self) -> None:
        """Test endpoints in range."""
        edges = gen_gnp(50, 0.3, seed=2).edges()
        assert (edges[:, 0] < edges[:, 1]).all()
        assert edges.max() < 50

    def test_invalid_probability(self) -> None:
        """Test invalid probability."""
        with pytest.raises(ValueError):
            gen_gnp(10, 1.5, seed=0)

    def test_tiny_graphs(self) -> None:
        """Test tiny graphs."""
        assert gen_gnp(1, 0.5, seed=0).m == 0
        assert gen_gnp(0, 0.5, seed=0).n == 0


class TestCliqueSuperimposed:
    """Test cases for cliques placed over a base graph."""

    def test_cliques_are_disjoint_and_complete(self) -> None:
        """Test cliques are disjoint and complete."""
        base = GenSpec(model=GraphModel.RANDOM_REGULAR, n=60, d=3, seed=5)
        instance = gen_clique_superimposed(base, 4, 6, seed=6)
        members = [v for clique in instance.cliques for v in clique]
        assert len(members) == len(set(members)) == 24
        for clique in instance.cliques:
            assert clique == sorted(clique)
            for i, u in enumerate(clique):
                for v in clique[i + 1 :]:
                    assert instance.graph.has_edge(u, v)

    def test_base_edges_kept(self) -> None:
        """Test base edges kept."""
        base = GenSpec(model=GraphModel.CYCLE, n=30)
        instance = gen_clique_superimposed(base, 2, 5, seed=0)
        for u, v in generate(base).edge_list():
            assert instance.graph.has_edge(u, v)

    def test_too_many_cliques(self) -> None:
        """Test too many cliques."""
        base = GenSpec(model=GraphModel.PATH, n=10)
        with pytest.raises(GenerationError):
            gen_clique_superimposed(base, 3, 4, seed=0)

    def test_request_route(self) -> None:
        """Test a CliqueSuperimposed request builds the same graph both ways."""
        spec = GenSpec(
            model=GraphModel.CLIQUE_SUPERIMPOSED,
            clique_count=2,
            clique_size=3,
            base=GenSpec(model=GraphModel.GNP, n=20, p=0.0),
            seed=3,
        )
        instance = generate_with_cliques(spec)
        assert instance.graph.m == 6
        assert generate(spec) == instance.graph


class TestNamed:
    """Test cases for deterministic constructions."""

    def test_petersen_is_petersen(self) -> None:
        """Test petersen is petersen."""
        assert nx.is_isomorphic(as_networkx(gen_named(GraphModel.PETERSEN)), nx.petersen_graph())

    def test_cycle_path_complete(self) -> None:
        """Test cycle path complete."""
        assert gen_named(GraphModel.CYCLE, 7).m == 7
        assert gen_named(GraphModel.PATH, 7).m == 6
        assert gen_named(GraphModel.COMPLETE, 7).m == 21

    def test_short_cycle_rejected(self) -> None:
        """Test short cycle rejected."""
        with pytest.raises(ValueError):
            gen_named(GraphModel.CYCLE, 2)

    def test_random_model_is_not_named(self) -> None:
        """Test random model is not named."""
        with pytest.raises(ValueError):
            gen_named(GraphModel.GNP, 5)


class TestGenSpec:
    """Test cases for generator request validation."""

    def test_regular_needs_degree(self) -> None:
        """Test regular needs degree."""
        with pytest.raises(ValueError):
            GenSpec(model=GraphModel.RANDOM_REGULAR, n=10)

    def test_regular_parity(self) -> None:
        """Test regular parity."""
        with pytest.raises(ValueError):
            GenSpec(model=GraphModel.RANDOM_REGULAR, n=9, d=3)

    def test_gnp_needs_probability(self) -> None:
        """Test gnp needs probability."""
        with pytest.raises(ValueError):
            GenSpec(model=GraphModel.GNP, n=10)

    def test_dispatch(self) -> None:
        """Test dispatch."""
        g = generate(GenSpec(model=GraphModel.RANDOM_REGULAR, n=12, d=4, seed=1))
        assert g.is_regular() and g.min_degree() == 4


def test_rng_is_counter_based() -> None:
    """Test rng is counter based."""
    a = make_rng(123).integers(1 << 30, size=4)
    b = make_rng(123).integers(1 << 30, size=4)
    assert (a == b).all()
    assert isinstance(make_rng(0).bit_generator, np.random.Philox)
