import networkx as nx
import pytest

from hyperfactor.core.errors import DisconnectedError, OracleCapExceeded
from hyperfactor.core.hypergraph import is_connected, product_of, validate
from hyperfactor.core.isomorphism import isomorphic
from hyperfactor.core.types import DirectedHypergraph, GeneratorConfig, UndirectedGraph
from hyperfactor.oracle.brute_force import (
    brute_force_pfd_graph,
    brute_force_pfd_hypergraph,
    same_factor_multiset,
    same_graph_multiset,
)
from hyperfactor.oracle.generators import (
    random_connected_graph,
    random_connected_hypergraph,
    random_prime_hypergraph,
    random_product,
)
from hyperfactor.resources.figures import fig1, fig2, m2


def arrow() -> DirectedHypergraph:
    return DirectedHypergraph.from_named_arcs([(["1"], ["2"])])


def K(n: int) -> UndirectedGraph:
    return UndirectedGraph.from_networkx(nx.complete_graph(n))


# --- Brute force ---
def test_brute_force_prime_figure():
    factors = brute_force_pfd_hypergraph(fig1())
    assert len(factors) == 1
    assert isomorphic(factors[0], fig1()) is not None


@pytest.mark.parametrize("parts", [
    [m2(), m2()],
    [m2(), arrow()],
    [arrow(), arrow(), arrow()],
    [m2(), DirectedHypergraph.from_named_arcs([(["1"], ["2", "3"]), (["3"], ["4"])])],
])
def test_brute_force_products(parts):
    factors = brute_force_pfd_hypergraph(product_of(*parts))
    assert same_factor_multiset(factors, parts)


def test_brute_force_trivial():
    assert brute_force_pfd_hypergraph(DirectedHypergraph(("1",))) == []


def test_brute_force_caps():
    with pytest.raises(OracleCapExceeded):
        brute_force_pfd_hypergraph(fig2())
    with pytest.raises(OracleCapExceeded):
        brute_force_pfd_graph(UndirectedGraph.from_networkx(nx.path_graph(13)))


def test_brute_force_disconnected():
    with pytest.raises(DisconnectedError):
        brute_force_pfd_hypergraph(DirectedHypergraph.from_named_arcs([(["1"], ["2"]), (["3"], ["4"])]))


@pytest.mark.parametrize("graph, expected", [
    (nx.cycle_graph(4), [K(2), K(2)]),
    (nx.hypercube_graph(3), [K(2), K(2), K(2)]),
    (nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(2)), [K(4), K(2)]),
    (nx.cartesian_product(nx.path_graph(3), nx.path_graph(4)),
     [UndirectedGraph.from_networkx(nx.path_graph(3)), UndirectedGraph.from_networkx(nx.path_graph(4))]),
    (nx.petersen_graph(), [UndirectedGraph.from_networkx(nx.petersen_graph())]),
])
def test_brute_force_graphs(graph, expected):
    assert same_graph_multiset(brute_force_pfd_graph(UndirectedGraph.from_networkx(graph)), expected)


def test_multiset_comparison():
    assert same_factor_multiset([m2(), fig1()], [fig1(), m2()])
    assert not same_factor_multiset([m2(), m2()], [m2(), arrow()])
    assert not same_factor_multiset([m2()], [m2(), m2()])
    assert not same_graph_multiset([K(2), K(3)], [K(3), K(3)])


# --- Generators ---
def test_config_validation():
    with pytest.raises(ValueError):
        GeneratorConfig(n=0)
    with pytest.raises(ValueError):
        GeneratorConfig(r=1)
    with pytest.raises(ValueError):
        GeneratorConfig(arc_density=0)
    with pytest.raises(ValueError):
        GeneratorConfig(directed_fraction=1.5)


@pytest.mark.parametrize("seed", range(25))
def test_generated_hypergraphs_are_valid(seed):
    cfg = GeneratorConfig(seed=seed, n=2 + seed % 7, r=2 + seed % 3)
    h = random_connected_hypergraph(cfg)
    assert validate(h) == []
    assert is_connected(h)
    assert h.rank <= cfg.r
    assert h.n == cfg.n


def test_generators_are_pure_in_the_seed():
    cfg = GeneratorConfig(seed=11, n=6)
    assert random_connected_hypergraph(cfg) == random_connected_hypergraph(cfg)
    assert random_prime_hypergraph(cfg) == random_prime_hypergraph(cfg)
    assert random_product(cfg, 2) == random_product(cfg, 2)
    assert random_connected_graph(3, 7, 0.3) == random_connected_graph(3, 7, 0.3)


@pytest.mark.parametrize("seed", range(10))
def test_random_prime_is_certified(seed):
    h = random_prime_hypergraph(GeneratorConfig(seed=seed, n=4 + seed % 3))
    assert len(brute_force_pfd_hypergraph(h)) == 1


def test_random_prime_needs_two_vertices():
    with pytest.raises(ValueError):
        random_prime_hypergraph(GeneratorConfig(n=1))


@pytest.mark.parametrize("j", [2, 3])
def test_random_product_shape(j):
    h, factors = random_product(GeneratorConfig(seed=j, n=3), j)
    assert len(factors) == j
    assert h.n == product_of(*factors).n
    assert isomorphic(h, product_of(*factors)) is not None
    assert is_connected(h)


def test_random_product_with_given_sizes():
    h, factors = random_product(GeneratorConfig(seed=1), 2, sizes=[2, 3])
    assert [f.n for f in factors] == [2, 3]
    assert h.n == 6


def test_random_graph_is_connected():
    for seed in range(20):
        g = random_connected_graph(seed, 7, 0.2)
        assert nx.is_connected(g.to_networkx())
