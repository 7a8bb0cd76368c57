import math

import networkx as nx
import numpy as np
import pytest

from hyperfactor.core.errors import DisconnectedError, ProductRelationError
from hyperfactor.core.hypergraph import two_section
from hyperfactor.core.types import UndirectedGraph
from hyperfactor.graphs.pfd import (
    _product_classes,
    coordinates_from_coloring,
    factor_layer,
    graph_from_layer,
    pfd_graph,
    square_classes,
)
from hyperfactor.oracle.brute_force import same_graph_multiset
from hyperfactor.resources.figures import fig1


def G(graph: nx.Graph) -> UndirectedGraph:
    return UndirectedGraph.from_networkx(graph)


def K(n: int) -> UndirectedGraph:
    return G(nx.complete_graph(n))


def prism() -> UndirectedGraph:
    return G(nx.cartesian_product(nx.complete_graph(3), nx.complete_graph(2)))


@pytest.mark.parametrize("graph, expected", [
    (G(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(2))), [K(2), K(4)]),
    (G(nx.cycle_graph(4)), [K(2), K(2)]),
    (G(nx.cycle_graph(5)), [G(nx.cycle_graph(5))]),
    (K(4), [K(4)]),
    (prism(), [K(2), K(3)]),
    (K(2), [K(2)]),
    (G(nx.path_graph(3)), [G(nx.path_graph(3))]),
])
def test_known_factorizations(graph, expected):
    factors, coordinates, _ = pfd_graph(graph)
    assert same_graph_multiset(factors, expected)
    assert coordinates.k == len(expected)


@pytest.mark.parametrize("d", range(1, 7))
def test_hypercube(d):
    factors, coordinates, coloring = pfd_graph(G(nx.hypercube_graph(d)))
    assert len(factors) == d
    assert all(f.n == 2 and f.m == 1 for f in factors)
    assert set(coloring.values()) == set(range(1, d + 1))


def test_two_section_of_figure():
    factors, coordinates, _ = pfd_graph(two_section(fig1()))
    assert coordinates.factor_sizes == (2, 4)
    assert [f.m for f in factors] == [1, 6]


def test_single_vertex():
    factors, coordinates, coloring = pfd_graph(UndirectedGraph.from_edges(1, []))
    assert factors == ()
    assert coordinates.k == 0
    assert coordinates.coords == ((),)
    assert coloring == {}


def test_disconnected_input():
    with pytest.raises(DisconnectedError):
        pfd_graph(UndirectedGraph.from_edges(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("graph", [
    G(nx.hypercube_graph(4)),
    prism(),
    G(nx.cartesian_product(nx.cycle_graph(5), nx.path_graph(3))),
    G(nx.grid_2d_graph(3, 4)),
])
def test_coordinates_follow_colors(graph):
    factors, coordinates, coloring = pfd_graph(graph)
    assert coordinates.k <= math.log2(graph.n)
    for (u, v), color in coloring.items():
        diff = [i + 1 for i, (a, b) in enumerate(zip(coordinates.coords[u], coordinates.coords[v])) if a != b]
        assert diff == [color]


def test_layers_are_copies_of_one_factor():
    graph = G(nx.cartesian_product(nx.cycle_graph(5), nx.path_graph(3)))
    factors, coordinates, _ = pfd_graph(graph)
    for color, factor in enumerate(factors, start=1):
        for v in range(graph.n):
            layer = graph_from_layer(graph, factor_layer(coordinates, color, v))
            assert nx.is_isomorphic(layer.to_networkx(), factor.to_networkx())


def test_square_classes_of_grid():
    _, _, count = square_classes(G(nx.cartesian_product(nx.complete_graph(4), nx.complete_graph(2))))
    assert count == 2


def test_triangle_is_one_class():
    _, labels, count = square_classes(K(3))
    assert count == 1
    assert labels == [0, 0, 0]


# --- Coordinates from a coloring ---
def test_single_color_is_a_trivial_product():
    cycle = G(nx.cycle_graph(4))
    c = coordinates_from_coloring(cycle, {e: 1 for e in cycle.edges()})
    assert c.factor_sizes == (4,)


def test_noncontiguous_colors():
    path = UndirectedGraph.from_edges(2, [(0, 1)])
    with pytest.raises(ProductRelationError) as info:
        coordinates_from_coloring(path, {(0, 1): 2})
    assert info.value.kind == "colors"


def test_partial_coloring():
    path = UndirectedGraph.from_edges(3, [(0, 1), (1, 2)])
    with pytest.raises(ProductRelationError) as info:
        coordinates_from_coloring(path, {(0, 1): 1})
    assert info.value.kind == "colors"


def test_triangle_does_not_fill_a_grid():
    triangle = K(3)
    with pytest.raises(ProductRelationError) as info:
        coordinates_from_coloring(triangle, {(0, 1): 1, (0, 2): 2, (1, 2): 1})
    assert info.value.kind == "grid"


def test_crossed_square_clashes():
    square = UndirectedGraph.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    with pytest.raises(ProductRelationError) as info:
        coordinates_from_coloring(square, {(0, 1): 1, (0, 2): 2, (1, 3): 1, (2, 3): 2})
    assert info.value.kind == "clash"


def test_merged_coloring_of_second_figure_section():
    from hyperfactor.resources.figures import fig2

    h = fig2()
    section = two_section(h)
    # x and z directions share a color, y gets its own
    coloring = {(u, v): 2 if h.names[u][1] != h.names[v][1] else 1 for u, v in section.edges()}
    c = coordinates_from_coloring(section, coloring)
    assert sorted(c.factor_sizes) == [2, 8]


# --- Merging over-split classes ---
def test_split_complete_graph_merges_back():
    k4 = K(4)
    edges = k4.edges()
    labels = [0, 0, 0, 1, 1, 1]
    assert _product_classes(k4, edges, labels, 2) == [(0, 1)]


def test_singleton_classes_of_square():
    c4 = UndirectedGraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    edges = c4.edges()
    assert edges == [(0, 1), (0, 3), (1, 2), (2, 3)]
    # opposite edges (0,1),(2,3) and (0,3),(1,2) pair up
    assert _product_classes(c4, edges, [0, 1, 2, 3], 4) == [(0, 3), (1, 2)]


def test_halved_cube_directions():
    q3 = UndirectedGraph.from_edges(8, [(u, u | 1 << d) for u in range(8) for d in range(3) if not u & 1 << d])
    edges = q3.edges()
    labels = []
    for u, v in edges:
        d = (u ^ v).bit_length() - 1
        labels.append(2 * d + (u >> (d + 1) % 3 & 1))
    assert sorted(set(labels)) == list(range(6))
    assert _product_classes(q3, edges, labels, 6) == [(0, 1), (2, 3), (4, 5)]


def test_product_relation_needs_no_merging():
    c4 = G(nx.cycle_graph(4))
    edges, labels, count = square_classes(c4)
    assert _product_classes(c4, edges, labels, count) == [(0,), (1,)]


# --- Factor order ---
@pytest.mark.parametrize("seed", range(5))
def test_factor_order_survives_relabelling(seed):
    star_times_path = nx.cartesian_product(nx.star_graph(3), nx.path_graph(4))
    graph = G(star_times_path)
    perm = np.random.default_rng(seed).permutation(graph.n)
    shuffled = UndirectedGraph.from_edges(graph.n, [(int(perm[u]), int(perm[v])) for u, v in graph.edges()])
    first, _, _ = pfd_graph(graph)
    second, _, _ = pfd_graph(shuffled)
    assert len(first) == len(second) == 2
    for a, b in zip(first, second):
        assert nx.is_isomorphic(a.to_networkx(), b.to_networkx())


def test_graph_colors_are_the_default_coloring():
    square = UndirectedGraph.from_edges(
        4, [(0, 1), (0, 2), (1, 3), (2, 3)], colors={(0, 1): 1, (2, 3): 1, (0, 2): 2, (1, 3): 2}
    )
    assert coordinates_from_coloring(square).factor_sizes == (2, 2)
