"""
Cartesian prime factor decomposition of connected undirected graphs.

The edge relation used here relates two edges when they must lie in the same
factor of every product representation:
  * adjacent edges on a common triangle,
  * adjacent edges xy, xz that do not span exactly one chordless square,
  * opposite edges of a chordless square.
Its transitive closure (union-find) is at least as fine as the product
relation. When the closure is not a product relation itself, classes are
merged into the finest product relation that is coarser than it.
"""
import logging
from collections import deque
from itertools import combinations
from math import prod
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

import networkx as nx

from hyperfactor.core.errors import ConsistencyError, DisconnectedError, ProductRelationError
from hyperfactor.core.types import Coordinatization, Edge, EdgeColoring, UndirectedGraph
from hyperfactor.utils.union_find import UnionFind

logger = logging.getLogger(__name__)


class GraphFactorization(NamedTuple):
    factors: Tuple[UndirectedGraph, ...]
    coordinates: Coordinatization
    coloring: EdgeColoring


def _bfs(graph: UndirectedGraph, root: int = 0) -> Tuple[List[int], List[int]]:
    level = [-1] * graph.n
    level[root] = 0
    order = [root]
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in graph.adjacency[v]:
            if level[w] < 0:
                level[w] = level[v] + 1
                order.append(w)
                queue.append(w)
    return order, level


def is_connected_graph(graph: UndirectedGraph) -> bool:
    if graph.n <= 1:
        return True
    order, _ = _bfs(graph)
    return len(order) == graph.n


def coordinates_from_coloring(graph: UndirectedGraph, coloring: Optional[EdgeColoring] = None) -> Coordinatization:
    """
    Breadth-first coordinates from a product-relation coloring.

    Vertex 0 gets the all-ones vector. A vertex whose previous-level neighbors
    all share color c lies in the c-layer of the root and receives the next
    unused value of coordinate c; otherwise its coordinates are copied from two
    previous-level neighbors of different colors. The result is then verified;
    a coloring that is not a product relation raises ProductRelationError.
    Without an explicit coloring the graph's own edge colors are used.
    """
    if coloring is None:
        coloring = graph.colors or {}
    n = graph.n
    edges = graph.edges()
    missing = [e for e in edges if e not in coloring]
    if missing or len(coloring) != len(edges):
        raise ProductRelationError("colors", f"coloring is not total on the edge set (e.g. {missing[:1]})")
    palette = set(coloring.values())
    k = len(palette)
    if palette != set(range(1, k + 1)):
        raise ProductRelationError("colors", f"colors {sorted(palette)} are not 1..{k}")

    if n == 1:
        return Coordinatization((), ((),))

    order, level = _bfs(graph)
    if len(order) != n:
        raise DisconnectedError("graph is not connected")

    coords: List[Optional[Tuple[int, ...]]] = [None] * n
    coords[order[0]] = (1,) * k
    last_value = [1] * k

    for v in order[1:]:
        first = second = None
        for u in graph.adjacency[v]:
            if level[u] != level[v] - 1:
                continue
            c = coloring[(u, v) if u < v else (v, u)]
            if first is None:
                first = (c, u)
            elif c != first[0]:
                second = (c, u)
                break

        c, u = first
        vector = list(coords[u])
        if second is None:
            last_value[c - 1] += 1
            vector[c - 1] = last_value[c - 1]
        else:
            vector[c - 1] = coords[second[1]][c - 1]
        coords[v] = tuple(vector)

    sizes = tuple(last_value)
    _verify_grid(graph, coloring, coords, sizes)
    return Coordinatization(sizes, tuple(coords))


def _verify_grid(graph: UndirectedGraph, coloring: EdgeColoring, coords, sizes: Tuple[int, ...]) -> None:
    n = graph.n
    flat = [c + 1 for c, size in enumerate(sizes) if size < 2]
    if flat:
        raise ProductRelationError("grid", f"color {flat[0]} never leaves the root")

    owner: Dict[Tuple[int, ...], int] = {}
    for v, vector in enumerate(coords):
        if vector in owner:
            raise ProductRelationError("clash", f"vertices {owner[vector]} and {v} both get {vector}")
        owner[vector] = v

    if prod(sizes) != n:
        raise ProductRelationError("grid", f"{n} vertices do not fill the grid {sizes}")

    pairs: List[set] = [set() for _ in sizes]
    counts = [0] * len(sizes)
    for (u, v), c in coloring.items():
        cu, cv = coords[u], coords[v]
        diff = [i for i in range(len(sizes)) if cu[i] != cv[i]]
        if diff != [c - 1]:
            raise ProductRelationError(
                "edge", f"edge {u}-{v} of color {c} differs in coordinates {[i + 1 for i in diff]}"
            )
        a, b = cu[c - 1], cv[c - 1]
        pairs[c - 1].add((a, b) if a < b else (b, a))
        counts[c - 1] += 1

    for i, size in enumerate(sizes):
        if counts[i] != len(pairs[i]) * (n // size):
            raise ProductRelationError("layer", f"the layers of color {i + 1} are not copies of one factor")


def square_classes(graph: UndirectedGraph) -> Tuple[List[Edge], List[int], int]:
    """Closure of the square relation. Returns (edges, class label per edge, class count)."""
    edges = graph.edges()
    edge_id = {e: i for i, e in enumerate(edges)}
    adjacency = [set(ns) for ns in graph.adjacency]
    sets = UnionFind(len(edges))

    def eid(a: int, b: int) -> int:
        return edge_id[(a, b) if a < b else (b, a)]

    for x in range(graph.n):
        neighbors = graph.adjacency[x]
        for a, y in enumerate(neighbors):
            xy = eid(x, y)
            for z in neighbors[a + 1:]:
                xz = eid(x, z)
                if z in adjacency[y]:
                    sets.join(xy, xz)
                    continue

                common = adjacency[y] & adjacency[z]
                common.discard(x)
                chordless = [w for w in common if w not in adjacency[x]]
                for w in chordless:
                    sets.join(xy, eid(w, z))
                    sets.join(xz, eid(w, y))
                if len(common) != 1 or len(chordless) != 1:
                    sets.join(xy, xz)

    labels = sets.labels()
    return edges, labels, max(labels, default=-1) + 1


def _try_coordinates(graph: UndirectedGraph, coloring: EdgeColoring) -> Optional[Coordinatization]:
    try:
        return coordinates_from_coloring(graph, coloring)
    except ProductRelationError:
        return None


def _product_classes(graph: UndirectedGraph, edges: List[Edge], labels: List[int], t: int) -> List[Tuple[int, ...]]:
    """Groups square-relation classes into the classes of the finest product relation."""
    if t <= 1:
        return [tuple(range(t))]

    full = {e: labels[i] + 1 for i, e in enumerate(edges)}
    if _try_coordinates(graph, full) is not None:
        return [(c,) for c in range(t)]

    logger.debug("square relation with %d classes is not a product relation; repairing", t)
    remaining = list(range(t))
    groups: List[Tuple[int, ...]] = []
    while remaining:
        found = None
        for size in range(1, len(remaining) // 2 + 1):
            for subset in combinations(remaining, size):
                chosen = set(subset)
                split = {e: 1 if labels[i] in chosen else 2 for i, e in enumerate(edges)}
                if _try_coordinates(graph, split) is not None:
                    found = subset
                    break
            if found:
                break
        if found is None:
            groups.append(tuple(remaining))
            break
        groups.append(found)
        remaining = [c for c in remaining if c not in found]

    logger.debug("merged square classes into %s", groups)
    return groups


def _root_layer(coords: Coordinatization, coloring: EdgeColoring, color: int):
    """Edges of the `color`-layer through the all-ones vertex, in coordinate values (0-based)."""
    k = coords.k
    ones = (1,) * k
    in_layer = {
        v for v in range(coords.n)
        if all(x == 1 for i, x in enumerate(coords.coords[v]) if i != color - 1)
    }
    layer_edges = sorted(
        tuple(sorted((coords.coords[u][color - 1] - 1, coords.coords[v][color - 1] - 1)))
        for (u, v), c in coloring.items()
        if c == color and u in in_layer and v in in_layer
    )
    root = coords.vertex_of(ones)
    return root, layer_edges


def _ordered_colors(graph: UndirectedGraph, coords: Coordinatization, coloring: EdgeColoring) -> List[int]:
    """
    Colors sorted by (factor order, factor size, Weisfeiler-Lehman hash of the
    factor). The hash does not depend on vertex ids, so relabelled inputs list
    their factors in the same order. Ties go to the factor whose first root
    neighbor has the larger vertex id.
    """
    keys = []
    for color in range(1, coords.k + 1):
        root, layer_edges = _root_layer(coords, coloring, color)
        factor = nx.Graph()
        factor.add_nodes_from(range(coords.factor_sizes[color - 1]))
        factor.add_edges_from(layer_edges)
        anchor = min(
            w for w in graph.adjacency[root] if coloring[(root, w) if root < w else (w, root)] == color
        )
        keys.append((
            (factor.number_of_nodes(), len(layer_edges), nx.weisfeiler_lehman_graph_hash(factor), -anchor),
            color,
        ))
    return [color for _, color in sorted(keys)]


def pfd_graph(graph: UndirectedGraph) -> GraphFactorization:
    """
    Prime factors, coordinates and product-relation coloring of a connected graph.
    Factors are graphs on 0..l-1 where vertex x stands for coordinate value x+1.
    """
    if graph.n == 0:
        raise ValueError("the empty graph has no factorization")
    if not is_connected_graph(graph):
        raise DisconnectedError("prime factorization needs a connected graph")
    if graph.n == 1:
        return GraphFactorization((), Coordinatization((), ((),)), {})

    edges, labels, t = square_classes(graph)
    groups = _product_classes(graph, edges, labels, t)
    group_of = {c: g for g, members in enumerate(groups) for c in members}
    coloring = {e: group_of[labels[i]] + 1 for i, e in enumerate(edges)}

    coords = _try_coordinates(graph, coloring)
    if coords is None:
        raise ConsistencyError("merged product relation failed to coordinatize")

    order = _ordered_colors(graph, coords, coloring)
    new_color = {old: new for new, old in enumerate(order, start=1)}
    coords = Coordinatization(
        tuple(coords.factor_sizes[c - 1] for c in order),
        tuple(tuple(vector[c - 1] for c in order) for vector in coords.coords),
    )
    coloring = {e: new_color[c] for e, c in coloring.items()}

    factors = []
    for color in range(1, coords.k + 1):
        _, layer_edges = _root_layer(coords, coloring, color)
        factors.append(UndirectedGraph.from_edges(coords.factor_sizes[color - 1], layer_edges))

    logger.debug("graph with n=%d, m=%d has %d prime factors", graph.n, graph.m, len(factors))
    return GraphFactorization(tuple(factors), coords, coloring)


def factor_layer(coords: Coordinatization, color: int, v: int) -> List[int]:
    """Vertices of the `color`-layer through v."""
    fixed = coords.coords[v]
    return [
        u for u in range(coords.n)
        if all(x == fixed[i] for i, x in enumerate(coords.coords[u]) if i != color - 1)
    ]


def graph_from_layer(graph: UndirectedGraph, vertices: Sequence[int]) -> UndirectedGraph:
    """Induced subgraph on `vertices`, relabeled 0..len-1 in the given order."""
    position = {v: i for i, v in enumerate(vertices)}
    return UndirectedGraph.from_edges(
        len(vertices),
        ((position[u], position[w]) for u in vertices for w in graph.adjacency[u] if w in position and u < w),
    )
