"""
Operations on directed hypergraphs: validation, connectivity, the Cartesian
product, 2-sections, lexicographic orderings, increments and layers.
"""
from bisect import bisect_left
from functools import reduce
from itertools import combinations
from typing import Collection, Iterable, List, Sequence

from hyperfactor.core.errors import ValidationError, Violation
from hyperfactor.core.types import (
    CanonicalOrder,
    Coordinatization,
    DirectedHypergraph,
    Hyperarc,
    UndirectedGraph,
)
from hyperfactor.utils.union_find import UnionFind


def K1(name: str = "1") -> DirectedHypergraph:
    """The trivial hypergraph: one vertex, no arcs. Unit of the Cartesian product."""
    return DirectedHypergraph((name,))


def validate(h: DirectedHypergraph) -> List[Violation]:
    """Returns every violated invariant; an empty list means the hypergraph is valid."""
    violations: List[Violation] = []

    seen_names = set()
    for name in h.names:
        if name in seen_names:
            violations.append(Violation(None, "duplicate-name", f"vertex name {name!r} is used twice"))
        seen_names.add(name)

    first_index = {}
    for i, arc in enumerate(h.arcs):
        if not arc.tail:
            violations.append(Violation(i, "empty-tail", "tail is empty"))
        if not arc.head:
            violations.append(Violation(i, "empty-head", "head is empty"))
        dangling = [v for v in arc.vertices if not 0 <= v < h.n]
        if dangling:
            violations.append(Violation(i, "dangling", f"unknown vertex ids {dangling}"))
        if arc.tail and arc.head and len(arc.vertices) < 2:
            violations.append(Violation(i, "loop", "arc spans a single vertex"))

        key = arc.set_key
        if key in first_index:
            violations.append(Violation(i, "multi-arc", f"duplicates arc {first_index[key]}"))
        else:
            first_index[key] = i

    return violations


def ensure_valid(h: DirectedHypergraph) -> DirectedHypergraph:
    violations = validate(h)
    if violations:
        raise ValidationError(violations)
    return h


def is_connected(h: DirectedHypergraph) -> bool:
    """Weak connectivity: one component of the vertex-arc incidence structure."""
    if h.n <= 1:
        return True
    sets = UnionFind(h.n)
    components = h.n
    for arc in h.arcs:
        first = arc.vertices[0]
        for v in arc.vertices[1:]:
            if sets.join(first, v):
                components -= 1
    return components == 1


def cartesian_product(h1: DirectedHypergraph, h2: DirectedHypergraph) -> DirectedHypergraph:
    """
    H1 □ H2. Vertex (x, y) gets id x * n2 + y and the display name "a|b".
    """
    n2 = h2.n
    names = tuple(f"{a}|{b}" for a in h1.names for b in h2.names)

    arcs = {}
    for x in range(h1.n):
        base = x * n2
        for f in h2.arcs:
            arc = Hyperarc.of((base + y for y in f.tail), (base + y for y in f.head))
            arcs.setdefault(arc, None)
    for e in h1.arcs:
        for y in range(n2):
            arc = Hyperarc.of((x * n2 + y for x in e.tail), (x * n2 + y for x in e.head))
            arcs.setdefault(arc, None)

    return DirectedHypergraph(names, tuple(arcs))


def product_of(*hypergraphs: DirectedHypergraph) -> DirectedHypergraph:
    """Left fold of the Cartesian product; the empty product is K1."""
    if not hypergraphs:
        return K1()
    return reduce(cartesian_product, hypergraphs)


def two_section(h: DirectedHypergraph) -> UndirectedGraph:
    edges = set()
    for arc in h.arcs:
        edges.update(combinations(arc.vertices, 2))
    return UndirectedGraph.from_edges(h.n, edges)


def induced(h: DirectedHypergraph, keep: Collection[int]) -> DirectedHypergraph:
    """Induced sub-hypergraph <V'>. Kept vertices retain their names and relative id order."""
    kept = sorted(set(keep))
    new_id = {v: i for i, v in enumerate(kept)}
    arcs = tuple(
        Hyperarc(tuple(new_id[v] for v in e.tail), tuple(new_id[v] for v in e.head))
        for e in h.arcs
        if all(v in new_id for v in e.vertices)
    )
    return DirectedHypergraph(tuple(h.names[v] for v in kept), arcs)


def rename(h: DirectedHypergraph, order: Sequence[int], names: Sequence[str]) -> DirectedHypergraph:
    """
    Re-indexes vertices so that old vertex order[i] becomes new vertex i named names[i].
    """
    new_id = [0] * h.n
    for i, v in enumerate(order):
        new_id[v] = i
    return DirectedHypergraph(tuple(names), tuple(e.relabel(new_id) for e in h.arcs))


def differing_coordinates(c: Coordinatization, x: int, y: int) -> List[int]:
    """1-based coordinate indices in which x and y differ."""
    return [i + 1 for i, (a, b) in enumerate(zip(c.coords[x], c.coords[y])) if a != b]


def canonical_order(h: DirectedHypergraph, c: Coordinatization) -> CanonicalOrder:
    vertices = c.lex_order()
    rank = [0] * h.n
    for position, v in enumerate(vertices):
        rank[v] = position

    arcs = [
        Hyperarc(tuple(sorted(e.tail, key=rank.__getitem__)), tuple(sorted(e.head, key=rank.__getitem__)))
        for e in h.arcs
    ]
    order = CanonicalOrder(tuple(vertices), tuple(rank), ())
    arcs.sort(key=order.key)
    return CanonicalOrder(tuple(vertices), tuple(rank), tuple(arcs))


def increment_vertex(c: Coordinatization, v: int, i: int) -> int:
    """Coordinate i (1-based) of v plus one, wrapping l_i back to 1."""
    position = c.position(v)
    stride = c.strides[i - 1]
    size = c.factor_sizes[i - 1]
    if c.coords[v][i - 1] < size:
        return c.vertex_at(position + stride)
    return c.vertex_at(position - (size - 1) * stride)


def increment_arc(c: Coordinatization, arc: Hyperarc, i: int) -> Hyperarc:
    return Hyperarc(
        tuple(increment_vertex(c, v, i) for v in arc.tail),
        tuple(increment_vertex(c, v, i) for v in arc.head),
    )


def arc_in_set(order: CanonicalOrder, arc: Hyperarc) -> bool:
    """Binary search for `arc` in E_lex. `arc` must be sorted by the order's vertex rank."""
    keys = order.keys
    key = order.key(arc)
    at = bisect_left(keys, key)
    return at < len(keys) and keys[at] == key


def layer_vertices(c: Coordinatization, indices: Iterable[int], v: int) -> List[int]:
    """Vertices u with u_i = v_i for every coordinate i (1-based) outside `indices`."""
    free = set(indices)
    fixed = [(i, x) for i, x in enumerate(c.coords[v]) if i + 1 not in free]
    return [u for u, vector in enumerate(c.coords) if all(vector[i] == x for i, x in fixed)]


def extract_layer(
    h: DirectedHypergraph, c: Coordinatization, indices: Iterable[int], v: int
) -> DirectedHypergraph:
    """The I'-layer through v: induced sub-hypergraph fixing all coordinates outside I'."""
    return induced(h, layer_vertices(c, indices, v))
