"""
Exhaustive prime factorization for tiny inputs, used as ground truth.

A hypergraph on n = a * b vertices splits if its vertices can be laid out on
an a x b grid so that every arc stays inside one row or one column and all
rows (and all columns) carry the same projected arcs. The search places
vertices in breadth-first order of the 2-section; a placed vertex must share
a row or a column with each placed neighbor, and new rows and columns are
opened in order.
"""
import logging
from collections import deque
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

import networkx as nx

from hyperfactor.core.errors import DisconnectedError, OracleCapExceeded
from hyperfactor.core.hypergraph import ensure_valid, is_connected
from hyperfactor.core.isomorphism import isomorphic
from hyperfactor.core.types import DirectedHypergraph, Hyperarc, UndirectedGraph

logger = logging.getLogger(__name__)

HYPERGRAPH_CAP = 8
GRAPH_CAP = 12

Cell = Tuple[int, int]
ArcKey = Tuple[FrozenSet[int], FrozenSet[int]]


def _neighbors(h: DirectedHypergraph) -> List[Set[int]]:
    adjacency: List[Set[int]] = [set() for _ in range(h.n)]
    for arc in h.arcs:
        for v in arc.vertices:
            adjacency[v].update(arc.vertices)
    for v in range(h.n):
        adjacency[v].discard(v)
    return adjacency


def _bfs_order(adjacency: List[Set[int]]) -> List[int]:
    order, seen = [0], {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in sorted(adjacency[v]):
            if w not in seen:
                seen.add(w)
                order.append(w)
                queue.append(w)
    return order


def _project(h: DirectedHypergraph, cell: List[Cell], axis: int) -> Optional[Dict[int, Set[ArcKey]]]:
    """Projected arcs per line of the grid; arcs must vary only along `axis` or only along the other."""
    lines: Dict[int, Set[ArcKey]] = {}
    for arc in h.arcs:
        fixed = {cell[v][1 - axis] for v in arc.vertices}
        if len(fixed) != 1:
            continue
        key = (frozenset(cell[v][axis] for v in arc.tail), frozenset(cell[v][axis] for v in arc.head))
        lines.setdefault(fixed.pop(), set()).add(key)
    return lines


def _is_product_layout(h: DirectedHypergraph, cell: List[Cell], a: int, b: int) -> bool:
    for arc in h.arcs:
        rows = {cell[v][0] for v in arc.vertices}
        cols = {cell[v][1] for v in arc.vertices}
        if len(rows) != 1 and len(cols) != 1:
            return False
    in_rows = _project(h, cell, 1)
    in_cols = _project(h, cell, 0)
    row_sets = [in_rows.get(r, set()) for r in range(a)]
    col_sets = [in_cols.get(c, set()) for c in range(b)]
    return all(s == row_sets[0] for s in row_sets) and all(s == col_sets[0] for s in col_sets)


def _grid_layout(h: DirectedHypergraph, adjacency: List[Set[int]], a: int, b: int) -> Optional[List[Cell]]:
    order = _bfs_order(adjacency)
    cell: List[Optional[Cell]] = [None] * h.n
    used: Set[Cell] = set()

    def place(step: int, rows: int, cols: int) -> bool:
        if step == len(order):
            return _is_product_layout(h, cell, a, b)
        v = order[step]
        placed = [cell[u] for u in adjacency[v] if cell[u] is not None]
        for r in range(min(rows + 1, a)):
            for c in range(min(cols + 1, b)):
                if (r, c) in used:
                    continue
                if any((r != pr) == (c != pc) for pr, pc in placed):
                    continue
                cell[v] = (r, c)
                used.add((r, c))
                if place(step + 1, max(rows, r + 1), max(cols, c + 1)):
                    return True
                used.discard((r, c))
                cell[v] = None
        return False

    cell[order[0]] = (0, 0)
    used.add((0, 0))
    if place(1, 1, 1):
        return cell
    return None


def _line_factor(h: DirectedHypergraph, cell: List[Cell], axis: int, size: int) -> DirectedHypergraph:
    """The factor read off the line through (0, 0) that varies along `axis`."""
    at = {pos: v for v, pos in enumerate(cell)}
    members = [at[(x, 0) if axis == 0 else (0, x)] for x in range(size)]
    lines = _project(h, cell, axis)
    arcs = tuple(
        Hyperarc.of(tail, head)
        for tail, head in sorted(lines.get(0, set()), key=lambda k: (sorted(k[0]), sorted(k[1])))
    )
    return DirectedHypergraph(tuple(h.names[v] for v in members), arcs)


def _split(h: DirectedHypergraph) -> Optional[Tuple[DirectedHypergraph, DirectedHypergraph]]:
    adjacency = _neighbors(h)
    for a in range(2, h.n):
        b, rest = divmod(h.n, a)
        if rest or a > b:
            continue
        cell = _grid_layout(h, adjacency, a, b)
        if cell is not None:
            return _line_factor(h, cell, 0, a), _line_factor(h, cell, 1, b)
    return None


def _factor_all(h: DirectedHypergraph) -> List[DirectedHypergraph]:
    if h.n == 1:
        return []
    parts = _split(h)
    if parts is None:
        return [h]
    return _factor_all(parts[0]) + _factor_all(parts[1])


def brute_force_pfd_hypergraph(h: DirectedHypergraph, cap: int = HYPERGRAPH_CAP) -> List[DirectedHypergraph]:
    """Prime factors of a connected hypergraph with at most `cap` vertices."""
    if h.n > cap:
        raise OracleCapExceeded(f"brute force is limited to {cap} vertices, got {h.n}")
    ensure_valid(h)
    if not is_connected(h):
        raise DisconnectedError("brute force needs a connected hypergraph")
    factors = _factor_all(h)
    logger.debug("brute force found %d prime factors of %r", len(factors), h)
    return factors


def _as_hypergraph(g: UndirectedGraph) -> DirectedHypergraph:
    return DirectedHypergraph(
        tuple(str(v) for v in range(g.n)),
        tuple(Hyperarc((u, v), (u, v)) for u, v in g.edges()),
    )


def _as_graph(h: DirectedHypergraph) -> UndirectedGraph:
    return UndirectedGraph.from_edges(h.n, (arc.vertices for arc in h.arcs))


def brute_force_pfd_graph(g: UndirectedGraph, cap: int = GRAPH_CAP) -> List[UndirectedGraph]:
    """Prime factors of a connected graph with at most `cap` vertices."""
    if g.n > cap:
        raise OracleCapExceeded(f"brute force is limited to {cap} vertices, got {g.n}")
    return [_as_graph(f) for f in brute_force_pfd_hypergraph(_as_hypergraph(g), cap=cap)]


def same_factor_multiset(a: Sequence[DirectedHypergraph], b: Sequence[DirectedHypergraph]) -> bool:
    """Whether both lists hold the same hypergraphs up to isomorphism and order."""
    if len(a) != len(b):
        return False
    remaining = sorted(b, key=lambda h: (h.n, h.m))
    for x in sorted(a, key=lambda h: (h.n, h.m)):
        match = next(
            (i for i, y in enumerate(remaining) if (y.n, y.m) == (x.n, x.m) and isomorphic(x, y) is not None),
            None,
        )
        if match is None:
            return False
        remaining.pop(match)
    return True


def same_graph_multiset(a: Sequence[UndirectedGraph], b: Sequence[UndirectedGraph]) -> bool:
    if len(a) != len(b):
        return False
    remaining = [g.to_networkx() for g in b]
    for g in a:
        x = g.to_networkx()
        match = next((i for i, y in enumerate(remaining) if nx.is_isomorphic(x, y)), None)
        if match is None:
            return False
        remaining.pop(match)
    return True
