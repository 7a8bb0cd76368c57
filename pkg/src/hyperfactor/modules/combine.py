"""
Merging the coordinates of the 2-section into hypergraph coordinates: every
connected component I_s of the auxiliary graph becomes one prime factor.
"""
import logging
from itertools import combinations
from typing import Dict, List, Sequence, Tuple

from hyperfactor.core.errors import ConsistencyError, ProductRelationError
from hyperfactor.core.hypergraph import induced, layer_vertices, rename
from hyperfactor.core.types import (
    AuxiliaryGraph,
    Coordinatization,
    DirectedHypergraph,
    EdgeColoring,
    FactorizationState,
    HypergraphFactorization,
    UndirectedGraph,
)
from hyperfactor.graphs.pfd import coordinates_from_coloring
from hyperfactor.modules.aux_graph import arc_coordinate
from hyperfactor.modules.base import Stage

logger = logging.getLogger(__name__)


def _colored_section(h: DirectedHypergraph, c: Coordinatization, color_of: Dict[int, int]) -> EdgeColoring:
    coloring: EdgeColoring = {}
    for arc in h.arcs:
        s = color_of[arc_coordinate(c, arc)]
        for edge in combinations(arc.vertices, 2):
            if coloring.setdefault(edge, s) != s:
                raise ConsistencyError(f"edge {edge} gets colors {coloring[edge]} and {s}")
    return coloring


def _projection_ranks(c: Coordinatization, indices: Sequence[int]) -> Tuple[int, List[int]]:
    """Lexicographic rank (1-based) of every vertex's projection onto `indices`."""
    projections = [tuple(vector[i - 1] for i in indices) for vector in c.coords]
    rank = {p: r for r, p in enumerate(sorted(set(projections)), start=1)}
    return len(rank), [rank[p] for p in projections]


def factor_through_root(h: DirectedHypergraph, c: Coordinatization, s: int) -> DirectedHypergraph:
    """The s-layer through the all-ones vertex, vertices renamed by their coordinate s value."""
    root = c.vertex_of((1,) * c.k)
    layer = layer_vertices(c, [s], root)
    local = {v: i for i, v in enumerate(layer)}
    by_value = sorted(layer, key=lambda v: c.coords[v][s - 1])
    return rename(
        induced(h, layer),
        [local[v] for v in by_value],
        [str(c.coords[v][s - 1]) for v in by_value],
    )


def combine(h: DirectedHypergraph, c: Coordinatization, aux: AuxiliaryGraph) -> HypergraphFactorization:
    partition = tuple(aux.components())
    color_of = {i: s for s, members in enumerate(partition, start=1) for i in members}

    coloring = _colored_section(h, c, color_of)
    section = UndirectedGraph.from_edges(h.n, coloring, colors=coloring)
    try:
        merged = coordinates_from_coloring(section)
    except ProductRelationError as e:
        raise ConsistencyError(f"auxiliary components {partition} do not give a product relation: {e}") from e

    sizes, columns = [], []
    for members in partition:
        size, ranks = _projection_ranks(c, members)
        sizes.append(size)
        columns.append(ranks)
    if tuple(sorted(sizes)) != tuple(sorted(merged.factor_sizes)):
        raise ConsistencyError(f"merged grid {merged.factor_sizes} disagrees with projections {sizes}")

    coordinates = Coordinatization(tuple(sizes), tuple(zip(*columns)))
    factors = tuple(factor_through_root(h, coordinates, s) for s in range(1, len(partition) + 1))
    logger.debug("partition %s gives factors of sizes %s", partition, tuple(sizes))
    return HypergraphFactorization(factors, coordinates, partition, pre_coordinates=c, aux=aux)


class CombineStage(Stage):
    """One prime factor per auxiliary-graph component."""

    @property
    def name(self) -> str:
        return "CombineStage"

    def process(self, state: FactorizationState) -> FactorizationState:
        state.result = combine(state.hypergraph, state.pre_coordinates, state.aux)
        return state
