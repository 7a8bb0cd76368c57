"""
Increment checks: for every arc e varying in coordinate j and every other
coordinate i, the arc obtained by shifting e one step along i must exist.
Each missing increment joins i and j in the auxiliary graph.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from itertools import combinations
from typing import List, Sequence

from hyperfactor.core.errors import ConsistencyError
from hyperfactor.core.hypergraph import arc_in_set, differing_coordinates, increment_arc
from hyperfactor.core.types import (
    AuxiliaryGraph,
    AuxTrigger,
    CanonicalOrder,
    Coordinatization,
    FactorizationState,
    Hyperarc,
)
from hyperfactor.modules.base import Stage

logger = logging.getLogger(__name__)


def arc_coordinate(c: Coordinatization, arc: Hyperarc, debug_checks: bool = False) -> int:
    """The one coordinate in which the vertices of `arc` differ."""
    vertices = arc.vertices
    if debug_checks:
        seen = {tuple(differing_coordinates(c, x, y)) for x, y in combinations(vertices, 2)}
        if len(seen) != 1 or len(next(iter(seen))) != 1:
            raise ConsistencyError(f"vertices of {arc} do not lie in a single layer: {sorted(seen)}")
        return next(iter(seen))[0]

    diff = differing_coordinates(c, vertices[0], vertices[1])
    if len(diff) != 1:
        raise ConsistencyError(f"{arc} spans vertices differing in coordinates {diff}")
    return diff[0]


def _missing_increments(
    order: CanonicalOrder, c: Coordinatization, k: int, arcs: Sequence[Hyperarc], debug_checks: bool
) -> List[AuxTrigger]:
    triggers = []
    for arc in arcs:
        j = arc_coordinate(c, arc, debug_checks)
        for i in range(1, k + 1):
            if i != j and not arc_in_set(order, increment_arc(c, arc, i)):
                triggers.append(AuxTrigger(arc, j, i))
    return triggers


def build_aux_graph(
    order: CanonicalOrder,
    c: Coordinatization,
    k: int,
    workers: int = 1,
    debug_checks: bool = False,
) -> AuxiliaryGraph:
    arcs = order.arcs
    if workers > 1 and len(arcs) > workers:
        size = -(-len(arcs) // workers)
        chunks = [arcs[at:at + size] for at in range(0, len(arcs), size)]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = pool.map(lambda chunk: _missing_increments(order, c, k, chunk, debug_checks), chunks)
            triggers = [t for part in parts for t in part]
    else:
        triggers = _missing_increments(order, c, k, arcs, debug_checks)

    edges = frozenset((min(t.differing, t.increment), max(t.differing, t.increment)) for t in triggers)
    for t in triggers:
        logger.debug("inc(%s, %d) is missing; joining %d and %d", t.arc, t.increment, t.differing, t.increment)
    return AuxiliaryGraph(k, edges, tuple(triggers))


class AuxGraphStage(Stage):
    """Auxiliary graph on the coordinate indices."""

    @property
    def name(self) -> str:
        return "AuxGraphStage"

    @property
    def priority(self) -> int:
        return 80

    def process(self, state: FactorizationState) -> FactorizationState:
        if state.k <= 1:
            state.aux = AuxiliaryGraph(state.k)
            return state
        state.aux = build_aux_graph(
            state.order,
            state.pre_coordinates,
            state.k,
            workers=self.config.workers,
            debug_checks=self.config.debug_checks,
        )
        return state
