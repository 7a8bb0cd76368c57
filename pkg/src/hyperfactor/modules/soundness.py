import logging
from typing import Dict, FrozenSet, Set, Tuple

from hyperfactor.core.errors import ConsistencyError
from hyperfactor.core.hypergraph import differing_coordinates
from hyperfactor.core.types import DirectedHypergraph, FactorizationState, HypergraphFactorization
from hyperfactor.modules.base import Stage

logger = logging.getLogger(__name__)

ArcKey = Tuple[FrozenSet[int], FrozenSet[int]]


def verify_reconstruction(h: DirectedHypergraph, factorization: HypergraphFactorization) -> None:
    """
    Checks H against the product of its factors through the coordinates:
    every arc varies in exactly one coordinate s, its projection is an arc of
    factor s, and the arc counts agree. Raises ConsistencyError otherwise.
    """
    c = factorization.coordinates
    factors = factorization.factors
    if len(factors) != c.k:
        raise ConsistencyError(f"{len(factors)} factors for {c.k} coordinates")

    factor_arcs: Dict[int, Set[ArcKey]] = {}
    for s, factor in enumerate(factors, start=1):
        if factor.n != c.factor_sizes[s - 1]:
            raise ConsistencyError(f"factor {s} has {factor.n} vertices, coordinate {s} has {c.factor_sizes[s - 1]}")
        factor_arcs[s] = {arc.set_key for arc in factor.arcs}

    for index, arc in enumerate(h.arcs):
        first = arc.vertices[0]
        varying = set()
        for v in arc.vertices[1:]:
            varying.update(differing_coordinates(c, first, v))
        if len(varying) != 1:
            raise ConsistencyError(f"arc {index} varies in coordinates {sorted(varying)}")
        (s,) = varying
        projected = (
            frozenset(c.coords[v][s - 1] - 1 for v in arc.tail),
            frozenset(c.coords[v][s - 1] - 1 for v in arc.head),
        )
        if projected not in factor_arcs[s]:
            raise ConsistencyError(f"arc {index} projects onto a non-arc of factor {s}")

    expected = sum(len(factor_arcs[s]) * (c.n // c.factor_sizes[s - 1]) for s in factor_arcs)
    if expected != h.m:
        raise ConsistencyError(f"product of the factors has {expected} arcs, input has {h.m}")
    logger.debug("reconstructed %d arcs from %d factors", h.m, len(factors))


def verify_edgeless_aux(factorization: HypergraphFactorization) -> None:
    """An auxiliary graph without edges must leave the 2-section coordinates untouched."""
    aux, pre = factorization.aux, factorization.pre_coordinates
    if aux is None or pre is None or aux.edges:
        return
    if factorization.coordinates.coords != pre.coords:
        raise ConsistencyError("edgeless auxiliary graph, yet coordinates differ from the 2-section's")


class SoundnessStage(Stage):
    """Reconstructs the input from its factors and coordinates."""

    @property
    def name(self) -> str:
        return "SoundnessStage"

    @property
    def priority(self) -> int:
        return 10

    def process(self, state: FactorizationState) -> FactorizationState:
        verify_reconstruction(state.hypergraph, state.result)
        if self.config.debug_checks:
            verify_edgeless_aux(state.result)
        return state
