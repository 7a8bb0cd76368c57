import logging
from typing import NamedTuple

from hyperfactor.core.errors import DisconnectedError
from hyperfactor.core.hypergraph import canonical_order, ensure_valid, is_connected, two_section
from hyperfactor.core.types import (
    CanonicalOrder,
    Coordinatization,
    DirectedHypergraph,
    FactorizationState,
    UndirectedGraph,
)
from hyperfactor.graphs.pfd import pfd_graph
from hyperfactor.modules.base import Stage

logger = logging.getLogger(__name__)


class Preprocessed(NamedTuple):
    order: CanonicalOrder
    coordinates: Coordinatization
    k: int
    section: UndirectedGraph


def preprocessing(h: DirectedHypergraph) -> Preprocessed:
    """
    Validates H, factors its 2-section and sorts vertices and arcs
    lexicographically by the resulting pre-coordinates.
    """
    ensure_valid(h)
    if not is_connected(h):
        raise DisconnectedError(f"hypergraph with {h.n} vertices is not connected")

    section = two_section(h)
    coordinates = pfd_graph(section).coordinates
    order = canonical_order(h, coordinates)
    logger.debug("2-section has %d edges and %d prime factors %s", section.m, coordinates.k,
                 coordinates.factor_sizes)
    return Preprocessed(order, coordinates, coordinates.k, section)


class PreprocessingStage(Stage):
    """Pre-coordinatization from the prime factors of the 2-section."""

    @property
    def name(self) -> str:
        return "PreprocessingStage"

    @property
    def priority(self) -> int:
        return 100

    def process(self, state: FactorizationState) -> FactorizationState:
        prepared = preprocessing(state.hypergraph)
        state.order = prepared.order
        state.pre_coordinates = prepared.coordinates
        state.k = prepared.k
        state.section = prepared.section
        return state
