import logging
from typing import Optional

from hyperfactor.core.errors import ValidationError, Violation
from hyperfactor.core.hypergraph import ensure_valid
from hyperfactor.core.types import (
    Coordinatization,
    DirectedHypergraph,
    FactorizationConfig,
    FactorizationState,
    HypergraphFactorization,
)

# Import Stages
from hyperfactor.modules.preprocessing import PreprocessingStage
from hyperfactor.modules.aux_graph import AuxGraphStage
from hyperfactor.modules.combine import CombineStage
from hyperfactor.modules.soundness import SoundnessStage

logger = logging.getLogger(__name__)


class Factorizer:
    """
    The factorization engine. It runs a hypergraph through the stages enabled
    by the configuration: 2-section coordinates, increment checks, combine and
    (optionally) the reconstruction check.
    """

    def __init__(self, config: FactorizationConfig = None):
        self.config = config or FactorizationConfig()

        self.stages = [
            PreprocessingStage(self.config),
            AuxGraphStage(self.config),
            CombineStage(self.config),
        ]
        if self.config.verify_soundness:
            self.stages.append(SoundnessStage(self.config))

        # Sort stages by priority (High -> Low)
        self.stages.sort(key=lambda s: s.priority, reverse=True)

    def factorize(self, h: DirectedHypergraph) -> HypergraphFactorization:
        if h.n == 0:
            raise ValidationError([Violation(None, "empty", "hypergraph has no vertices")])
        if h.n == 1:
            ensure_valid(h)
            return HypergraphFactorization((), Coordinatization((), ((),)), ())

        state = FactorizationState(h)
        for stage in self.stages:
            logger.debug("running %s on %r", stage.name, h)
            state = stage.process(state)
        return state.result


def pfd_hypergraph(h: DirectedHypergraph, config: Optional[FactorizationConfig] = None) -> HypergraphFactorization:
    """Prime factor decomposition of a connected directed hypergraph."""
    return Factorizer(config).factorize(h)
