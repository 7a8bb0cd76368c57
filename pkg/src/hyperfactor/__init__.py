from hyperfactor.core.pipeline import Factorizer, pfd_hypergraph
from hyperfactor.core.types import DirectedHypergraph, FactorizationConfig, Hyperarc

__version__ = "0.1.0"
__all__ = ["Factorizer", "pfd_hypergraph", "FactorizationConfig", "DirectedHypergraph", "Hyperarc"]
