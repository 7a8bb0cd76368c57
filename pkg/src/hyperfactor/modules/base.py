# Abstract Base Class for all factorization stages
from abc import ABC, abstractmethod

from hyperfactor.core.types import FactorizationConfig, FactorizationState


class Stage(ABC):
    """
    Abstract Base Class for all pipeline stages.
    """

    def __init__(self, config: FactorizationConfig):
        self.config = config

    @property
    @abstractmethod
    def name(self) -> str:
        """Unique name for the stage."""
        pass

    @property
    def priority(self) -> int:
        """
        Execution order. Higher numbers run first.
        100 = Preprocessing (2-section coordinates)
        80  = Increment checks (auxiliary graph)
        50  = Combine
        10  = Verification
        """
        return 50

    @abstractmethod
    def process(self, state: FactorizationState) -> FactorizationState:
        """
        Fill in the fields this stage owns and return the state.
        """
        pass
