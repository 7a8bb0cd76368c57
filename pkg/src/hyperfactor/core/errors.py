from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple


class HypergraphError(Exception):
    """Base class for every error raised by hyperfactor."""


@dataclass(frozen=True)
class Violation:
    """One broken invariant of a hypergraph. `arc_index` is None for vertex-level problems."""
    arc_index: Optional[int]
    kind: str
    message: str

    def __str__(self):
        where = f"arc {self.arc_index}" if self.arc_index is not None else "vertex table"
        return f"{where}: {self.kind}: {self.message}"


class ValidationError(HypergraphError):
    def __init__(self, violations: Sequence[Violation]):
        self.violations: List[Violation] = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FormatError(HypergraphError):
    """Parse failure of a HypergraphFile. Diagnostics are (line number, message) pairs."""

    def __init__(self, diagnostics: Sequence[Tuple[int, str]]):
        self.diagnostics: List[Tuple[int, str]] = list(diagnostics)
        super().__init__("; ".join(f"line {line}: {msg}" for line, msg in self.diagnostics))


class DisconnectedError(HypergraphError):
    pass


class ProductRelationError(HypergraphError):
    """The edge coloring handed to the coordinatizer is not a product relation."""

    def __init__(self, kind: str, detail: str):
        self.kind = kind
        self.detail = detail
        super().__init__(f"{kind}: {detail}")


class ConsistencyError(HypergraphError):
    """Internal-consistency failure. Must never happen on valid input."""


class IsomorphismBudgetExceeded(HypergraphError):
    pass


class OracleCapExceeded(HypergraphError):
    pass


class SamplingBudgetExceeded(HypergraphError):
    pass
