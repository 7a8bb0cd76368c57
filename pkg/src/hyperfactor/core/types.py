from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

Edge = Tuple[int, int]
EdgeColoring = Dict[Edge, int]


@dataclass(frozen=True)
class Hyperarc:
    tail: Tuple[int, ...]
    head: Tuple[int, ...]

    @classmethod
    def of(cls, tail: Iterable[int], head: Iterable[int]) -> "Hyperarc":
        """Builds an arc with duplicate ids removed and both sides sorted by id."""
        return cls(tuple(sorted(set(tail))), tuple(sorted(set(head))))

    @cached_property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.tail) | set(self.head)))

    @property
    def is_undirected(self) -> bool:
        return set(self.tail) == set(self.head)

    @property
    def set_key(self) -> Tuple[FrozenSet[int], FrozenSet[int]]:
        """Order-free identity used for multi-arc detection."""
        return frozenset(self.tail), frozenset(self.head)

    def relabel(self, mapping: Sequence[int]) -> "Hyperarc":
        return Hyperarc.of((mapping[v] for v in self.tail), (mapping[v] for v in self.head))

    def __repr__(self):
        return f"Hyperarc({set(self.tail)} -> {set(self.head)})"


@dataclass(frozen=True)
class DirectedHypergraph:
    names: Tuple[str, ...]
    arcs: Tuple[Hyperarc, ...] = ()

    @classmethod
    def from_named_arcs(
        cls,
        arcs: Iterable[Tuple[Iterable[str], Iterable[str]]],
        vertices: Iterable[str] = (),
    ) -> "DirectedHypergraph":
        """
        Builds a hypergraph from display names. Ids follow declaration order:
        explicit `vertices` first, then first appearance inside the arcs.
        Nothing is validated here; see `hypergraph.validate`.
        """
        index: Dict[str, int] = {}

        def vid(name: str) -> int:
            if name not in index:
                index[name] = len(index)
            return index[name]

        for name in vertices:
            vid(name)
        built = []
        for tail, head in arcs:
            built.append(Hyperarc.of([vid(x) for x in tail], [vid(x) for x in head]))
        return cls(tuple(index), tuple(built))

    @cached_property
    def index(self) -> Dict[str, int]:
        return {name: v for v, name in enumerate(self.names)}

    @property
    def n(self) -> int:
        return len(self.names)

    @property
    def m(self) -> int:
        return len(self.arcs)

    @cached_property
    def rank(self) -> int:
        return max((len(e.vertices) for e in self.arcs), default=0)

    def arc_names(self, arc: Hyperarc) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
        return tuple(self.names[v] for v in arc.tail), tuple(self.names[v] for v in arc.head)

    def __repr__(self):
        return f"DirectedHypergraph(n={self.n}, m={self.m}, r={self.rank})"


@dataclass(frozen=True)
class UndirectedGraph:
    n: int
    adjacency: Tuple[Tuple[int, ...], ...]
    colors: Optional[Mapping[Edge, int]] = field(default=None, compare=False, hash=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], colors: Optional[Mapping[Edge, int]] = None):
        neighbors: List[set] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            neighbors[u].add(v)
            neighbors[v].add(u)
        return cls(n, tuple(tuple(sorted(ns)) for ns in neighbors), colors)

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "UndirectedGraph":
        """Relabels nodes 0..n-1 in the graph's node iteration order."""
        position = {node: i for i, node in enumerate(graph.nodes)}
        return cls.from_edges(len(position), ((position[a], position[b]) for a, b in graph.edges))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.n))
        graph.add_edges_from(self.edges())
        return graph

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(ns) for ns in self.adjacency) // 2

    def __repr__(self):
        return f"UndirectedGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class Coordinatization:
    """
    Bijection from vertex ids onto the grid {1..l_1} x ... x {1..l_k}.
    Grid positions are row-major, so position order is lexicographic order.
    """
    factor_sizes: Tuple[int, ...]
    coords: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        sizes = self.factor_sizes
        if any(size < 2 for size in sizes):
            raise ValueError(f"factor sizes must be >= 2, got {sizes}")
        n = len(self.coords)
        if n != prod(sizes):
            raise ValueError(f"{n} vertices cannot fill a grid of shape {sizes}")

        strides = [1] * len(sizes)
        for i in range(len(sizes) - 2, -1, -1):
            strides[i] = strides[i + 1] * sizes[i + 1]
        object.__setattr__(self, "_strides", tuple(strides))

        table = [-1] * n
        for v, vector in enumerate(self.coords):
            if len(vector) != len(sizes) or any(not 1 <= x <= size for x, size in zip(vector, sizes)):
                raise ValueError(f"vertex {v} has coordinates {vector} outside the grid {sizes}")
            pos = self._position(vector)
            if table[pos] != -1:
                raise ValueError(f"vertices {table[pos]} and {v} share coordinates {vector}")
            table[pos] = v
        object.__setattr__(self, "_vertex_at", tuple(table))

    def _position(self, vector: Sequence[int]) -> int:
        return sum((x - 1) * s for x, s in zip(vector, self._strides))

    @property
    def k(self) -> int:
        return len(self.factor_sizes)

    @property
    def n(self) -> int:
        return len(self.coords)

    @property
    def strides(self) -> Tuple[int, ...]:
        return self._strides

    def position(self, v: int) -> int:
        return self._position(self.coords[v])

    def vertex_at(self, position: int) -> int:
        return self._vertex_at[position]

    def vertex_of(self, vector: Sequence[int]) -> int:
        return self._vertex_at[self._position(vector)]

    def lex_order(self) -> Tuple[int, ...]:
        """Vertex ids sorted lexicographically by coordinate vector."""
        return self._vertex_at


@dataclass(frozen=True)
class CanonicalOrder:
    """V_lex and E_lex of a hypergraph under a (pre-)coordinatization."""
    vertices: Tuple[int, ...]
    rank: Tuple[int, ...]
    arcs: Tuple[Hyperarc, ...]

    def key(self, arc: Hyperarc) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        rank = self.rank
        return tuple(rank[v] for v in arc.tail), tuple(rank[v] for v in arc.head)

    @cached_property
    def keys(self) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
        return [self.key(e) for e in self.arcs]


@dataclass(frozen=True)
class AuxTrigger:
    """A missing increment: inc(arc, increment) is absent although arc varies in `differing`."""
    arc: Hyperarc
    differing: int
    increment: int


@dataclass(frozen=True)
class AuxiliaryGraph:
    k: int
    edges: FrozenSet[Edge] = frozenset()
    triggers: Tuple[AuxTrigger, ...] = ()

    def neighbors(self, i: int) -> Tuple[int, ...]:
        return tuple(sorted({b for a, b in self.edges if a == i} | {a for a, b in self.edges if b == i}))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(1, self.k + 1))
        graph.add_edges_from(self.edges)
        return graph

    def components(self) -> List[Tuple[int, ...]]:
        """Connected components as sorted index tuples, ordered by smallest member."""
        parts = [tuple(sorted(c)) for c in nx.connected_components(self.to_networkx())]
        return sorted(parts)


@dataclass(frozen=True)
class HypergraphFactorization:
    factors: Tuple[DirectedHypergraph, ...]
    coordinates: Coordinatization
    partition: Tuple[Tuple[int, ...], ...]
    pre_coordinates: Optional[Coordinatization] = None
    aux: Optional[AuxiliaryGraph] = None

    @property
    def is_prime(self) -> bool:
        return len(self.factors) == 1


@dataclass
class FactorizationConfig:
    # --- Checks ---
    verify_soundness: bool = True
    debug_checks: bool = False

    # --- Execution ---
    workers: int = 1


@dataclass
class GeneratorConfig:
    seed: int = 0
    n: int = 6
    r: int = 3
    arc_density: float = 1.5
    directed_fraction: float = 0.5

    # --- Shape ---
    nested_fraction: float = 0.2
    max_attempts: int = 1000

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.r < 2:
            raise ValueError(f"r must be >= 2, got {self.r}")
        if self.arc_density <= 0:
            raise ValueError(f"arc density must be > 0, got {self.arc_density}")
        if not 0 <= self.directed_fraction <= 1:
            raise ValueError(f"directed fraction must lie in [0, 1], got {self.directed_fraction}")


@dataclass
class FactorizationState:
    """Everything the factorization stages hand to each other."""
    hypergraph: DirectedHypergraph
    section: Optional[UndirectedGraph] = None
    pre_coordinates: Optional[Coordinatization] = None
    order: Optional[CanonicalOrder] = None
    k: int = 0
    aux: Optional[AuxiliaryGraph] = None
    result: Optional[HypergraphFactorization] = None
