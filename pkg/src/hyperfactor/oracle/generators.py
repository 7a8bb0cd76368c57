"""
Seeded random instances. Every function is pure in its seed.
"""
import logging
from dataclasses import replace
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from hyperfactor.core.errors import OracleCapExceeded, SamplingBudgetExceeded
from hyperfactor.core.hypergraph import product_of, rename
from hyperfactor.core.types import DirectedHypergraph, GeneratorConfig, Hyperarc, UndirectedGraph
from hyperfactor.oracle.brute_force import HYPERGRAPH_CAP, brute_force_pfd_hypergraph

logger = logging.getLogger(__name__)


def _orient(vertices: List[int], rng: np.random.Generator, directed_fraction: float) -> Hyperarc:
    """Undirected arc (tail = head) or a random cut into a disjoint tail and head."""
    if rng.random() >= directed_fraction:
        return Hyperarc.of(vertices, vertices)
    shuffled = list(rng.permutation(vertices))
    cut = int(rng.integers(1, len(shuffled)))
    return Hyperarc.of(map(int, shuffled[:cut]), map(int, shuffled[cut:]))


def _connected(cfg: GeneratorConfig, rng: np.random.Generator) -> DirectedHypergraph:
    n, r = cfg.n, cfg.r
    names = tuple(f"v{i}" for i in range(n))
    if n == 1:
        return DirectedHypergraph(names)

    arcs: Dict[tuple, Hyperarc] = {}

    def add(arc: Hyperarc) -> None:
        arcs.setdefault(arc.set_key, arc)

    # Spanning chain: each arc joins one covered vertex to fresh ones.
    perm = [int(v) for v in rng.permutation(n)]
    covered = perm[:1]
    at = 1
    while at < n:
        fresh = int(rng.integers(1, min(r, n - at + 1)))
        anchor = covered[int(rng.integers(len(covered)))]
        members = [anchor] + perm[at:at + fresh]
        add(_orient(members, rng, cfg.directed_fraction))
        covered += perm[at:at + fresh]
        at += fresh

    target = max(len(arcs), round(cfg.arc_density * n))
    tries = 0
    while len(arcs) < target and tries < 50 * target:
        tries += 1
        existing = [e for e in arcs.values() if len(e.vertices) > 2]
        if existing and rng.random() < cfg.nested_fraction:
            parent = existing[int(rng.integers(len(existing)))].vertices
            size = int(rng.integers(2, len(parent)))
            members = [int(v) for v in rng.choice(parent, size=size, replace=False)]
        else:
            size = int(rng.integers(2, min(r, n) + 1))
            members = [int(v) for v in rng.choice(n, size=size, replace=False)]
        add(_orient(members, rng, cfg.directed_fraction))

    return DirectedHypergraph(names, tuple(arcs.values()))


def random_connected_hypergraph(cfg: GeneratorConfig) -> DirectedHypergraph:
    """Valid, connected, rank at most cfg.r; primality is not certified."""
    return _connected(cfg, np.random.default_rng(cfg.seed))


def _is_certified_prime(h: DirectedHypergraph) -> bool:
    if all(h.n % d for d in range(2, int(h.n ** 0.5) + 1)):
        return True
    if h.n > HYPERGRAPH_CAP:
        raise OracleCapExceeded(f"cannot certify primality of a composite order {h.n} > {HYPERGRAPH_CAP}")
    return len(brute_force_pfd_hypergraph(h)) == 1


def random_prime_hypergraph(cfg: GeneratorConfig) -> DirectedHypergraph:
    if cfg.n < 2:
        raise ValueError("prime hypergraphs have at least two vertices")
    rng = np.random.default_rng(cfg.seed)
    for attempt in range(cfg.max_attempts):
        h = _connected(cfg, rng)
        if _is_certified_prime(h):
            logger.debug("prime hypergraph after %d attempts (seed %d)", attempt + 1, cfg.seed)
            return h
    raise SamplingBudgetExceeded(f"no prime hypergraph on {cfg.n} vertices in {cfg.max_attempts} attempts")


def random_product(
    cfg: GeneratorConfig, j: int, sizes: Optional[Sequence[int]] = None
) -> Tuple[DirectedHypergraph, List[DirectedHypergraph]]:
    """
    Product of j certified primes, with the vertex table and the arc order
    shuffled. Factor sizes are drawn from 2..cfg.n unless given.
    """
    if j < 1:
        raise ValueError(f"need at least one factor, got {j}")
    rng = np.random.default_rng(cfg.seed)
    if sizes is None:
        sizes = [int(rng.integers(2, max(cfg.n, 2) + 1)) for _ in range(j)]
    if len(sizes) != j:
        raise ValueError(f"{len(sizes)} sizes for {j} factors")

    factors = []
    for i, size in enumerate(sizes):
        seed = int(rng.integers(2 ** 31))
        prime = random_prime_hypergraph(replace(cfg, n=size, seed=seed))
        factors.append(DirectedHypergraph(tuple(f"{chr(ord('a') + i)}{x}" for x in range(size)), prime.arcs))

    product = product_of(*factors)
    order = [int(v) for v in rng.permutation(product.n)]
    shuffled = rename(product, order, [product.names[v] for v in order])
    arcs = list(shuffled.arcs)
    arcs = [arcs[int(i)] for i in rng.permutation(len(arcs))]
    return DirectedHypergraph(shuffled.names, tuple(arcs)), factors


def random_connected_graph(seed: int, n: int, p: float) -> UndirectedGraph:
    """Random spanning tree plus every other pair independently with probability p."""
    rng = np.random.default_rng(seed)
    perm = [int(v) for v in rng.permutation(n)]
    edges = {tuple(sorted((perm[i], perm[int(rng.integers(i))]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return UndirectedGraph.from_edges(n, edges)
