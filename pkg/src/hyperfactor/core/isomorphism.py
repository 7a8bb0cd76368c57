"""
Backtracking isomorphism test for small directed hypergraphs.

Meant for test scaffolding and the brute-force oracle (n up to a few dozen).
Candidates are filtered by an incidence signature, assignments must preserve
2-section adjacency in both directions, and every arc whose vertices are all
mapped is checked against the target arc set.
"""
from collections import Counter, deque
from typing import Dict, List, Optional, Set, Tuple

from hyperfactor.core.errors import IsomorphismBudgetExceeded
from hyperfactor.core.types import DirectedHypergraph


def _signatures(h: DirectedHypergraph) -> List[Tuple]:
    profile: List[List[Tuple[int, int, bool, bool]]] = [[] for _ in range(h.n)]
    for arc in h.arcs:
        tail, head = set(arc.tail), set(arc.head)
        for v in arc.vertices:
            profile[v].append((len(tail), len(head), v in tail, v in head))
    return [tuple(sorted(p)) for p in profile]


def _adjacency(h: DirectedHypergraph) -> List[Set[int]]:
    adjacency: List[Set[int]] = [set() for _ in range(h.n)]
    for arc in h.arcs:
        for v in arc.vertices:
            adjacency[v].update(arc.vertices)
    for v in range(h.n):
        adjacency[v].discard(v)
    return adjacency


def _search_order(adjacency: List[Set[int]], rarity: List[int]) -> List[int]:
    """BFS order, restarting at the rarest unvisited vertex for every component."""
    n = len(adjacency)
    seen = [False] * n
    order: List[int] = []
    for start in sorted(range(n), key=lambda v: (rarity[v], v)):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adjacency[v], key=lambda u: (rarity[u], u)):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def isomorphic(
    h1: DirectedHypergraph, h2: DirectedHypergraph, budget: Optional[int] = None
) -> Optional[Dict[int, int]]:
    """
    Returns a vertex bijection phi with phi(t(e)) = t(phi(e)) and
    phi(h(e)) = h(phi(e)) for every arc, or None when none exists.

    `budget` caps the number of tentative assignments; exceeding it raises
    IsomorphismBudgetExceeded rather than answering.
    """
    if h1.n != h2.n or h1.m != h2.m or h1.rank != h2.rank:
        return None

    sig1, sig2 = _signatures(h1), _signatures(h2)
    if Counter(sig1) != Counter(sig2):
        return None

    adj1, adj2 = _adjacency(h1), _adjacency(h2)
    by_signature: Dict[Tuple, List[int]] = {}
    for w, s in enumerate(sig2):
        by_signature.setdefault(s, []).append(w)
    rarity = [len(by_signature[s]) for s in sig1]

    order = _search_order(adj1, rarity)
    step_of = {v: i for i, v in enumerate(order)}

    # Arcs of h1 become checkable once their last vertex (in search order) is mapped.
    completed_at: List[List] = [[] for _ in range(h1.n)]
    for arc in h1.arcs:
        completed_at[max(step_of[v] for v in arc.vertices)].append(arc)

    targets = {(frozenset(e.tail), frozenset(e.head)) for e in h2.arcs}

    mapping: Dict[int, int] = {}
    inverse: Dict[int, int] = {}
    expansions = 0

    def consistent(v: int, w: int) -> bool:
        mapped_neighbors = 0
        for u in adj1[v]:
            if u in mapping:
                if mapping[u] not in adj2[w]:
                    return False
                mapped_neighbors += 1
        return mapped_neighbors == sum(1 for x in adj2[w] if x in inverse)

    def arcs_hold(step: int) -> bool:
        for arc in completed_at[step]:
            image = (frozenset(mapping[v] for v in arc.tail), frozenset(mapping[v] for v in arc.head))
            if image not in targets:
                return False
        return True

    def extend(step: int) -> bool:
        nonlocal expansions
        if step == len(order):
            return True
        v = order[step]
        for w in by_signature[sig1[v]]:
            if w in inverse or not consistent(v, w):
                continue
            expansions += 1
            if budget is not None and expansions > budget:
                raise IsomorphismBudgetExceeded(f"gave up after {budget} assignments")
            mapping[v], inverse[w] = w, v
            if arcs_hold(step) and extend(step + 1):
                return True
            del mapping[v], inverse[w]
        return False

    if extend(0):
        return dict(sorted(mapping.items()))
    return None
