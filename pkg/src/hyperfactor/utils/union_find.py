from typing import Dict, List


class UnionFind:
    """Disjoint sets over 0..size-1 with union by height and path halving."""

    def __init__(self, size: int):
        self.parents: List[int] = list(range(size))
        self.heights: List[int] = [1] * size

    def root(self, v: int) -> int:
        parents = self.parents
        while parents[v] != v:
            parents[v] = parents[parents[v]]
            v = parents[v]
        return v

    def join(self, a: int, b: int) -> bool:
        """Merges the sets of a and b. Returns False if they were already one set."""
        ra, rb = self.root(a), self.root(b)
        if ra == rb:
            return False
        if self.heights[ra] < self.heights[rb]:
            ra, rb = rb, ra
        self.parents[rb] = ra
        if self.heights[ra] == self.heights[rb]:
            self.heights[ra] += 1
        return True

    def labels(self) -> List[int]:
        """Dense class labels 0..t-1, numbered by first occurrence."""
        seen: Dict[int, int] = {}
        out = []
        for v in range(len(self.parents)):
            out.append(seen.setdefault(self.root(v), len(seen)))
        return out

    def count(self) -> int:
        return sum(1 for v in range(len(self.parents)) if self.parents[v] == v)
