"""G-stable partitions, minimal blocks and the primitivity test."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .perm import PermutationGroup, orbit

__all__ = [
    "Partition",
    "is_g_stable",
    "is_essential",
    "minimal_block",
    "block_system",
    "is_primitive",
]


@dataclass(frozen=True)
class Partition:
    degree: int
    parts: tuple[frozenset[int], ...]

    def __init__(self, degree: int, parts: Iterable[Iterable[int]]):
        parts = [frozenset(p) for p in parts]
        if any(not p for p in parts):
            raise ValueError("empty part")
        seen: set[int] = set()
        for p in parts:
            if seen & p:
                raise ValueError("parts overlap")
            seen |= p
        if seen != set(range(degree)):
            raise ValueError("parts do not cover the point set")
        parts.sort(key=min)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "parts", tuple(parts))

    @classmethod
    def singletons(cls, degree: int) -> Partition:
        return cls(degree, ([i] for i in range(degree)))

    def to_json(self) -> str:
        return json.dumps([sorted(p) for p in self.parts])

    @classmethod
    def from_json(cls, degree: int, text: str) -> Partition:
        return cls(degree, json.loads(text))


def is_g_stable(G: PermutationGroup, P: Partition) -> bool:
    if G.degree != P.degree:
        raise ValueError(f"degree mismatch: group {G.degree}, partition {P.degree}")
    parts = set(P.parts)
    for g in G.generators:
        for part in P.parts:
            if frozenset(g.images[i] for i in part) not in parts:
                return False
    return True


def is_essential(P: Partition) -> bool:
    return len(P.parts) > 1 and all(P.parts) and any(len(p) > 1 for p in P.parts)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        # smaller root wins so results do not depend on merge order
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _merge_classes(G: PermutationGroup, a: int, b: int) -> _UnionFind:
    uf = _UnionFind(G.degree)
    uf.union(a, b)
    queue = [(a, b)]
    for x, y in queue:
        for g in G.generators:
            gx, gy = g.images[x], g.images[y]
            if uf.union(gx, gy):
                queue.append((gx, gy))
    return uf


def minimal_block(G: PermutationGroup, a: int, b: int) -> set[int]:
    """Smallest block of imprimitivity of transitive G containing a and b."""
    if a == b:
        raise ValueError("a and b must differ")
    if not G.is_transitive():
        raise ValueError("group is not transitive")
    uf = _merge_classes(G, a, b)
    ra = uf.find(a)
    return {x for x in range(G.degree) if uf.find(x) == ra}


def block_system(G: PermutationGroup, a: int, b: int) -> Partition:
    """The G-stable partition formed by the translates of minimal_block(G, a, b)."""
    if a == b:
        raise ValueError("a and b must differ")
    if not G.is_transitive():
        raise ValueError("group is not transitive")
    uf = _merge_classes(G, a, b)
    classes: dict[int, list[int]] = {}
    for x in range(G.degree):
        classes.setdefault(uf.find(x), []).append(x)
    return Partition(G.degree, classes.values())


def is_primitive(G: PermutationGroup) -> bool:
    """Order > 1 and no G-stable essential partition exists."""
    if G.degree < 2:
        raise ValueError("primitivity needs at least two points")
    if G.is_trivial():
        return False
    if len(orbit(G, 0)) != G.degree:
        return False
    return all(len(minimal_block(G, 0, b)) == G.degree for b in range(1, G.degree))
