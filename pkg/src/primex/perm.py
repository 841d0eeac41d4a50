"""Finite permutation groups on dense 0-based point sets.

Permutations are stored as full image tuples.  Groups carry a lazily built
stabilizer chain (deterministic Schreier-Sims) used for order, membership and
element enumeration.  Everything here is aimed at degrees up to ~30 and group
orders up to a few thousand.
"""

from __future__ import annotations

import itertools
import threading
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

__all__ = [
    "Permutation",
    "PermutationGroup",
    "SubgroupList",
    "GuardError",
    "compose",
    "orbit",
    "orbits",
    "build_chain",
    "derived_series",
    "is_solvable",
    "point_stabilizer",
    "normal_closure",
    "is_normal",
    "enumerate_subgroups",
    "is_maximal",
    "SUBGROUP_ORDER_GUARD",
]

SUBGROUP_ORDER_GUARD = 200


class GuardError(ValueError):
    """A documented size guard was exceeded."""

    def __init__(self, what: str, limit: int, actual: int):
        self.what = what
        self.limit = limit
        self.actual = actual
        super().__init__(f"{what} guard exceeded: {actual} > {limit}")


@dataclass(frozen=True, slots=True)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, degree: int) -> Permutation:
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree: int, *cycles: Sequence[int]) -> Permutation:
        img = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                img[a] = b
        return cls(img)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return _raw(tuple(inv))

    def __pow__(self, k: int) -> Permutation:
        if k < 0:
            return self.inverse() ** (-k)
        out = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def order(self) -> int:
        from math import lcm

        return lcm(*(len(c) for c in self.cycles()), 1)

    def cycles(self) -> list[tuple[int, ...]]:
        """Cycle decomposition including fixed points, each cycle starting at its minimum."""
        seen = set()
        out = []
        for i in range(self.degree):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted(len(c) for c in self.cycles()))

    def __repr__(self) -> str:
        moved = [c for c in self.cycles() if len(c) > 1]
        if not moved:
            return f"Permutation(id, degree={self.degree})"
        return "Permutation(" + "".join("(" + " ".join(map(str, c)) + ")" for c in moved) + f", degree={self.degree})"


def _raw(images: tuple[int, ...]) -> Permutation:
    # skips bijectivity validation; callers guarantee it
    p = object.__new__(Permutation)
    object.__setattr__(p, "images", images)
    return p


def compose(a: Permutation, b: Permutation) -> Permutation:
    """Return a∘b, mapping i to a(b(i))."""
    if a.degree != b.degree:
        raise ValueError(f"degree mismatch: {a.degree} != {b.degree}")
    ai = a.images
    return _raw(tuple(ai[j] for j in b.images))


# ---------------------------------------------------------------------------
# tuple-level helpers used by the chain code

def _mul(a: tuple, b: tuple) -> tuple:
    return tuple(a[j] for j in b)


def _inv(a: tuple) -> tuple:
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def _is_id(a: tuple) -> bool:
    return all(i == j for i, j in enumerate(a))


class _Chain:
    """Stabilizer chain: base points, per-level generators and transversals.

    transversals[l][x] is a permutation u fixing base[:l] with u(base[l]) = x.
    """

    def __init__(self, degree: int, gens: list[tuple]):
        self.degree = degree
        self.ident = tuple(range(degree))
        self.base: list[int] = []
        self.strong: list[list[tuple]] = []
        self.transversals: list[dict[int, tuple]] = []
        self._schreier_sims([g for g in gens if not _is_id(g)])

    def _orbit_transversal(self, level: int) -> None:
        b = self.base[level]
        trans = {b: self.ident}
        queue = [b]
        for x in queue:
            ux = trans[x]
            for s in self.strong[level]:
                y = s[x]
                if y not in trans:
                    trans[y] = _mul(s, ux)
                    queue.append(y)
        self.transversals[level] = trans

    def _new_level(self, g: tuple) -> None:
        moved = next(i for i, j in enumerate(g) if i != j)
        self.base.append(moved)
        self.strong.append([])
        self.transversals.append({})

    def sift(self, g: tuple, start: int = 0) -> tuple[tuple, int]:
        for lvl in range(start, len(self.base)):
            x = g[self.base[lvl]]
            u = self.transversals[lvl].get(x)
            if u is None:
                return g, lvl
            g = _mul(_inv(u), g)
        return g, len(self.base)

    def _schreier_sims(self, gens: list[tuple]) -> None:
        for g in gens:
            if all(g[b] == b for b in self.base):
                self._new_level(g)
        for lvl in range(len(self.base)):
            fixed = self.base[:lvl]
            self.strong[lvl] = [g for g in gens if all(g[b] == b for b in fixed)]
            self._orbit_transversal(lvl)
        lvl = len(self.base) - 1
        while lvl >= 0:
            dropped = self._check_level(lvl)
            if dropped is None:
                lvl -= 1
            else:
                lvl = dropped

    def _check_level(self, lvl: int) -> int | None:
        trans = self.transversals[lvl]
        for x in sorted(trans):
            ux = trans[x]
            for s in self.strong[lvl]:
                sx = _mul(s, ux)
                h = _mul(_inv(trans[sx[self.base[lvl]]]), sx)
                if _is_id(h):
                    continue
                res, j = self.sift(h, lvl + 1)
                if j < len(self.base) or not _is_id(res):
                    if j == len(self.base):
                        self._new_level(res)
                    for m in range(lvl + 1, j + 1):
                        self.strong[m].append(res)
                        self._orbit_transversal(m)
                    return j
        return None

    def order(self) -> int:
        out = 1
        for t in self.transversals:
            out *= len(t)
        return out

    def contains(self, g: tuple) -> bool:
        res, j = self.sift(g)
        return j == len(self.base) and _is_id(res)

    def elements(self) -> list[tuple]:
        levels = []
        for lvl, trans in enumerate(self.transversals):
            b = self.base[lvl]
            levels.append([trans[b]] + [trans[x] for x in sorted(trans) if x != b])
        out = []
        for combo in itertools.product(*levels):
            g = self.ident
            for u in combo:
                g = _mul(g, u)
            out.append(g)
        return out


@dataclass(frozen=True, eq=False)
class PermutationGroup:
    """A permutation group given by generators.

    A group with an empty generator list is the trivial group of the given degree.
    """

    generators: tuple[Permutation, ...]
    degree: int
    _cache: dict = field(default_factory=dict, repr=False, compare=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False, compare=False)

    def __init__(self, generators: Iterable[Permutation | Sequence[int]], degree: int | None = None):
        gens = tuple(g if isinstance(g, Permutation) else Permutation(g) for g in generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for a group without generators")
            degree = gens[0].degree
        if degree < 1:
            raise ValueError("degree must be positive")
        for g in gens:
            if g.degree != degree:
                raise ValueError(f"generator degree {g.degree} != group degree {degree}")
        object.__setattr__(self, "generators", gens)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "_cache", {})
        object.__setattr__(self, "_lock", threading.Lock())

    @property
    def _chain(self) -> _Chain:
        with self._lock:
            chain = self._cache.get("chain")
            if chain is None:
                chain = _Chain(self.degree, [g.images for g in self.generators])
                self._cache["chain"] = chain
        return chain

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    @property
    def base(self) -> list[int]:
        return list(self._chain.base)

    def order(self) -> int:
        return self._chain.order()

    def __len__(self) -> int:
        return self.order()

    def contains(self, g: Permutation) -> bool:
        if g.degree != self.degree:
            return False
        return self._chain.contains(g.images)

    __contains__ = contains

    def elements(self) -> list[Permutation]:
        """All elements in canonical chain order (identity first)."""
        with self._lock:
            els = self._cache.get("elements")
        if els is None:
            els = [_raw(g) for g in self._chain.elements()]
            with self._lock:
                self._cache["elements"] = els
        return els

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.elements())

    def is_trivial(self) -> bool:
        return self.order() == 1

    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def is_transitive(self) -> bool:
        return len(orbit(self, 0)) == self.degree

    def is_subgroup_of(self, other: PermutationGroup) -> bool:
        return self.degree == other.degree and all(other.contains(g) for g in self.generators)

    def same_group(self, other: PermutationGroup) -> bool:
        return (
            self.degree == other.degree
            and self.order() == other.order()
            and self.is_subgroup_of(other)
        )

    def __repr__(self) -> str:
        return f"PermutationGroup(degree={self.degree}, ngens={len(self.generators)})"


def build_chain(G: PermutationGroup) -> tuple[int, Callable[[Permutation], bool]]:
    """Return the group order and a membership test backed by the stabilizer chain."""
    return G.order(), G.contains


def orbit(G: PermutationGroup, point: int) -> set[int]:
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    seen = {point}
    queue = [point]
    for x in queue:
        for g in G.generators:
            y = g.images[x]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def orbits(G: PermutationGroup) -> list[set[int]]:
    out = []
    seen: set[int] = set()
    for p in range(G.degree):
        if p not in seen:
            o = orbit(G, p)
            seen |= o
            out.append(o)
    return out


def _group_from(gens: Iterable[Permutation], degree: int) -> PermutationGroup:
    return PermutationGroup([g for g in gens if not g.is_identity()], degree=degree)


def _incremental(candidates: Iterable[Permutation], degree: int, start=()) -> PermutationGroup:
    """Grow a group from `start`, adding each candidate not already inside."""
    H = _group_from(start, degree)
    gens = list(H.generators)
    for c in candidates:
        if not H.contains(c):
            gens.append(c)
            H = PermutationGroup(gens, degree=degree)
    return H


def normal_closure(gens: Iterable[Permutation], G: PermutationGroup) -> PermutationGroup:
    """Smallest subgroup of G normal in G containing `gens`."""
    N = _incremental(gens, G.degree)
    changed = True
    while changed:
        changed = False
        for g in G.generators:
            ginv = g.inverse()
            for x in list(N.generators):
                c = g * x * ginv
                if not N.contains(c):
                    N = PermutationGroup(list(N.generators) + [c], degree=G.degree)
                    changed = True
    return N


def is_normal(N: PermutationGroup, G: PermutationGroup) -> bool:
    """True iff N is a subgroup of G normalized by every generator of G."""
    if not N.is_subgroup_of(G):
        return False
    for g in G.generators:
        ginv = g.inverse()
        if not all(N.contains(g * x * ginv) for x in N.generators):
            return False
    return True


def _commutator_subgroup(H: PermutationGroup) -> PermutationGroup:
    comms = []
    for a, b in itertools.combinations(H.generators, 2):
        c = a.inverse() * b.inverse() * a * b
        if not c.is_identity():
            comms.append(c)
    return normal_closure(comms, H)


def derived_series(G: PermutationGroup) -> list[PermutationGroup]:
    """G = G0 ⊇ G1 ⊇ ... stopping at the first term equal to its successor."""
    series = [G]
    while True:
        cur = series[-1]
        if cur.is_trivial():
            return series
        nxt = _commutator_subgroup(cur)
        if nxt.order() == cur.order():
            return series
        series.append(nxt)


def is_solvable(G: PermutationGroup) -> bool:
    return derived_series(G)[-1].is_trivial()


def point_stabilizer(G: PermutationGroup, point: int) -> PermutationGroup:
    """Stabilizer of `point`, generated by Schreier generators."""
    if not 0 <= point < G.degree:
        raise ValueError(f"point {point} out of range for degree {G.degree}")
    trans = {point: G.identity}
    queue = [point]
    for x in queue:
        for s in G.generators:
            y = s.images[x]
            if y not in trans:
                trans[y] = s * trans[x]
                queue.append(y)
    schreier = []
    for x in sorted(trans):
        for s in G.generators:
            sx = s * trans[x]
            h = trans[sx.images[point]].inverse() * sx
            if not h.is_identity():
                schreier.append(h)
    return _incremental(schreier, G.degree)


# ---------------------------------------------------------------------------
# subgroup lattice of small groups


class _Table:
    """Element indexing and multiplication table for a small group."""

    def __init__(self, G: PermutationGroup):
        self.group = G
        self.elements = G.elements()
        self.index = {g.images: i for i, g in enumerate(self.elements)}
        n = len(self.elements)
        self.mul = [[self.index[_mul(a.images, b.images)] for b in self.elements] for a in self.elements]
        self.inv = [self.index[_inv(a.images)] for a in self.elements]
        self.full = (1 << n) - 1
        self._conj: list[list[int]] | None = None

    def conj(self) -> list[list[int]]:
        # conj[g][x] = index of g x g^-1
        if self._conj is None:
            m, inv = self.mul, self.inv
            self._conj = [[m[m[g][x]][inv[g]] for x in range(len(m))] for g in range(len(m))]
        return self._conj

    def closure(self, gens: Sequence[int], start: int = 1) -> int:
        """Bitmask of the subgroup generated by `gens`.

        `start` is a subgroup already known to lie inside the result; it seeds the search.
        """
        mask = start | 1
        members = [i for i in _bits(mask)]
        queue = list(members)
        allgens = list(gens)
        seen = mask
        for x in queue:
            row = self.mul[x]
            for s in allgens:
                y = row[s]
                if not (seen >> y) & 1:
                    seen |= 1 << y
                    queue.append(y)
        return seen

    def conjugate_mask(self, mask: int, g: int) -> int:
        row = self.conj()[g]
        out = 0
        for i in _bits(mask):
            out |= 1 << row[i]
        return out

    def canonical(self, mask: int) -> int:
        return min(self.conjugate_mask(mask, g) for g in range(len(self.elements)))

    def subgroup(self, gens: Sequence[int]) -> PermutationGroup:
        return _group_from((self.elements[i] for i in gens), self.group.degree)


def _bits(mask: int) -> Iterator[int]:
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _table(G: PermutationGroup) -> _Table:
    with G._lock:
        t = G._cache.get("table")
    if t is None:
        if G.order() > SUBGROUP_ORDER_GUARD:
            raise GuardError("group order", SUBGROUP_ORDER_GUARD, G.order())
        t = _Table(G)
        with G._lock:
            G._cache["table"] = t
    return t


def _lattice(G: PermutationGroup, keep: Callable[[int], bool] | None = None) -> tuple[_Table, dict[int, list[int]]]:
    """Cyclic-extension enumeration of subgroups as bitmasks -> generator indices.

    `keep` must be hereditary (closed under taking subgroups); subgroups failing
    it are pruned together with everything above them.
    """
    t = _table(G)
    cyclic: dict[int, int] = {}
    for x in range(1, len(t.elements)):
        c = t.closure([x])
        if (keep is None or keep(c)) and c not in cyclic:
            cyclic[c] = x
    found: dict[int, list[int]] = {1: []}
    frontier = [1]
    while frontier:
        nxt = []
        for H in frontier:
            gens = found[H]
            for cmask, x in cyclic.items():
                if cmask & ~H == 0:
                    continue
                K = t.closure(gens + [x], H)
                if K in found or (keep is not None and not keep(K)):
                    continue
                found[K] = gens + [x]
                nxt.append(K)
        frontier = nxt
    return t, found


@dataclass(frozen=True)
class SubgroupList:
    parent: PermutationGroup
    subgroups: tuple[PermutationGroup, ...]
    up_to_conjugacy: bool
    masks: tuple[int, ...] = field(default=(), repr=False)

    def __len__(self) -> int:
        return len(self.subgroups)

    def __iter__(self) -> Iterator[PermutationGroup]:
        return iter(self.subgroups)

    def orders(self) -> list[int]:
        return [H.order() for H in self.subgroups]


def _sort_key(mask: int) -> tuple[int, tuple[int, ...]]:
    els = tuple(_bits(mask))
    return len(els), els


def enumerate_subgroups(G: PermutationGroup, up_to_conjugacy: bool = False) -> SubgroupList:
    """All subgroups of G (or conjugacy class representatives), |G| <= 200."""
    t, found = _lattice(G)
    masks = list(found)
    if up_to_conjugacy:
        reps: dict[int, int] = {}
        for m in sorted(masks, key=_sort_key):
            c = t.canonical(m)
            reps.setdefault(c, m)
        masks = list(reps.values())
    masks.sort(key=_sort_key)
    subs = tuple(t.subgroup(found[m]) for m in masks)
    return SubgroupList(G, subs, up_to_conjugacy, tuple(masks))


def subgroup_mask(G: PermutationGroup, H: PermutationGroup) -> int:
    """Bitmask of H inside G's element table."""
    t = _table(G)
    mask = 0
    for h in H.elements():
        idx = t.index.get(h.images)
        if idx is None:
            raise ValueError("H is not a subgroup of G")
        mask |= 1 << idx
    return mask


def is_maximal(G: PermutationGroup, H: PermutationGroup) -> bool:
    """True iff H is a maximal subgroup of G (proper, nothing strictly between)."""
    if not H.is_subgroup_of(G):
        raise ValueError("H is not a subgroup of G")
    hmask = subgroup_mask(G, H)
    t, found = _lattice(G)
    if hmask == t.full:
        return False
    return not any(K != hmask and K != t.full and K & hmask == hmask for K in found)
