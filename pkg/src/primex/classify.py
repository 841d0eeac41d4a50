"""Solvable primitive permutation groups of degree l^n.

Every solvable primitive G of degree l^n contains the translations of a unique
affine structure, splits over them, and its point stabilizer is an
irreducible solvable subgroup of GL(n, l).  So the list below, one
semidirect product per GL-conjugacy class, is complete.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

from .blocks import is_primitive
from .extensions import semidirect
from .groupio import format_group
from .modrep import LinearRepresentation, gl_order, irreducible_solvable_subgroups
from .perm import GuardError, Permutation, PermutationGroup, is_solvable, orbits

__all__ = [
    "ClassificationEntry",
    "solvable_primitive_groups",
    "permutation_isomorphic",
    "conjugating_permutation",
    "write_enumeration",
    "ISO_DEGREE_GUARD",
]

ISO_DEGREE_GUARD = 9


@dataclass
class ClassificationEntry:
    l: int
    n: int
    rep: LinearRepresentation
    group: PermutationGroup
    order: int
    label: str
    merged: list[LinearRepresentation] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "order": self.order,
            "label": self.label,
            "rep_matrices": [[m.to_list() for m in r.images] for r in [self.rep] + self.merged],
        }


def _cycle_signature(G: PermutationGroup) -> Counter:
    return Counter(g.cycle_type() for g in G.elements())


def _centralizer_size(g: Permutation) -> int:
    from math import factorial

    out = 1
    for length, count in Counter(len(c) for c in g.cycles()).items():
        out *= length**count * factorial(count)
    return out


def _conjugators(g: Permutation, h: Permutation):
    """Yield every sigma with sigma g sigma^-1 = h."""
    gcyc = g.cycles()
    hcyc = h.cycles()
    degree = g.degree
    sigma = [-1] * degree
    used = [False] * len(hcyc)

    def place(k):
        if k == len(gcyc):
            yield Permutation(sigma)
            return
        c = gcyc[k]
        for j, d in enumerate(hcyc):
            if used[j] or len(d) != len(c):
                continue
            used[j] = True
            for shift in range(len(d)):
                for i, x in enumerate(c):
                    sigma[x] = d[(i + shift) % len(d)]
                yield from place(k + 1)
            used[j] = False
        for x in c:
            sigma[x] = -1

    yield from place(0)


def conjugating_permutation(G: PermutationGroup, H: PermutationGroup) -> Permutation | None:
    """A relabeling sigma with sigma G sigma^-1 = H, or None."""
    if G.degree != H.degree:
        return None
    if G.degree > ISO_DEGREE_GUARD:
        raise GuardError("degree", ISO_DEGREE_GUARD, G.degree)
    if G.order() != H.order():
        return None
    if sorted(map(len, orbits(G))) != sorted(map(len, orbits(H))):
        return None
    if _cycle_signature(G) != _cycle_signature(H):
        return None
    gens = [g for g in G.generators if not g.is_identity()]
    if not gens:
        return Permutation.identity(G.degree)
    g1 = min(gens, key=_centralizer_size)
    others = [g for g in gens if g is not g1]
    ctype = g1.cycle_type()
    for h in H.elements():
        if h.cycle_type() != ctype:
            continue
        for sigma in _conjugators(g1, h):
            sinv = sigma.inverse()
            if all(H.contains(sigma * g * sinv) for g in others):
                return sigma
    return None


def permutation_isomorphic(G: PermutationGroup, H: PermutationGroup) -> bool:
    if G.degree != H.degree:
        return False
    return conjugating_permutation(G, H) is not None


def _label(l: int, n: int, order: int, H_order: int, index: int) -> str:
    if (l, n) == (2, 2):
        return {12: "A4", 24: "S4"}[order]
    if n == 1 and H_order == l - 1:
        return f"AGL(1,{l})"
    if H_order == gl_order(n, l):
        return f"AGL({n},{l})"
    return f"{l}^{n}:{H_order}#{index}"


def solvable_primitive_groups(l: int, n: int) -> list[ClassificationEntry]:
    """One entry per permutation-isomorphism class, sorted by order then serialization."""
    entries: list[ClassificationEntry] = []
    for rep in irreducible_solvable_subgroups(n, l):
        E = semidirect(rep)
        G = E.L
        if not is_primitive(G) or not is_solvable(G):
            raise RuntimeError(f"semidirect product of order {G.order()} is not solvable primitive")
        for entry in entries:
            if entry.order == G.order() and permutation_isomorphic(entry.group, G):
                entry.merged.append(rep)
                break
        else:
            entries.append(ClassificationEntry(l, n, rep, G, G.order(), ""))
    entries.sort(key=lambda e: (e.order, format_group(e.group)))
    seen: Counter = Counter()
    for e in entries:
        h = e.rep.group.order()
        seen[h] += 1
        e.label = _label(l, n, e.order, h, seen[h])
    return entries


def write_enumeration(entries: list[ClassificationEntry], out_dir: str | Path, l: int, n: int) -> dict:
    """Write one group file per entry plus manifest.json; return the manifest."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    items = []
    for i, e in enumerate(entries):
        name = f"group_{l}_{n}_{i:02d}.grp"
        (out / name).write_text(format_group(e.group, comment=f"{e.label} order {e.order}"))
        items.append({"file": name, **e.to_json()})
    manifest = {"l": l, "n": n, "count": len(entries), "entries": items}
    (out / "manifest.json").write_text(json.dumps(manifest, sort_keys=True, indent=2) + "\n")
    return manifest
