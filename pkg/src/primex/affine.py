"""Affine structure of solvable primitive groups.

A solvable primitive group G on Ω has a regular elementary abelian minimal
normal subgroup N.  Identifying Ω with N through the origin (point 0) turns Ω
into an affine space over F_l on which G acts by affine maps.  Here N is
found as the last nontrivial term of the derived series: any nontrivial normal
subgroup of a primitive group is transitive, a transitive abelian group is
regular, and a regular N inside the abelian term A forces A = N.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .blocks import is_primitive
from .gf import FlMatrix, index_to_vector, is_prime, prime_power, vector_to_index
from .modrep import (
    ElementaryAbelian,
    LinearRepresentation,
    gl_generators,
    is_simple,
    matrix_to_perm,
    module_from_conjugation,
)
from .perm import Permutation, PermutationGroup, derived_series, is_normal

__all__ = [
    "AffineStructure",
    "AffineMap",
    "PreconditionError",
    "DefectError",
    "minimal_normal_translations",
    "recover_affine",
    "linear_representation",
    "agl_full",
    "standard_translations",
    "intermediate_group_tests",
    "AGL_DEGREE_GUARD",
]

AGL_DEGREE_GUARD = 512


class PreconditionError(ValueError):
    """Input fails a documented precondition; `reason` is machine readable."""

    def __init__(self, reason: str, message: str | None = None):
        self.reason = reason
        super().__init__(message or reason)


class DefectError(RuntimeError):
    """An internal consistency check failed where the theory rules it out."""


@dataclass(frozen=True)
class AffineMap:
    matrix: FlMatrix
    offset: tuple[int, ...]

    def __call__(self, v) -> tuple[int, ...]:
        l = self.matrix.l
        w = self.matrix.apply(v)
        return tuple((a + b) % l for a, b in zip(w, self.offset))

    def to_json(self) -> dict:
        return {"matrix": self.matrix.to_list(), "offset": list(self.offset)}


@dataclass(frozen=True)
class AffineStructure:
    l: int
    n: int
    origin: int
    labels: tuple[tuple[int, ...], ...]
    translations: PermutationGroup

    @property
    def degree(self) -> int:
        return len(self.labels)

    def point(self, v) -> int:
        return self._inverse()[tuple(int(x) % self.l for x in v)]

    def _inverse(self) -> dict[tuple[int, ...], int]:
        return {lab: p for p, lab in enumerate(self.labels)}

    def affine_map(self, g: Permutation) -> AffineMap:
        """The affine map induced by g, verified on every point."""
        l, n = self.l, self.n
        inv = self._inverse()
        offset = self.labels[g(self.origin)]
        cols = []
        for j in range(n):
            e = tuple(int(i == j) for i in range(n))
            img = self.labels[g(inv[e])]
            cols.append(tuple((a - b) % l for a, b in zip(img, offset)))
        A = FlMatrix(l, np.array(cols, dtype=np.int64).T)
        amap = AffineMap(A, offset)
        if not A.is_invertible():
            raise DefectError("matrix part of a group element is singular")
        for p, lab in enumerate(self.labels):
            if amap(lab) != self.labels[g(p)]:
                raise DefectError(f"group element {g!r} does not act affinely")
        return amap

    def to_json(self, generator_maps: list[AffineMap] | None = None) -> dict:
        out = {
            "l": self.l,
            "n": self.n,
            "origin": self.origin,
            "labels": ["".join(map(str, lab)) for lab in self.labels],
        }
        if generator_maps is not None:
            out["generators"] = [m.to_json() for m in generator_maps]
        return out


def _check_solvable_primitive(G: PermutationGroup) -> list[PermutationGroup]:
    if G.degree < 2:
        raise PreconditionError("degree-too-small", "degree must be at least 2")
    series = derived_series(G)
    if not series[-1].is_trivial():
        raise PreconditionError("not-solvable", "group is not solvable")
    if not is_primitive(G):
        raise PreconditionError("not-primitive", "group is not primitive")
    if prime_power(G.degree) is None:
        raise PreconditionError("degree-not-prime-power", f"degree {G.degree} is not a prime power")
    return series


def minimal_normal_translations(G: PermutationGroup) -> PermutationGroup:
    """The regular elementary abelian normal subgroup of a solvable primitive group."""
    series = _check_solvable_primitive(G)
    A = series[-2]
    l, n = prime_power(G.degree)
    if A.order() != G.degree:
        raise DefectError(f"last derived term has order {A.order()}, degree is {G.degree}")
    if not A.is_abelian() or not A.is_transitive() or not is_normal(A, G):
        raise DefectError("last derived term is not a transitive abelian normal subgroup")
    if any(not (g ** l).is_identity() for g in A.generators):
        raise DefectError("last derived term is not elementary abelian")
    return A


def recover_affine(G: PermutationGroup) -> tuple[AffineStructure, dict[Permutation, AffineMap]]:
    """Affine space structure on the points with G acting by affine maps.

    Origin is point 0; coordinates come from a basis of the translation group
    chosen greedily in chain order.  Returns the structure and the affine map of
    each generator.
    """
    N = minimal_normal_translations(G)
    ea = ElementaryAbelian(N)
    labels: list[tuple[int, ...] | None] = [None] * G.degree
    for t in N.elements():
        labels[t(0)] = ea.coords(t)
    if any(lab is None for lab in labels):
        raise DefectError("translation group is not regular")
    structure = AffineStructure(ea.l, ea.n, 0, tuple(labels), N)
    maps = {g: structure.affine_map(g) for g in G.generators}
    return structure, maps


def linear_representation(structure: AffineStructure, maps: dict[Permutation, AffineMap]) -> LinearRepresentation:
    """The group of linear parts of the given maps, acting on F_l^n.

    Its group is the matrix group itself, realized on the nonzero vectors.
    Identity linear parts are dropped from the generating set.
    """
    l, n = structure.l, structure.n
    seen, mats = set(), []
    for amap in maps.values():
        key = tuple(map(tuple, amap.matrix.to_list()))
        if not amap.matrix.is_identity() and key not in seen:
            seen.add(key)
            mats.append(amap.matrix)
    H = PermutationGroup([matrix_to_perm(m) for m in mats], degree=l**n - 1)
    return LinearRepresentation(l, n, H, mats)


def standard_translations(n: int, l: int) -> list[Permutation]:
    """Translations by the basis vectors on l^n points (point = base-l index of the vector)."""
    out = []
    for j in range(n):
        imgs = []
        for i in range(l**n):
            v = list(index_to_vector(i, l, n))
            v[j] = (v[j] + 1) % l
            imgs.append(vector_to_index(v, l))
        out.append(Permutation(imgs))
    return out


def linear_perm(M: FlMatrix) -> Permutation:
    """x -> M x on all l^n vectors."""
    l, n = M.l, M.n
    A = M.array
    imgs = [vector_to_index((A @ np.asarray(index_to_vector(i, l, n))) % l, l) for i in range(l**n)]
    return Permutation(imgs)


def agl_full(n: int, l: int) -> PermutationGroup:
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    if l**n > AGL_DEGREE_GUARD:
        from .perm import GuardError

        raise GuardError("l^n", AGL_DEGREE_GUARD, l**n)
    gens = standard_translations(n, l) + [linear_perm(M) for M in gl_generators(n, l)]
    return PermutationGroup(gens, degree=l**n)


def _standard_structure(n: int, l: int) -> AffineStructure:
    T = PermutationGroup(standard_translations(n, l), degree=l**n)
    labels = tuple(index_to_vector(i, l, n) for i in range(l**n))
    return AffineStructure(l, n, 0, labels, T)


def intermediate_group_tests(n: int, l: int, G: PermutationGroup) -> tuple[bool, bool, bool]:
    """(solvable, primitive, module_simple) for translations <= G <= AGL(n, l).

    Primitivity is decided from blocks and simplicity from the conjugation
    module of G/N on N; the two must agree and a mismatch raises DefectError.
    """
    if G.degree != l**n:
        raise PreconditionError("degree-mismatch", f"group degree {G.degree} != {l}^{n}")
    trans = standard_translations(n, l)
    if not all(G.contains(t) for t in trans):
        raise PreconditionError("missing-translations", "group does not contain the translations")
    std = _standard_structure(n, l)
    try:
        for g in G.generators:
            std.affine_map(g)
    except DefectError:
        raise PreconditionError("not-affine", "group is not contained in AGL") from None
    N = std.translations
    quotient, rep = module_from_conjugation(G, N, basis=trans)
    solvable = derived_series(G)[-1].is_trivial()
    if solvable != derived_series(quotient)[-1].is_trivial():
        raise DefectError("solvability of G and G/N disagree")
    primitive = is_primitive(G)
    simple = is_simple(rep)
    if primitive != simple:
        raise DefectError("primitivity and module simplicity disagree")
    return solvable, primitive, simple


def structure_json(structure: AffineStructure, maps: dict[Permutation, AffineMap], G: PermutationGroup) -> str:
    return json.dumps(structure.to_json([maps[g] for g in G.generators]), sort_keys=True)
