"""F_l[G]-modules given by one matrix per group generator.

The carrier group is always a concrete PermutationGroup; the matrix of an
arbitrary element is obtained by walking the Cayley graph from the identity,
which doubles as the check that the generator images define a homomorphism.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .gf import FlMatrix, Subspace, index_to_vector, is_prime, prime_power, vector_to_index
from .perm import (
    GuardError,
    Permutation,
    PermutationGroup,
    derived_series,
    enumerate_subgroups,
    is_normal,
    is_solvable,
    normal_closure,
)

__all__ = [
    "LinearRepresentation",
    "ElementaryAbelian",
    "module_from_conjugation",
    "coset_action",
    "invariant_subspaces",
    "is_simple",
    "is_faithful",
    "clifford_restriction_semisimple",
    "idempotent_split",
    "gl_order",
    "gl_group",
    "matrix_to_perm",
    "perm_to_matrix",
    "irreducible_solvable_subgroups",
    "minimal_normal_subgroup",
    "SUBSPACE_GUARD",
    "GL_ORDER_GUARD",
]

SUBSPACE_GUARD = 10**4
GL_ORDER_GUARD = 200


@dataclass(frozen=True, eq=False)
class LinearRepresentation:
    """Generator i of `group` acts on F_l^n by `images[i]`."""

    l: int
    n: int
    group: PermutationGroup
    images: tuple[FlMatrix, ...]
    _matrices: dict = field(default_factory=dict, repr=False)

    def __init__(self, l: int, n: int, group: PermutationGroup, images: Sequence[FlMatrix]):
        if not is_prime(l):
            raise ValueError(f"{l} is not prime")
        images = tuple(m if isinstance(m, FlMatrix) else FlMatrix(l, m) for m in images)
        if len(images) != len(group.generators):
            raise ValueError("need exactly one matrix per group generator")
        for m in images:
            if m.l != l or m.n != n:
                raise ValueError("matrix has the wrong field or size")
            if not m.is_invertible():
                raise ValueError(f"generator image {m.to_list()} is not invertible")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "images", images)
        object.__setattr__(self, "_matrices", self._walk())

    def _walk(self) -> dict[tuple[int, ...], np.ndarray]:
        ident = self.group.identity.images
        mats = {ident: np.eye(self.n, dtype=np.int64)}
        queue = [ident]
        gens = [(g.images, m.array) for g, m in zip(self.group.generators, self.images)]
        for x in queue:
            mx = mats[x]
            for s, ms in gens:
                y = tuple(s[j] for j in x)
                my = (ms @ mx) % self.l
                known = mats.get(y)
                if known is None:
                    mats[y] = my
                    queue.append(y)
                elif not np.array_equal(known, my):
                    raise ValueError("generator images do not define a homomorphism")
        return mats

    def matrix_of(self, g: Permutation) -> FlMatrix:
        return FlMatrix.from_array(self.l, self._matrices[g.images])

    def array_of(self, g: Permutation) -> np.ndarray:
        return self._matrices[g.images]

    def restrict(self, H: PermutationGroup) -> LinearRepresentation:
        return LinearRepresentation(self.l, self.n, H, [self.matrix_of(h) for h in H.generators])

    def conjugate(self, P: FlMatrix) -> LinearRepresentation:
        """Representation g -> P rho(g) P^-1."""
        Pinv = P.inverse()
        return LinearRepresentation(self.l, self.n, self.group, [P @ m @ Pinv for m in self.images])

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "n": self.n,
            "order": self.group.order(),
            "matrices": [m.to_list() for m in self.images],
        }


# ---------------------------------------------------------------------------
# elementary abelian subgroups as F_l-spaces


class ElementaryAbelian:
    """An elementary abelian l-group with a fixed basis and coordinate map."""

    def __init__(self, N: PermutationGroup, basis: Sequence[Permutation] | None = None):
        order = N.order()
        if order == 1:
            raise ValueError("trivial group has no prime")
        pp = prime_power(order)
        if pp is None:
            raise ValueError(f"order {order} is not a prime power")
        l, n = pp
        if not N.is_abelian():
            raise ValueError("subgroup is not abelian")
        if any(not (g ** l).is_identity() for g in N.generators):
            raise ValueError("subgroup is not elementary abelian")
        if basis is None:
            basis = []
            span = {N.identity.images}
            for x in N.elements():
                if x.images not in span:
                    basis.append(x)
                    span = {_power_product(basis, v).images for v in _vectors(l, len(basis))}
        basis = list(basis)
        if len(basis) != n:
            raise ValueError(f"basis must have {n} elements")
        coords = {}
        for v in _vectors(l, n):
            coords[_power_product(basis, v).images] = v
        if len(coords) != order or any(not N.contains(b) for b in basis):
            raise ValueError("basis does not span the subgroup")
        self.group = N
        self.l = l
        self.n = n
        self.basis = basis
        self._coords = coords

    def coords(self, g: Permutation) -> tuple[int, ...]:
        return self._coords[g.images]

    def element(self, v: Sequence[int]) -> Permutation:
        return _power_product(self.basis, v)

    def conjugation_matrix(self, g: Permutation) -> FlMatrix:
        ginv = g.inverse()
        cols = [self.coords(g * b * ginv) for b in self.basis]
        return FlMatrix(self.l, np.array(cols, dtype=np.int64).T)


def _vectors(l: int, n: int):
    return [index_to_vector(i, l, n) for i in range(l**n)]


def _power_product(basis: Sequence[Permutation], v: Sequence[int]) -> Permutation:
    out = Permutation.identity(basis[0].degree)
    for b, c in zip(basis, v):
        out = out * b ** c
    return out


def coset_action(L: PermutationGroup, N: PermutationGroup) -> tuple[PermutationGroup, list[int]]:
    """L/N acting on the left cosets of N.

    Returns the quotient (generated by the nontrivial images of L's generators)
    and, for each quotient generator, the index of the L generator it came from.
    """
    nset = [n.images for n in N.elements()]
    coset_of: dict[tuple, int] = {}
    reps: list[tuple] = []
    for x in L.elements():
        if x.images in coset_of:
            continue
        k = len(reps)
        reps.append(x.images)
        for n in nset:
            coset_of[tuple(x.images[j] for j in n)] = k
    gens, origin = [], []
    for i, g in enumerate(L.generators):
        img = tuple(coset_of[tuple(g.images[j] for j in r)] for r in reps)
        if img != tuple(range(len(reps))):
            gens.append(Permutation(img))
            origin.append(i)
    return PermutationGroup(gens, degree=len(reps)), origin


def module_from_conjugation(
    L: PermutationGroup, N: PermutationGroup, basis: Sequence[Permutation] | None = None
) -> tuple[PermutationGroup, LinearRepresentation]:
    """The quotient L/N and its conjugation action on the elementary abelian normal N."""
    if not is_normal(N, L):
        raise ValueError("N is not a normal subgroup of L")
    ea = ElementaryAbelian(N, basis)
    quotient, origin = coset_action(L, N)
    images = [ea.conjugation_matrix(L.generators[i]) for i in origin]
    return quotient, LinearRepresentation(ea.l, ea.n, quotient, images)


# ---------------------------------------------------------------------------
# submodules


def _closure(l: int, n: int, vectors: np.ndarray, mats: list[np.ndarray]) -> Subspace:
    W = Subspace.span(l, n, vectors)
    while True:
        B = W.array
        if not B.size:
            return W
        imgs = [((M @ B.T) % l).T for M in mats]
        W2 = Subspace.span(l, n, np.vstack([B] + imgs))
        if W2.dim == W.dim:
            return W
        W = W2


def _projective_points(l: int, n: int) -> list[tuple[int, ...]]:
    out = []
    for i in range(1, l**n):
        v = index_to_vector(i, l, n)
        first = next(x for x in v if x)
        if first == 1:
            out.append(v)
    return out


def _invariant_subspaces(l: int, n: int, mats: list[np.ndarray]) -> list[Subspace]:
    if l**n > SUBSPACE_GUARD:
        raise GuardError("l^n", SUBSPACE_GUARD, l**n)
    zero = Subspace.zero(l, n)
    found = {zero.basis: zero}
    queue = [zero]
    points = _projective_points(l, n)
    for W in queue:
        for v in points:
            if W.dim and W.contains(v):
                continue
            start = np.vstack([W.array, np.asarray(v, dtype=np.int64).reshape(1, n)])
            U = _closure(l, n, start, mats)
            if U.basis not in found:
                found[U.basis] = U
                queue.append(U)
    return sorted(found.values(), key=lambda S: (S.dim, S.basis))


def invariant_subspaces(rep: LinearRepresentation) -> list[Subspace]:
    """All rep-invariant subspaces (including 0 and the whole space)."""
    return _invariant_subspaces(rep.l, rep.n, [m.array for m in rep.images])


def is_simple(rep: LinearRepresentation) -> bool:
    return rep.n >= 1 and len(invariant_subspaces(rep)) == 2


def is_faithful(rep: LinearRepresentation) -> bool:
    ident = np.eye(rep.n, dtype=np.int64)
    return sum(np.array_equal(m, ident) for m in rep._matrices.values()) == 1


def clifford_restriction_semisimple(rep: LinearRepresentation, N: PermutationGroup) -> bool:
    """Whether every N-invariant subspace has an N-invariant complement."""
    if not is_normal(N, rep.group):
        raise ValueError("N is not normal in the representation's group")
    if not is_simple(rep):
        raise ValueError("representation is not simple")
    subs = _invariant_subspaces(rep.l, rep.n, [rep.array_of(g) for g in N.generators])
    for W in subs:
        if not any(W.dim + U.dim == rep.n and (W + U).dim == rep.n for U in subs):
            return False
    return True


def idempotent_split(rep: LinearRepresentation, N: PermutationGroup, p: int) -> tuple[Subspace, Subspace]:
    """Images of r = p^-a * sum_{x in N} rho(x) and of 1 - r on F_l^n."""
    l = rep.l
    if p == l:
        raise ValueError("p equals the characteristic; the idempotent is undefined")
    if not is_normal(N, rep.group):
        raise ValueError("N is not normal in the representation's group")
    order = N.order()
    ea = ElementaryAbelian(N)
    if ea.l != p:
        raise ValueError(f"N is an elementary abelian {ea.l}-group, not a {p}-group")
    total = sum(rep.array_of(x) for x in N.elements()) % l
    r = (pow(order, -1, l) * total) % l
    s = (np.eye(rep.n, dtype=np.int64) - r) % l
    return Subspace.span(l, rep.n, r.T), Subspace.span(l, rep.n, s.T)


# ---------------------------------------------------------------------------
# GL(n, l) as a permutation group on nonzero vectors


def gl_order(n: int, l: int) -> int:
    return math.prod(l**n - l**i for i in range(n))


def _primitive_root(l: int) -> int:
    if l == 2:
        return 1
    phi = l - 1
    factors = [q for q in range(2, phi + 1) if phi % q == 0 and is_prime(q)]
    return next(g for g in range(2, l) if all(pow(g, phi // q, l) != 1 for q in factors))


def matrix_to_perm(M: FlMatrix) -> Permutation:
    l, n = M.l, M.n
    A = M.array
    imgs = []
    for i in range(1, l**n):
        v = np.asarray(index_to_vector(i, l, n), dtype=np.int64)
        imgs.append(vector_to_index((A @ v) % l, l) - 1)
    return Permutation(imgs)


def perm_to_matrix(g: Permutation, l: int, n: int) -> FlMatrix:
    cols = [index_to_vector(g.images[l**j - 1] + 1, l, n) for j in range(n)]
    return FlMatrix(l, np.array(cols, dtype=np.int64).T)


def gl_generators(n: int, l: int) -> list[FlMatrix]:
    w = _primitive_root(l)
    gens = []
    d = np.eye(n, dtype=np.int64)
    d[0, 0] = w
    gens.append(FlMatrix(l, d))
    for i in range(n):
        for j in range(n):
            if i != j:
                t = np.eye(n, dtype=np.int64)
                t[i, j] = 1
                gens.append(FlMatrix(l, t))
    return [g for g in gens if not g.is_identity()]


def gl_group(n: int, l: int) -> PermutationGroup:
    """GL(n, l) acting on the l^n - 1 nonzero vectors (point i <-> vector index i + 1)."""
    return PermutationGroup([matrix_to_perm(M) for M in gl_generators(n, l)], degree=l**n - 1)


def irreducible_solvable_subgroups(n: int, l: int) -> list[LinearRepresentation]:
    """Conjugacy class representatives of solvable irreducible subgroups of GL(n, l)."""
    if not is_prime(l):
        raise ValueError(f"{l} is not prime")
    order = gl_order(n, l)
    if order > GL_ORDER_GUARD:
        raise GuardError("|GL(n,l)|", GL_ORDER_GUARD, order)
    classes = enumerate_subgroups(gl_group(n, l), up_to_conjugacy=True)
    out = []
    for H in classes:
        rep = LinearRepresentation(l, n, H, [perm_to_matrix(g, l, n) for g in H.generators])
        if is_solvable(H) and is_simple(rep):
            out.append(rep)
    return out


def minimal_normal_subgroup(G: PermutationGroup) -> PermutationGroup:
    """Some minimal normal subgroup of a nontrivial solvable group."""
    series = derived_series(G)
    if not series[-1].is_trivial():
        raise ValueError("group is not solvable")
    if G.is_trivial():
        raise ValueError("trivial group has no minimal normal subgroup")
    A = series[-2]
    order = A.order()
    p = next(q for q in range(2, order + 1) if order % q == 0)
    omega = [x for x in A.elements() if not x.is_identity() and (x ** p).is_identity()]
    best = None
    for x in omega:
        M = normal_closure([x], G)
        if best is None or M.order() < best.order():
            best = M
    return best


def matrices_json(rep: LinearRepresentation) -> str:
    return json.dumps([m.to_list() for m in rep.images])
