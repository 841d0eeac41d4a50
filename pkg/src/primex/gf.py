"""Linear algebra over the prime field F_l.

Dense numpy int64 arrays with entries in [0, l).  Sizes in this package stay in
the low thousands of columns, so plain Gaussian elimination is enough.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "is_prime",
    "prime_power",
    "rref",
    "rank",
    "nullspace",
    "FlMatrix",
    "Subspace",
    "vector_to_index",
    "index_to_vector",
    "all_vectors",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(n: int) -> tuple[int, int] | None:
    """Return (l, k) with n = l**k and l prime, or None (trial factorization)."""
    if n < 2:
        return None
    f = 2
    while f * f <= n and n % f:
        f += 1
    if n % f:
        return n, 1
    k = 0
    m = n
    while m % f == 0:
        m //= f
        k += 1
    return (f, k) if m == 1 else None


def _inv_mod(a: int, l: int) -> int:
    return pow(int(a) % l, -1, l)


def rref(A, l: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A over F_l and its pivot columns."""
    M = np.array(A, dtype=np.int64) % l
    if M.ndim != 2:
        raise ValueError("expected a 2-d array")
    rows, cols = M.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        p = r + nz[0]
        if p != r:
            M[[r, p]] = M[[p, r]]
        M[r] = (M[r] * _inv_mod(M[r, c], l)) % l
        col = M[:, c].copy()
        col[r] = 0
        nzr = np.nonzero(col)[0]
        if nzr.size:
            M[nzr] = (M[nzr] - np.outer(col[nzr], M[r])) % l
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(A, l: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    # eliminate on the thinner side
    if A.shape[0] > A.shape[1]:
        A = A.T
    return len(rref(A, l)[1])


def nullspace(A, l: int) -> np.ndarray:
    """Basis (as rows) of {x : A x = 0} over F_l."""
    A = np.asarray(A, dtype=np.int64)
    cols = A.shape[1]
    R, piv = rref(A, l) if A.shape[0] else (np.zeros((0, cols), dtype=np.int64), [])
    free = [c for c in range(cols) if c not in piv]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, p in enumerate(piv):
            basis[k, p] = (-R[i, f]) % l
    return basis


def vector_to_index(v: Sequence[int], l: int) -> int:
    """Little-endian base-l encoding of a coordinate vector."""
    out = 0
    for x in reversed(list(v)):
        out = out * l + int(x) % l
    return out


def index_to_vector(i: int, l: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        out.append(i % l)
        i //= l
    return tuple(out)


def all_vectors(l: int, n: int) -> list[tuple[int, ...]]:
    return [index_to_vector(i, l, n) for i in range(l**n)]


@dataclass(frozen=True)
class FlMatrix:
    """An n x n matrix over F_l, stored as a tuple of rows."""

    l: int
    rows: tuple[tuple[int, ...], ...]

    def __init__(self, l: int, rows: Iterable[Iterable[int]]):
        rows = tuple(tuple(int(x) % l for x in r) for r in rows)
        if any(len(r) != len(rows) for r in rows):
            raise ValueError("matrix must be square")
        object.__setattr__(self, "l", l)
        object.__setattr__(self, "rows", rows)

    @classmethod
    def identity(cls, l: int, n: int) -> FlMatrix:
        return cls(l, np.eye(n, dtype=np.int64))

    @classmethod
    def from_array(cls, l: int, a: np.ndarray) -> FlMatrix:
        return cls(l, a.tolist())

    @property
    def n(self) -> int:
        return len(self.rows)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.rows, dtype=np.int64).reshape(self.n, self.n)

    def __matmul__(self, other: FlMatrix) -> FlMatrix:
        return FlMatrix(self.l, (self.array @ other.array) % self.l)

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return tuple(int(x) for x in (self.array @ np.asarray(v, dtype=np.int64)) % self.l)

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, r in enumerate(self.rows) for j, x in enumerate(r))

    def is_invertible(self) -> bool:
        return rank(self.array, self.l) == self.n

    def inverse(self) -> FlMatrix:
        n = self.n
        aug = np.hstack([self.array, np.eye(n, dtype=np.int64)])
        R, piv = rref(aug, self.l)
        if piv[:n] != list(range(n)):
            raise ValueError("matrix is singular")
        return FlMatrix(self.l, R[:, n:])

    def to_list(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __repr__(self) -> str:
        return f"FlMatrix(l={self.l}, {self.to_list()})"


@dataclass(frozen=True)
class Subspace:
    """Subspace of F_l^n, canonical by its reduced row echelon basis."""

    l: int
    n: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def span(cls, l: int, n: int, vectors) -> Subspace:
        vecs = np.asarray(vectors, dtype=np.int64).reshape(-1, n)
        if vecs.shape[0] == 0:
            return cls(l, n, ())
        R, _ = rref(vecs, l)
        return cls(l, n, tuple(tuple(int(x) for x in row) for row in R))

    @classmethod
    def zero(cls, l: int, n: int) -> Subspace:
        return cls(l, n, ())

    @classmethod
    def full(cls, l: int, n: int) -> Subspace:
        return cls.span(l, n, np.eye(n, dtype=np.int64))

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def array(self) -> np.ndarray:
        return np.array(self.basis, dtype=np.int64).reshape(-1, self.n)

    def contains(self, v: Sequence[int]) -> bool:
        return rank(np.vstack([self.array, np.asarray(v).reshape(1, -1)]), self.l) == self.dim

    def __add__(self, other: Subspace) -> Subspace:
        return Subspace.span(self.l, self.n, np.vstack([self.array, other.array]))

    def is_invariant(self, matrices: Iterable[FlMatrix]) -> bool:
        if self.dim == 0:
            return True
        B = self.array
        for M in matrices:
            img = (M.array @ B.T).T % self.l
            if rank(np.vstack([B, img]), self.l) != self.dim:
                return False
        return True

    def vectors(self) -> Iterator[tuple[int, ...]]:
        B = self.array
        for coeffs in itertools.product(range(self.l), repeat=self.dim):
            yield tuple(int(x) for x in (np.asarray(coeffs, dtype=np.int64) @ B) % self.l) if self.dim else (0,) * self.n

    def to_json(self) -> str:
        return json.dumps([list(r) for r in self.basis])
