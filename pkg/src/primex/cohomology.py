"""H^0, H^1, H^2 of a finite group with coefficients in F_l^n.

Cochains are inhomogeneous (bar) and non-normalized: C^i = functions G^i -> M,
indexed lexicographically over element tuples in canonical chain order, then
by coordinate.  `coboundary_matrix` materializes d^i as a sparse matrix.

For the dimensions themselves the cocycle spaces are computed from a smaller
but equivalent system.  If c = d^i f then d^{i+1} c = 0, and that identity
shows c(a h, ...) = a.c(h, ...) whenever c vanishes on tuples starting with
the generator a; so c = 0 as soon as c(s, ...) = 0 for every generator s.
Hence Z^i is cut out by the rows of d^i whose first argument is a generator.
Those rows say f(s x, rest) = s.f(x, rest) + (terms whose first argument is s),
so f is determined by its values on tuples starting with 1 or a generator,
propagated along a spanning tree of the Cayley graph; the remaining Cayley
edges and the tree's consistency give a small dense system.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import asdict, dataclass

import numpy as np
from scipy import sparse

from .gf import rank
from .modrep import LinearRepresentation
from .perm import GuardError

__all__ = [
    "CohomologyReport",
    "GroupData",
    "coboundary_matrix",
    "cohomology",
    "cocycle_dimension",
    "fixed_dimension",
    "vanishing_sweep",
    "SweepReport",
    "ORDER_GUARD",
    "DIM_GUARD",
]

ORDER_GUARD = 48
DIM_GUARD = 3


class GroupData:
    """Element list, multiplication table and matrices of a representation."""

    def __init__(self, rep: LinearRepresentation):
        G = rep.group
        if G.order() > ORDER_GUARD:
            raise GuardError("group order", ORDER_GUARD, G.order())
        if rep.n > DIM_GUARD:
            raise GuardError("dimension", DIM_GUARD, rep.n)
        self.l = rep.l
        self.n = rep.n
        self.elements = G.elements()
        self.size = len(self.elements)
        index = {g.images: i for i, g in enumerate(self.elements)}
        self.mul = np.array(
            [[index[(a * b).images] for b in self.elements] for a in self.elements], dtype=np.int64
        )
        self.mats = np.array([rep.array_of(g) for g in self.elements], dtype=np.int64).reshape(
            self.size, self.n, self.n
        )
        gens = [index[g.images] for g in G.generators if not g.is_identity()]
        self.gens = sorted(set(gens)) or [0]


def coboundary_matrix(rep: LinearRepresentation, i: int) -> sparse.csr_matrix:
    """d^i : C^i -> C^{i+1} over F_l as a sparse matrix, i in {0, 1, 2}."""
    if i not in (0, 1, 2):
        raise ValueError("degree must be 0, 1 or 2")
    D = GroupData(rep)
    return _coboundary(D, i)


def _coboundary(D: GroupData, i: int) -> sparse.csr_matrix:
    g, n, l = D.size, D.n, D.l
    rows, cols, vals = [], [], []

    def col_index(tup):
        k = 0
        for t in tup:
            k = k * g + t
        return k * n

    def add(r0, c0, block):
        for a in range(n):
            for b in range(n):
                v = int(block[a][b]) % l
                if v:
                    rows.append(r0 + a)
                    cols.append(c0 + b)
                    vals.append(v)

    ident = np.eye(n, dtype=np.int64)
    for tup in itertools.product(range(g), repeat=i + 1):
        r0 = col_index(tup)
        a = tup[0]
        # a . f(tail)
        add(r0, col_index(tup[1:]), D.mats[a])
        for j in range(i):
            merged = tup[:j] + (int(D.mul[tup[j], tup[j + 1]]),) + tup[j + 2:]
            add(r0, col_index(merged), ((-1) ** (j + 1)) * ident)
        add(r0, col_index(tup[:-1]), ((-1) ** (i + 1)) * ident)
    M = sparse.coo_matrix((vals, (rows, cols)), shape=(g ** (i + 1) * n, g**i * n), dtype=np.int64)
    # duplicate entries add up; reduce afterwards
    M = M.tocsr()
    M.data %= l
    M.eliminate_zeros()
    return M


def fixed_dimension(rep: LinearRepresentation) -> int:
    """dim of {x : rho(s) x = x for every generator s}."""
    n, l = rep.n, rep.l
    if not rep.images:
        return n
    stack = np.vstack([(m.array - np.eye(n, dtype=np.int64)) % l for m in rep.images])
    return n - rank(stack, l)


def cocycle_dimension(D: GroupData, i: int) -> int:
    """dim Z^i for i in {1, 2} via the generator-restricted system."""
    g, n, l = D.size, D.n, D.l
    tail = g ** (i - 1)          # number of trailing tuples
    block = tail * n             # size of one f(x, .) slice
    firsts = [0] + [s for s in D.gens if s != 0]
    slot = {x: k for k, x in enumerate(firsts)}
    V = len(firsts) * block

    def tail_index(tup):
        k = 0
        for t in tup:
            k = k * g + t
        return k

    tails = list(itertools.product(range(g), repeat=i - 1))

    def rest_terms(s: int) -> np.ndarray:
        # W[x][k*n:(k+1)*n, :] = sum of the terms of (d^i f)(s, x, tail_k) with first argument s
        W = np.zeros((g, block, V), dtype=np.int64)
        base = slot[s] * block
        for x in range(g):
            for tup in tails:
                full = (x,) + tup
                r0 = tail_index(tup) * n
                for j in range(1, i):
                    merged = full[: j - 1] + (int(D.mul[full[j - 1], full[j]]),) + full[j + 1:]
                    c0 = base + tail_index(merged) * n
                    W[x, r0:r0 + n, c0:c0 + n] += ((-1) ** (j + 1)) * np.eye(n, dtype=np.int64)
                c0 = base + tail_index(full[:-1]) * n
                W[x, r0:r0 + n, c0:c0 + n] += ((-1) ** (i + 1)) * np.eye(n, dtype=np.int64)
        return W % l

    gens = [s for s in D.gens]
    rest = {s: rest_terms(s) for s in gens}

    def act(s: int, E: np.ndarray) -> np.ndarray:
        # apply rho(s) to each n-block of the rows of E
        return np.einsum("ab,kbv->kav", D.mats[s], E.reshape(tail, n, V)).reshape(block, V) % l

    E: dict[int, np.ndarray] = {0: np.zeros((block, V), dtype=np.int64)}
    E[0][:, :block] = np.eye(block, dtype=np.int64)
    tree_edges = set()
    queue = [0]
    for x in queue:
        for s in gens:
            y = int(D.mul[s, x])
            if y not in E:
                # row = 0 means f(s x, .) = s.f(x, .) + rest
                E[y] = (act(s, E[x]) + rest[s][x]) % l
                tree_edges.add((s, x))
                queue.append(y)
    if len(E) != g:
        raise RuntimeError("generators do not reach every element")
    constraints = []
    for x in range(g):
        for s in gens:
            if (s, x) in tree_edges:
                continue
            y = int(D.mul[s, x])
            constraints.append((act(s, E[x]) + rest[s][x] - E[y]) % l)
    for s in firsts:
        if s == 0:
            continue
        sel = np.zeros((block, V), dtype=np.int64)
        sel[:, slot[s] * block:(slot[s] + 1) * block] = np.eye(block, dtype=np.int64)
        constraints.append((E[s] - sel) % l)
    if not constraints:
        return V
    C = np.vstack(constraints)
    C = C[np.any(C, axis=1)]
    return V - (rank(C, l) if C.size else 0)


@dataclass(frozen=True)
class CohomologyReport:
    l: int
    n: int
    order: int
    h0: int
    z1: int
    b1: int
    h1: int
    z2: int
    b2: int
    h2: int

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


def cohomology(rep: LinearRepresentation) -> CohomologyReport:
    D = GroupData(rep)
    n = rep.n
    h0 = fixed_dimension(rep)
    z1 = cocycle_dimension(D, 1)
    b1 = n - h0
    z2 = cocycle_dimension(D, 2)
    b2 = D.size * n - z1
    report = CohomologyReport(rep.l, n, D.size, h0, z1, b1, z1 - b1, z2, b2, z2 - b2)
    if report.h1 < 0 or report.h2 < 0:
        raise RuntimeError(f"negative cohomology dimension: {report}")
    return report


@dataclass
class SweepReport:
    reports: list[tuple[tuple[int, int], LinearRepresentation, CohomologyReport]]
    violations: list[str]

    @property
    def ok(self) -> bool:
        return not self.violations


def vanishing_sweep(candidates) -> SweepReport:
    """Check H^1 = H^2 = 0 for faithful simple modules of solvable groups.

    `candidates` maps (n, l) to the output of irreducible_solvable_subgroups.
    Candidates whose group exceeds the cohomology guard are skipped.
    """
    from .modrep import is_faithful, is_simple
    from .perm import is_solvable

    reports, violations = [], []
    for key, reps in candidates.items():
        for rep in reps:
            if rep.group.order() > ORDER_GUARD:
                continue
            if not (is_faithful(rep) and is_simple(rep) and is_solvable(rep.group)):
                violations.append(f"{key}: candidate of order {rep.group.order()} fails the preconditions")
                continue
            rpt = cohomology(rep)
            reports.append((key, rep, rpt))
            if rpt.h1 or rpt.h2:
                violations.append(
                    f"theorem contradiction at (n,l)={key}, |G|={rpt.order}: h1={rpt.h1}, h2={rpt.h2}"
                )
    return SweepReport(reports, violations)
