import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from primex.fixtures import FIXTURES
from primex.gf import FlMatrix, Subspace, all_vectors, index_to_vector, nullspace, prime_power, rank, vector_to_index
from primex.modrep import (
    LinearRepresentation,
    clifford_restriction_semisimple,
    gl_group,
    idempotent_split,
    invariant_subspaces,
    irreducible_solvable_subgroups,
    is_faithful,
    is_simple,
    matrix_to_perm,
    minimal_normal_subgroup,
    module_from_conjugation,
    perm_to_matrix,
)
from primex.perm import PermutationGroup, is_normal

V4 = PermutationGroup([[1, 0, 3, 2], [2, 3, 0, 1]])


def span_size(rows, l):
    """|row space| by summing every coefficient combination."""
    rows = [np.asarray(r) for r in rows]
    n = len(rows[0])
    return len({tuple(sum(c * r for c, r in zip(cs, rows)) % l) if rows else (0,) * n
                for cs in itertools.product(range(l), repeat=len(rows))})


@settings(max_examples=50, deadline=None)
@given(
    st.sampled_from([2, 3, 5]),
    st.integers(1, 3),
    st.integers(1, 4),
    st.data(),
)
def test_rank_and_nullspace(l, rows, cols, data):
    A = np.array(data.draw(st.lists(st.lists(st.integers(0, l - 1), min_size=cols, max_size=cols),
                                    min_size=rows, max_size=rows)))
    r = rank(A, l)
    assert l**r == span_size(list(A), l)
    N = nullspace(A, l)
    assert N.shape[0] == cols - r
    assert not ((A @ N.T) % l).any()


def test_vector_index_round_trip():
    for i in range(27):
        assert vector_to_index(index_to_vector(i, 3, 3), 3) == i
    assert len(set(all_vectors(2, 3))) == 8
    assert prime_power(9) == (3, 2)
    assert prime_power(12) is None


def test_matrix_inverse():
    M = FlMatrix(3, [[1, 2], [0, 2]])
    assert (M @ M.inverse()).is_identity()
    assert not FlMatrix(2, [[1, 1], [1, 1]]).is_invertible()


def test_subspace_canonical_basis():
    a = Subspace.span(2, 3, [[1, 1, 0], [0, 1, 1]])
    b = Subspace.span(2, 3, [[1, 0, 1], [1, 1, 0]])
    assert a == b
    assert a.dim == 2
    assert (a + Subspace.span(2, 3, [[0, 0, 1]])).dim == 3
    assert len(list(a.vectors())) == 4


def brute_invariant(l, n, mats):
    found = set()
    vecs = all_vectors(l, n)
    for k in range(n + 1):
        for combo in itertools.combinations(vecs, k):
            S = Subspace.span(l, n, np.array(combo).reshape(k, n)) if k else Subspace.zero(l, n)
            if S.is_invariant(mats):
                found.add(S.basis)
    return found


@pytest.mark.parametrize("n, l", [(2, 2), (1, 3), (1, 5), (2, 3), (3, 2)])
def test_irreducible_candidates_have_no_invariant_subspaces(n, l):
    for rep in irreducible_solvable_subgroups(n, l):
        assert brute_invariant(l, n, rep.images) == {Subspace.zero(l, n).basis, Subspace.full(l, n).basis}


def test_invariant_subspaces_against_brute_force():
    rep = LinearRepresentation(3, 2, PermutationGroup([[1, 0]]), [FlMatrix(3, [[1, 0], [0, 2]])])
    got = {S.basis for S in invariant_subspaces(rep)}
    assert got == brute_invariant(3, 2, rep.images)
    assert len(got) == 4


def test_gl2_2_classes_are_c3_and_s3():
    reps = irreducible_solvable_subgroups(2, 2)
    assert [r.group.order() for r in reps] == [3, 6]
    assert not reps[1].group.is_abelian()


@pytest.mark.parametrize(
    "n, l, orders",
    [
        (1, 2, [1]),
        (1, 3, [1, 2]),
        (1, 5, [1, 2, 4]),
        (2, 3, [4, 8, 8, 8, 16, 24, 48]),
        (3, 2, [7, 21]),
    ],
)
def test_irreducible_solvable_orders(n, l, orders):
    assert [r.group.order() for r in irreducible_solvable_subgroups(n, l)] == orders


def test_gl_orders_and_matrix_round_trip():
    assert gl_group(2, 3).order() == 48
    assert gl_group(3, 2).order() == 168
    M = FlMatrix(3, [[0, 2], [1, 1]])
    assert perm_to_matrix(matrix_to_perm(M), 3, 2) == M


def test_homomorphism_check():
    C3 = PermutationGroup([[1, 2, 0]])
    assert LinearRepresentation(2, 2, C3, [FlMatrix(2, [[0, 1], [1, 1]])]).group.order() == 3
    # a swap has order 2, so it cannot represent a 3-cycle
    with pytest.raises(ValueError):
        LinearRepresentation(2, 2, C3, [FlMatrix(2, [[0, 1], [1, 0]])])


def test_conjugation_module_of_s4_on_v4():
    quotient, rep = module_from_conjugation(FIXTURES["S4"], V4)
    assert quotient.order() == 6
    assert (rep.l, rep.n) == (2, 2)
    assert is_simple(rep)
    assert is_faithful(rep)
    _, rep_d4 = module_from_conjugation(FIXTURES["D4"], PermutationGroup([[2, 3, 0, 1]]))
    assert rep_d4.n == 1


def test_minimal_normal_subgroup():
    assert minimal_normal_subgroup(FIXTURES["S4"]).order() == 4
    assert minimal_normal_subgroup(FIXTURES["F20"]).order() == 5
    with pytest.raises(ValueError):
        minimal_normal_subgroup(FIXTURES["S5"])


def s3_natural():
    # S3 = GL(2,2) acting on F_2^2; A3 generated by the order 3 element
    S3 = PermutationGroup([[1, 0, 2], [1, 2, 0]])
    rep = LinearRepresentation(2, 2, S3, [FlMatrix(2, [[0, 1], [1, 0]]), FlMatrix(2, [[0, 1], [1, 1]])])
    return S3, rep, PermutationGroup([[1, 2, 0]])


def test_idempotent_split_s3():
    S3, rep, A3 = s3_natural()
    r_img, s_img = idempotent_split(rep, A3, 3)
    assert r_img.dim == 0
    assert s_img == Subspace.full(2, 2)
    with pytest.raises(ValueError):
        idempotent_split(rep, PermutationGroup([[1, 0, 2]]), 2)


def test_idempotent_split_trivial_action_fixes_everything():
    # the order 3 subgroup acting trivially: r = 1
    C3 = PermutationGroup([[1, 2, 0]])
    rep = LinearRepresentation(2, 2, C3, [FlMatrix.identity(2, 2)])
    r_img, s_img = idempotent_split(rep, C3, 3)
    assert r_img.dim == 2 and s_img.dim == 0


def test_clifford_restrictions_are_semisimple():
    S3, rep, A3 = s3_natural()
    assert clifford_restriction_semisimple(rep, A3)
    for n, l in [(2, 3), (3, 2)]:
        for r in irreducible_solvable_subgroups(n, l):
            G = r.group
            normals = [H for H in [G] + [PermutationGroup([g], degree=G.degree) for g in G.elements()]
                       if is_normal(H, G)]
            assert all(clifford_restriction_semisimple(r, H) for H in normals)
