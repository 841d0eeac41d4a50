# Modules over F_l from conjugation, and the vanishing of their cohomology.
from primex.cohomology import cohomology, coboundary_matrix
from primex.fixtures import FIXTURES
from primex.modrep import idempotent_split, irreducible_solvable_subgroups, is_faithful, is_simple, module_from_conjugation
from primex.perm import PermutationGroup

# S4 acts on its normal Klein group V4 = F_2^2 by conjugation, through S4/V4 = S3.
V4 = PermutationGroup([[1, 0, 3, 2], [2, 3, 0, 1]])
quotient, rep = module_from_conjugation(FIXTURES["S4"], V4)
print("quotient order", quotient.order(), "matrices", [m.to_list() for m in rep.images])
print("simple:", is_simple(rep), "faithful:", is_faithful(rep))

# The normal 3-subgroup acts without fixed vectors: the averaging idempotent r_N kills
# everything and 1 - r_N is the identity.
A3 = PermutationGroup([g for g in quotient.elements() if g.order() == 3][:1])
r_img, s_img = idempotent_split(rep, A3, 3)
print("dim r_N M =", r_img.dim, " dim (1-r_N) M =", s_img.dim)

# Cohomology from bar cochains.  d^1 is a sparse matrix over F_2.
d1 = coboundary_matrix(rep, 1)
print("d^1 has shape", d1.shape, "and", d1.nnz, "nonzero entries")
print(cohomology(rep).to_json())

# Every faithful simple module of a solvable group in small GL(n, l): H^1 = H^2 = 0.
for n, l in [(1, 5), (2, 2), (2, 3), (3, 2)]:
    for r in irreducible_solvable_subgroups(n, l):
        if r.group.order() <= 48:
            c = cohomology(r)
            print(f"GL({n},{l}) subgroup of order {c.order:2d}: h0={c.h0} h1={c.h1} h2={c.h2}")
