# Complements to the translation subgroup: all of them, and their conjugacy classes.
from primex.classify import solvable_primitive_groups
from primex.cohomology import cohomology
from primex.extensions import complement_classes, complements, extension, semidirect
from primex.fixtures import FIXTURES
from primex.perm import PermutationGroup

# In S4 the point stabilizers are the four complements to V4, all conjugate.
V4 = PermutationGroup([[1, 0, 3, 2], [2, 3, 0, 1]])
E = extension(FIXTURES["S4"], V4)
for H in complements(E):
    print("complement fixing", [p for p in range(4) if all(h(p) == p for h in H.generators)])
print("classes:", complement_classes(E))

# A non-faithful action gives more classes: V4 over one of its C2 factors.
E = extension(V4, PermutationGroup([[1, 0, 3, 2]]))
print("V4 over C2:", len(complements(E)), "complements in", complement_classes(E), "classes")

# For the primitive groups the count is always l^(n - h0) and there is one class.
for l, n in [(2, 2), (2, 3), (3, 2)]:
    for e in solvable_primitive_groups(l, n):
        if e.order > 200:
            continue
        E = semidirect(e.rep)
        h0 = cohomology(E.induced).h0
        print(f"{e.label:10} |L|={e.order:3d} complements={len(complements(E)):2d} l^(n-h0)={l ** (n - h0):2d} classes={complement_classes(E)}")
