# A solvable primitive group is a group of affine maps in disguise.
import random

from primex.affine import recover_affine
from primex.classify import solvable_primitive_groups
from primex.perm import Permutation, PermutationGroup

# Take the first of the three degree-9 groups of order 72 and scramble its point labels.
entry = next(e for e in solvable_primitive_groups(3, 2) if e.order == 72)
rng = random.Random(1)
sigma = list(range(9))
rng.shuffle(sigma)
s = Permutation(sigma)
G = PermutationGroup([s * g * s.inverse() for g in entry.group.generators])
print("scrambled generators:", [g.images for g in G.generators])

# recover_affine finds the regular normal subgroup of translations, uses it to put
# coordinates on the nine points, and reads off each generator as x -> Ax + b.
structure, maps = recover_affine(G)
print("field F_%d, dimension %d, origin at point %d" % (structure.l, structure.n, structure.origin))
for point, label in enumerate(structure.labels):
    print(f"  point {point} = {label}")
for g, amap in maps.items():
    print("generator", g.images, "acts as A =", amap.matrix.to_list(), "b =", amap.offset)

# Every group element, not only the generators, passes the affine check.
print("all", G.order(), "elements affine:", all(structure.affine_map(g) for g in G.elements()))
