# Primitivity two ways: block systems, and maximality of a point stabilizer.
from primex.blocks import block_system, is_primitive
from primex.fixtures import FIXTURES
from primex.perm import is_maximal, point_stabilizer

# The square's symmetry group D4 keeps the diagonals {0,2} and {1,3} together.
D4 = FIXTURES["D4"]
print("D4 block system through 0 and 2:", [sorted(p) for p in block_system(D4, 0, 2).parts])
print("D4 primitive?", is_primitive(D4))

# A4 on four points has no such partition: every pair generates the whole set.
A4 = FIXTURES["A4"]
print("A4 block through 0 and 1:", [sorted(p) for p in block_system(A4, 0, 1).parts])

# The same verdict from the subgroup lattice: a transitive group is primitive
# exactly when the stabilizer of a point is a maximal subgroup.
print(f"{'group':8} {'order':>5} {'primitive':>10} {'stab maximal':>13}")
for name in ["C4", "V4", "D4", "A4", "S4", "D5", "F20", "C6", "D6", "S4on6", "PGL25"]:
    G = FIXTURES[name]
    print(f"{name:8} {G.order():5d} {str(is_primitive(G)):>10} {str(is_maximal(G, point_stabilizer(G, 0))):>13}")
