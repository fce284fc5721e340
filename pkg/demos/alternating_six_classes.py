"""Almost-homogeneous class selection in alternating groups.

For six requested element orders, pick six shapes (m^k, 1^f) -- k cycles
of length m plus f fixed points -- all even, with pairwise distinct
fixed-point counts.  A nontrivial power of such a permutation keeps its
fixed points, so classes with different f can never share power classes:
condition (iii) holds for any triples drawn from them.
"""
from beauville import (AlternatingGroup, construct_almost_homogeneous,
                       find_generating_triple, select_six_shapes,
                       verify_quadruple)
from beauville.perms import format_shape

n = 44
orders = (2, 3, 7, 5, 5, 5)
shapes = select_six_shapes(n, orders)
print(f"n = {n}, requested orders {orders}:")
for m, k, f in shapes:
    g = construct_almost_homogeneous(n, m, f)
    print(f"  shape {format_shape(m, k, f):12s} order {m}, {f} fixed points")

G = AlternatingGroup(12)
tri1 = find_generating_triple(G, 5, 5, 5, seed=3)
tri2 = find_generating_triple(G, 4, 6, 9, seed=3)
report = verify_quadruple(G, tri1.x, tri1.y, tri2.x, tri2.y)
print()
print(f"A_12 quadruple of types {report.type1} x {report.type2}: "
      f"Beauville = {report.ok}")
print("  x1 =", G.format_element(tri1.x))
print("  y1 =", G.format_element(tri1.y))
print("  x2 =", G.format_element(tri2.x))
print("  y2 =", G.format_element(tri2.y))
