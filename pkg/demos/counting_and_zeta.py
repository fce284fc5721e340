"""Class-algebra counting and the Witten zeta function.

N_{X,Y,Z}, the number of solutions of x*y*z = 1 with each factor in a
prescribed conjugacy class, equals |X||Y||Z|/|G| times the character sum
over Irr(G) of chi(x)chi(y)chi(z)/chi(1).  The trivial character
contributes |X||Y||Z|/|G|; the remainder is controlled by the Witten zeta
function zeta(s) = sum of chi(1)^(-s), which tends to 1 for s > 1 as the
group grows.
"""
from beauville import (character_table, conjugacy_classes,
                       frobenius_count_brute, frobenius_count_character,
                       parse_group, witten_zeta)

G = parse_group("alt:5")
part = conjugacy_classes(G)
table = character_table(part)
print("A5 classes (order, size):",
      [(c.element_order, c.size) for c in part.classes])
print("A5 character degrees:", table.degrees)

i = next(c.index for c in part.classes if c.size == 20)  # order-3 class
brute = frobenius_count_brute(part, i, i, i)
char = frobenius_count_character(table, i, i, i)
trivial = part.classes[i].size ** 3 / G.order
print(f"N(3a,3a,3a): brute = {brute}, character sum = {char}, "
      f"trivial term = {trivial:.1f}")

print()
print("zeta(2) across PSL2(q) (tends to 1 as the group grows):")
for descriptor in ("psl2:5", "psl2:7", "psl2:3^2", "psl2:11", "psl2:13",
                   "psl2:17", "psl2:19"):
    g = parse_group(descriptor)
    t = character_table(g)
    print(f"  {descriptor:9s} |G| = {g.order:5d} degrees = {t.degrees}  "
          f"zeta(2) = {witten_zeta(t.degrees, 2):.5f}")
