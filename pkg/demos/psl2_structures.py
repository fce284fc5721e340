"""Beauville structures in PSL2(q) from the trace machinery.

For q > 7 the group always admits structures pairing the split-order type
((q-1)/d repeated) against the nonsplit-order type ((q+1)/d repeated),
d = gcd(2, q-1): the order products are coprime, so the power-class sets
cannot meet.  Each triple is built constructively: pick traces whose
semisimple order is exact, solve for matrices with those traces and
product one, and confirm full generation with the subgroup classifier.
"""
from beauville import PSL2, parse_group, search_structure, verify_quadruple

for descriptor in ("psl2:2^3", "psl2:3^2", "psl2:11", "psl2:13", "psl2:17",
                   "psl2:19", "psl2:5^2", "psl2:29"):
    G = parse_group(descriptor)
    out = search_structure(G, "macbeath")
    r = out.report
    print(f"{descriptor:10s} |G| = {G.order:7d}  "
          f"types {r.type1} x {r.type2}  "
          f"quad = {[G.format_element(m) for m in out.quadruple]}")

print()
print("targeted types for PSL2(11) and PSL2(13):")
for descriptor, t1, t2 in (("psl2:11", (5, 5, 5), (6, 6, 6)),
                           ("psl2:11", (5, 5, 5), (6, 6, 11)),
                           ("psl2:13", (6, 6, 6), (7, 7, 7))):
    G = parse_group(descriptor)
    out = search_structure(G, "macbeath", target_types=(t1, t2))
    assert verify_quadruple(G, *out.quadruple).ok
    print(f"  {descriptor} admits type ({t1}, {t2})")

print()
print("PSL2(5) = A5 is the lone exception among q >= 4:")
from beauville import exact_probability_exhaustive
print("  exact P(PSL2(5)) =", exact_probability_exhaustive(PSL2(5)))
print("  exact P(PSL2(7)) =", exact_probability_exhaustive(PSL2(7)))
