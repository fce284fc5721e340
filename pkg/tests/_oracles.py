"""Shared oracle helpers: independent brute-force constructions that the
fast paths are checked against."""
from __future__ import annotations

from beauville.groups import brute_conjugacy_partition


def fingerprint_partition(G, elements=None):
    if elements is None:
        elements = list(G.elements())
    parts = {}
    for m in elements:
        parts.setdefault(G.fingerprint(m), set()).add(m)
    return {frozenset(v) for v in parts.values()}


def brute_partition(G, elements=None):
    return {frozenset(c) for c in brute_conjugacy_partition(G, elements)}


def subfield_elements(G, d):
    F = G.field
    return [a for a in F.elements() if F.frobenius(a, d) == a]


def random_subfield_sl2(G, d, rng):
    """Uniform-ish element of the standard PSL2(p^d) subgroup."""
    F = G.field
    sub = subfield_elements(G, d)
    while True:
        a, b, c = rng.choice(sub), rng.choice(sub), rng.choice(sub)
        if a == 0:
            continue
        dd = F.mul(F.inv(a), F.add(1, F.mul(b, c)))
        return G._canon((a, b, c, dd))


def random_twisted_pgl(G, d, rng):
    """Element of the PGL2(p^d) outer coset lifted into SL2(q): a subfield
    matrix with nonsquare-in-subfield determinant, scaled by 1/sqrt(det)."""
    F = G.field
    sub = subfield_elements(G, d)
    q1 = G.p**d
    while True:
        a, b, c, dd = (rng.choice(sub) for _ in range(4))
        det = F.sub(F.mul(a, dd), F.mul(b, c))
        if det == 0 or F.pow(det, (q1 - 1) // 2) == 1:
            continue
        s = F.sqrt(det)
        if s is None:
            continue
        si = F.inv(s)
        return G._canon((F.mul(a, si), F.mul(b, si), F.mul(c, si), F.mul(dd, si)))


def crafted_psl2_pairs(G, rng, n_random=300, n_special=40):
    """Random pairs plus directed coverage of every Dickson class."""
    F = G.field
    pairs = [(G.random_element(rng), G.random_element(rng))
             for _ in range(n_random)]
    for _ in range(n_special):
        x = G._canon((1, F.random(rng), 0, 1))
        t = 0
        while t == 0:
            t = F.random(rng)
        y = G._canon((t, F.random(rng), 0, F.inv(t)))
        pairs.append((x, y))
    invs = [m for m in G.elements() if G.order_of(m) == 2]
    for _ in range(n_special):
        pairs.append((rng.choice(invs), rng.choice(invs)))
    if G.e > 1:
        for d in (dd for dd in range(1, G.e) if G.e % dd == 0):
            for _ in range(n_special):
                pairs.append((random_subfield_sl2(G, d, rng),
                              random_subfield_sl2(G, d, rng)))
            if (G.e // d) % 2 == 0 and G.p != 2:
                for _ in range(n_special):
                    a = random_twisted_pgl(G, d, rng)
                    b = rng.choice([random_twisted_pgl(G, d, rng),
                                    random_subfield_sl2(G, d, rng)])
                    pairs.append((a, b))
    for k in (2, 3, 4, 5):
        try:
            mk = G.element_of_order(k)
        except Exception:
            continue
        for _ in range(n_special // 2):
            pairs.append((mk, G.conjugate(G.random_element(rng), mk)))
    return pairs
