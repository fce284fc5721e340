"""Alternating and symmetric groups on n points.

Permutations are tuples ``img`` of length n over 0..n-1 with ``img[i]`` the
image of i; composition is ``(a*b)[i] = a[b[i]]`` (apply b first), matching
the matrix convention of the PSL2 realization.  Text encoding is 1-based
cycle notation ``(1 2 3)(4 5)`` with ``()`` for the identity.

Generation testing goes through a deterministic Schreier-Sims base and
strong generating set; the BFS closure stays available as the brute oracle
for small n.  Conjugacy fingerprints are cycle types, refined by the parity
discriminator on the types (all cycle lengths odd and distinct) whose S_n
class splits into two A_n classes.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .groups import Group, GroupError, HandleMismatch


# ---------------------------------------------------------------------------
# raw permutation arithmetic
# ---------------------------------------------------------------------------

def perm_identity(n: int) -> tuple[int, ...]:
    return tuple(range(n))


def perm_mul(a, b):
    """Composition: apply b first, then a."""
    return tuple(a[x] for x in b)


def perm_inv(a):
    n = len(a)
    out = [0] * n
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def cycles_of(a) -> list[list[int]]:
    """Cycle decomposition including fixed points, each cycle starting at
    its smallest point, cycles ordered by that point."""
    n = len(a)
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        x = a[start]
        while x != start:
            cyc.append(x)
            seen[x] = True
            x = a[x]
        out.append(cyc)
    return out


def cycle_type(a) -> tuple[int, ...]:
    """Multiset of cycle lengths including fixed points, sorted descending."""
    return tuple(sorted((len(c) for c in cycles_of(a)), reverse=True))


def parity(a) -> int:
    """0 for even, 1 for odd."""
    return (len(a) - len(cycles_of(a))) % 2


def perm_order(a) -> int:
    return math.lcm(*(len(c) for c in cycles_of(a)))


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    text = text.strip()
    if text in ("()", ""):
        return perm_identity(n)
    img = list(range(n))
    touched = set()
    depth_chunks = [c for c in text.replace(")(", ")|(").split("|")]
    for chunk in depth_chunks:
        chunk = chunk.strip()
        if not (chunk.startswith("(") and chunk.endswith(")")):
            raise GroupError(f"malformed cycle notation {text!r}")
        body = chunk[1:-1].replace(",", " ").split()
        try:
            pts = [int(s) - 1 for s in body]
        except ValueError as exc:
            raise GroupError(f"malformed cycle notation {text!r}") from exc
        if any(p < 0 or p >= n for p in pts):
            raise GroupError(f"point out of range 1..{n} in {text!r}")
        if len(set(pts)) != len(pts) or touched & set(pts):
            raise GroupError(f"repeated point in {text!r}")
        touched |= set(pts)
        for i, p in enumerate(pts):
            img[p] = pts[(i + 1) % len(pts)]
    return tuple(img)


def format_cycles(a) -> str:
    parts = []
    for cyc in cycles_of(a):
        if len(cyc) > 1:
            parts.append("(" + " ".join(str(p + 1) for p in cyc) + ")")
    return "".join(parts) if parts else "()"


# ---------------------------------------------------------------------------
# Schreier-Sims
# ---------------------------------------------------------------------------

class BSGS:
    """Base and strong generating set for a permutation group.

    Deterministic construction; ``order`` is the product of the basic orbit
    lengths and ``contains`` sifts against the transversals.
    """

    def __init__(self, gens, n: int):
        self.n = n
        self.e = perm_identity(n)
        gens = [tuple(g) for g in gens]
        self.base: list[int] = []
        self.level_gens: list[list[tuple[int, ...]]] = []
        self.transversals: list[dict[int, tuple[int, ...]]] = []
        gens = [g for g in gens if g != self.e]
        for g in gens:
            self._ensure_base_point(g)
        self.level_gens = [[] for _ in self.base]
        self.transversals = [{} for _ in self.base]
        if gens:
            self.level_gens[0] = list(gens)
            self._schreier_sims()

    @property
    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= max(1, len(t))
        return n

    def contains(self, g) -> bool:
        residue, level = self._sift(tuple(g), 0)
        return residue == self.e and level == len(self.base)

    def strong_generators(self):
        return [g for lvl in self.level_gens for g in lvl]

    # -- internals ----------------------------------------------------------

    def _ensure_base_point(self, g):
        if any(g[b] != b for b in self.base):
            return
        self.base.append(next(p for p in range(self.n) if g[p] != p))

    def _gens_at(self, i):
        return [g for lvl in self.level_gens[i:] for g in lvl]

    def _orbit(self, i):
        beta = self.base[i]
        gens = self._gens_at(i)
        orbit = {beta: self.e}
        frontier = [beta]
        while frontier:
            nxt = []
            for p in frontier:
                u = orbit[p]
                for g in gens:
                    q = g[p]
                    if q not in orbit:
                        orbit[q] = perm_mul(g, u)
                        nxt.append(q)
            frontier = nxt
        self.transversals[i] = orbit

    def _sift(self, g, start):
        for i in range(start, len(self.base)):
            p = g[self.base[i]]
            if p == self.base[i]:
                continue
            t = self.transversals[i]
            if p not in t:
                return g, i
            g = perm_mul(perm_inv(t[p]), g)
        return g, len(self.base)

    def _schreier_sims(self):
        i = len(self.base) - 1
        while i >= 0:
            added_at = self._process_level(i)
            i = added_at if added_at is not None else i - 1

    def _process_level(self, i):
        self._orbit(i)
        orbit = self.transversals[i]
        gens = self._gens_at(i)
        for p, u_p in list(orbit.items()):
            for g in gens:
                q = g[p]
                s = perm_mul(perm_inv(orbit[q]), perm_mul(g, u_p))
                if s == self.e:
                    continue
                residue, j = self._sift(s, i + 1)
                if residue == self.e and j == len(self.base):
                    continue
                if j == len(self.base):
                    self._ensure_base_point(residue)
                    self.level_gens.append([])
                    self.transversals.append({})
                self.level_gens[j].append(residue)
                return j
        return None


def schreier_sims(gens, n: int) -> BSGS:
    return BSGS(gens, n)


# ---------------------------------------------------------------------------
# the group handles
# ---------------------------------------------------------------------------

class _PermGroupBase(Group):
    def __init__(self, n: int):
        if n < 3:
            raise GroupError("permutation realizations need n >= 3")
        self.n = n

    def identity(self):
        return perm_identity(self.n)

    def multiply(self, a, b):
        return perm_mul(a, b)

    def inverse(self, a):
        return perm_inv(a)

    def order_of(self, a):
        return perm_order(a)

    def parse_element(self, text):
        g = parse_cycles(text, self.n)
        self.check_element(g)
        return g

    def format_element(self, a):
        return format_cycles(a)

    def _check_shape(self, a):
        if (not isinstance(a, tuple) or len(a) != self.n
                or sorted(a) != list(range(self.n))):
            raise HandleMismatch(f"{a!r} is not a permutation of {self.n} points")


class AlternatingGroup(_PermGroupBase):
    kind = "alternating"

    def __init__(self, n: int):
        super().__init__(n)
        self.order = math.factorial(n) // 2

    def descriptor(self):
        return f"alt:{self.n}"

    def check_element(self, a):
        self._check_shape(a)
        if parity(a) != 0:
            raise HandleMismatch(
                f"odd permutation {format_cycles(a)} passed to {self.descriptor()}")

    def generates(self, x, y):
        return BSGS([x, y], self.n).order == self.order

    def fingerprint(self, a):
        ct = cycle_type(a)
        if len(set(ct)) == len(ct) and all(l % 2 == 1 for l in ct):
            # S_n class splits into two A_n classes; the parity of any
            # conjugator onto the canonical layout discriminates (the
            # centralizer is generated by the odd-length cycles, hence even).
            return ("c",) + ct + ("s", _canonical_conjugator_parity(a))
        return ("c",) + ct

    def iter_elements(self):
        from itertools import permutations
        return (g for g in permutations(range(self.n)) if parity(g) == 0)

    def random_element(self, rng):
        g = list(range(self.n))
        rng.shuffle(g)
        g = tuple(g)
        if parity(g) != 0:
            # post-compose with the transposition (0 1); 2-to-1 onto A_n
            g = tuple(x if x > 1 else 1 - x for x in g)
        return g

    def element_of_order(self, k):
        part = even_order_partition(self.n, k)
        if part is None:
            raise GroupError(
                f"no even permutation of order {k} on {self.n} points")
        return permutation_of_shape(self.n, part)


class SymmetricGroup(_PermGroupBase):
    kind = "symmetric"

    def __init__(self, n: int):
        super().__init__(n)
        self.order = math.factorial(n)

    def descriptor(self):
        return f"sym:{self.n}"

    def check_element(self, a):
        self._check_shape(a)

    def generates(self, x, y):
        return BSGS([x, y], self.n).order == self.order

    def fingerprint(self, a):
        return ("c",) + cycle_type(a)

    def iter_elements(self):
        from itertools import permutations
        return iter(permutations(range(self.n)))

    def random_element(self, rng):
        g = list(range(self.n))
        rng.shuffle(g)
        return tuple(g)


def _canonical_conjugator_parity(a) -> int:
    # lay out the cycles by increasing length (lengths are distinct here);
    # the permutation sending that layout to 0..n-1 conjugates a onto the
    # canonical representative of its type
    cyc = sorted(cycles_of(a), key=len)
    word = [p for c in cyc for p in c]
    g = [0] * len(a)
    for i, p in enumerate(word):
        g[p] = i
    return parity(tuple(g))


# ---------------------------------------------------------------------------
# almost homogeneous classes
# ---------------------------------------------------------------------------

def permutation_of_shape(n: int, lengths) -> tuple[int, ...]:
    """Cycles of the given lengths laid out left to right on 0..n-1."""
    if sum(lengths) > n:
        raise GroupError(f"shape {lengths} does not fit on {n} points")
    img = list(range(n))
    pos = 0
    for length in lengths:
        for i in range(length):
            img[pos + i] = pos + (i + 1) % length
        pos += length
    return tuple(img)


def construct_almost_homogeneous(n: int, m: int, f: int) -> tuple[int, ...]:
    """An even permutation of cycle shape (m^k, 1^f) on n points.

    Requires m >= 2, n = m*k + f with k >= 1, and even parity (m-1)*k.
    """
    if m < 2:
        raise GroupError("cycle length m must be >= 2")
    if f < 0 or (n - f) % m != 0:
        raise GroupError(
            f"no shape ({m}^k, 1^{f}) on {n} points: n - f = {n - f} "
            f"is not a positive multiple of {m}")
    k = (n - f) // m
    if k < 1:
        raise GroupError(f"shape ({m}^k, 1^{f}) on {n} points needs k >= 1")
    if ((m - 1) * k) % 2 != 0:
        raise GroupError(
            f"shape ({m}^{k}, 1^{f}) is odd: parity (m-1)*k = {(m - 1) * k}")
    return permutation_of_shape(n, [m] * k)


def format_shape(m: int, k: int, f: int) -> str:
    parts = [f"{m}^{k}"]
    if f:
        parts.append(f"1^{f}")
    return ",".join(parts)


def select_six_shapes(n: int, orders) -> list[tuple[int, int, int]]:
    """Six even almost-homogeneous shapes (m, k, f) with the requested
    element orders and pairwise distinct fixed-point counts.

    For each order the smallest feasible f congruent to n mod order is
    taken, bumping by the order until the parity is even and f is unused;
    distinct f values make the classes (and their nontrivial powers)
    pairwise non-conjugate.  Raises with the smallest feasible n' when n is
    too small.
    """
    orders = list(orders)
    if len(orders) != 6 or any(o < 2 for o in orders):
        raise GroupError("need six cycle orders, all >= 2")
    result = _try_six_shapes(n, orders)
    if result is not None:
        return result
    for n2 in range(n + 1, n + 4 * max(orders) * len(orders) + 16):
        if _try_six_shapes(n2, orders) is not None:
            raise GroupError(
                f"n = {n} infeasible for orders {tuple(orders)}; "
                f"smallest feasible n is {n2}")
    raise GroupError(f"n = {n} infeasible for orders {tuple(orders)}")


def _try_six_shapes(n, orders):
    used_f = set()
    shapes = []
    for m in orders:
        f = n % m
        while True:
            k = (n - f) // m
            if k < 1:
                return None
            if ((m - 1) * k) % 2 == 0 and f not in used_f:
                break
            f += m
        used_f.add(f)
        shapes.append((m, k, f))
    return shapes


@lru_cache(maxsize=None)
def even_order_partition(n: int, k: int) -> tuple[int, ...] | None:
    """A multiset of cycle lengths > 1 with lcm exactly k, total at most n,
    and even total parity; None when no even permutation of order k exists
    on n points."""
    if k == 1:
        return ()
    divs = [d for d in range(2, k + 1) if k % d == 0]

    best: list[tuple[int, ...] | None] = [None]

    def search(idx, remaining, lcm, parts, par):
        if best[0] is not None:
            return
        if lcm == k and par == 0:
            best[0] = tuple(parts)
            return
        if idx >= len(divs):
            return
        d = divs[idx]
        max_copies = remaining // d
        for copies in range(max_copies, -1, -1):
            search(idx + 1, remaining - copies * d,
                   math.lcm(lcm, d) if copies else lcm,
                   parts + [d] * copies,
                   (par + copies * (d - 1)) % 2)
            if best[0] is not None:
                return

    search(0, n, 1, [], 0)
    return best[0]
