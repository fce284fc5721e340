"""PSL2(q) as projective 2x2 matrices over GF(q).

Element payloads are 4-tuples ``(a, b, c, d)`` of field-encoded entries of
an SL2 representative with det 1, canonicalized between the pair {M, -M}:
the first nonzero entry in scan order (a, b, c, d) is the smaller of
{v, -v} under the integer encoding order.  Identical group elements
therefore have bit-identical payloads, which makes them hashable and fast
to compare in closures and class maps.

Orders, split/non-split/unipotent classification, conjugacy fingerprints
and the two-generator subgroup classifier all work through traces; an
element of trace a (a != +-2) is semisimple with eigenvalue ratio of
multiplicative order determined by a, so its projective order is the least
k with V_k(a) = +-2, where V is the Lucas sequence V_0 = 2, V_1 = a,
V_{k+1} = a*V_k - V_{k-1} (the trace of the k-th power).

Matrix text encoding: ``[[a,b],[c,d]]`` with field-element encodings;
either lift of a projective element is accepted.
"""
from __future__ import annotations

import logging
import math
from dataclasses import dataclass

from .fields import gf
from .groups import Group, GroupError, HandleMismatch, closure
from .numutil import prime_factors

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SubgroupClass:
    """Dickson class of a two-generated subgroup of PSL2(q).

    kind is one of 'structural' (inside a Borel, or cyclic), 'dihedral',
    'a4', 's4', 'a5', 'subfield', 'full'.  For subfield subgroups the
    group is PSL2(p**degree) or PGL2(p**degree) up to conjugacy;
    subfield_kind is 'psl', 'pgl' or 'unknown' when the cheap
    discriminators cannot tell.
    """

    kind: str
    subfield_degree: int | None = None
    subfield_kind: str | None = None

    def __str__(self):
        if self.kind == "subfield":
            return f"subfield(:{self.subfield_degree}, {self.subfield_kind})"
        return self.kind


class TraceTripleUnsolvable(RuntimeError):
    """No SL2 triple with the requested traces was found; the sweep is
    exhaustive, so reaching this indicates an implementation bug."""


class PSL2(Group):
    kind = "psl2"

    def __init__(self, p: int, e: int = 1):
        field = gf(p, e)
        if field.q < 4:
            raise GroupError("PSL2 realization needs q = p**e >= 4")
        self.field = field
        self.p = p
        self.e = e
        self.q = field.q
        self.d = math.gcd(2, self.q - 1)
        self.order = self.q * (self.q * self.q - 1) // self.d
        self.split_order = (self.q - 1) // self.d
        self.nonsplit_order = (self.q + 1) // self.d
        self._split_factors = prime_factors(self.split_order)
        self._nonsplit_factors = prime_factors(self.nonsplit_order)
        # Largest proper subgroup order (Dickson: Borel, dihedral, A4, S4,
        # A5, subfield; the Borel dominates subfield groups for q > 4).
        # A closure that outgrows this bound certifies full generation.
        borel = self.q * (self.q - 1) // self.d
        self.proper_subgroup_bound = max(borel, 2 * (self.q + 1) // self.d, 60)
        self._traces_by_order_cache = None

    def descriptor(self):
        return f"psl2:{self.field.descriptor()}"

    # -- canonical payloads ---------------------------------------------------

    def _canon(self, m):
        if self.d == 1:
            return m
        F = self.field
        for v in m:
            if v:
                if v > F.neg(v):
                    return (F.neg(m[0]), F.neg(m[1]), F.neg(m[2]), F.neg(m[3]))
                return m
        raise AssertionError("zero matrix")

    def identity(self):
        return (1, 0, 0, 1)

    def multiply(self, m, n):
        F = self.field
        a, b, c, d = m
        x, y, z, w = n
        return self._canon((
            F.add(F.mul(a, x), F.mul(b, z)),
            F.add(F.mul(a, y), F.mul(b, w)),
            F.add(F.mul(c, x), F.mul(d, z)),
            F.add(F.mul(c, y), F.mul(d, w)),
        ))

    def inverse(self, m):
        F = self.field
        a, b, c, d = m
        return self._canon((d, F.neg(b), F.neg(c), a))

    def trace(self, m):
        """Trace of the canonical lift."""
        return self.field.add(m[0], m[3])

    def determinant(self, m):
        F = self.field
        return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]))

    def check_element(self, m):
        if not (isinstance(m, tuple) and len(m) == 4
                and all(isinstance(v, int) and 0 <= v < self.q for v in m)):
            raise HandleMismatch(f"{m!r} is not a PSL2({self.q}) payload")
        if self.determinant(m) != 1:
            raise HandleMismatch(f"{m!r} has determinant != 1")
        if m != self._canon(m):
            raise HandleMismatch(f"{m!r} is not the canonical lift")

    # -- trace machinery --------------------------------------------------------

    def _is_pm2(self, a):
        F = self.field
        return a == F.two or a == F.minus_two

    def lucas_trace(self, k: int, a):
        """Trace of the k-th power of an element of trace a (Lucas V_k)."""
        F = self.field
        if k == 0:
            return F.two
        v0, v1 = F.two, a  # (V_j, V_{j+1}) with j built from the bits of k
        for bit in bin(k)[2:]:
            if bit == "0":
                v0, v1 = (F.sub(F.mul(v0, v0), F.two),
                          F.sub(F.mul(v0, v1), a))
            else:
                v0, v1 = (F.sub(F.mul(v0, v1), a),
                          F.sub(F.mul(v1, v1), F.two))
        return v0

    def is_split_trace(self, a) -> bool:
        """Whether trace a (not +-2) belongs to split elements, i.e. the
        eigenvalues lie in GF(q)."""
        F = self.field
        if self.p == 2:
            u = F.inv(F.mul(a, a))
            return F.absolute_trace(u) == 0
        disc = F.sub(F.mul(a, a), F.of_int(4))
        return F.is_square(disc)

    def order_from_trace(self, a) -> frozenset[int]:
        """Projective orders of elements whose SL2 lift has trace a."""
        if self._is_pm2(a):
            return frozenset((1, self.p))
        return frozenset((self._semisimple_order(a),))

    def _semisimple_order(self, a) -> int:
        if self.is_split_trace(a):
            m, factors = self.split_order, self._split_factors
        else:
            m, factors = self.nonsplit_order, self._nonsplit_factors
        order = m
        for r in factors:
            while order % r == 0 and self._is_pm2(self.lucas_trace(order // r, a)):
                order //= r
        return order

    def order_of(self, m):
        if m == (1, 0, 0, 1):
            return 1
        a = self.trace(m)
        if self._is_pm2(a):
            return self.p
        return self._semisimple_order(a)

    def split_type(self, m) -> str:
        """'identity', 'unipotent', 'split' or 'nonsplit'."""
        if m == (1, 0, 0, 1):
            return "identity"
        a = self.trace(m)
        if self._is_pm2(a):
            return "unipotent"
        return "split" if self.is_split_trace(a) else "nonsplit"

    # -- conjugacy fingerprints ---------------------------------------------------

    def fingerprint(self, m):
        if m == (1, 0, 0, 1):
            return ("1",)
        F = self.field
        a = self.trace(m)
        if self._is_pm2(a):
            if self.p == 2:
                return ("u",)
            # take the trace-(+2) lift; its nilpotent part N = M - I has
            # c-entry -u*r^2 and b-entry u*p^2 for Jordan parameter u, so
            # the square class of -c (or b when c = 0) pins the class
            if a == F.two:
                lift = m
            else:
                lift = (F.neg(m[0]), F.neg(m[1]), F.neg(m[2]), F.neg(m[3]))
            c_entry, b_entry = lift[2], lift[1]
            v = F.neg(c_entry) if c_entry != 0 else b_entry
            return ("u", 1 if F.is_square(v) else 0)
        return ("t",) + tuple(sorted((a, F.neg(a))))

    # -- enumeration / sampling ---------------------------------------------------

    def iter_elements(self):
        F = self.field
        q = self.q
        # restricting the first nonzero entry to the canonical half-set
        # enumerates each projective element exactly once
        if self.d == 2:
            first = [v for v in range(1, q) if v < F.neg(v)]
        else:
            first = list(range(1, q))
        for a in first:
            inva = F.inv(a)
            for b in range(q):
                for c in range(q):
                    yield (a, b, c, F.mul(inva, F.add(1, F.mul(b, c))))
        # a == 0: the first nonzero entry is b, and c = -1/b is forced
        for b in first:
            c = F.neg(F.inv(b))
            for d in range(q):
                yield (0, b, c, d)

    def random_element(self, rng):
        F = self.field
        while True:
            a, b = F.random(rng), F.random(rng)
            if a or b:
                break
        if a:
            c = F.random(rng)
            d = F.mul(F.inv(a), F.add(1, F.mul(b, c)))
        else:
            c = F.neg(F.inv(b))
            d = F.random(rng)
        return self._canon((a, b, c, d))

    # -- singular triples and the trace-triple solver ------------------------------

    def is_singular_triple(self, a, b, g) -> bool:
        """Singular trace triples are exactly those whose matrix pairs
        generate a structural subgroup (Borel subgroup or cyclic)."""
        F = self.field
        s = F.add(F.add(F.mul(a, a), F.mul(b, b)), F.mul(g, g))
        s = F.sub(s, F.mul(F.mul(a, b), g))
        return F.sub(s, F.of_int(4)) == 0

    def solve_trace_triple(self, a, b, g, variant: int = 0):
        """Matrices (A, B, C) in SL2(q) with traces (a, b, g) and ABC = I.

        Deterministic: candidate solutions are produced in a fixed sweep
        order (each trace rotated into companion position, the free entry
        swept in encoding order, quadratic roots in sorted order, then the
        scalar-lift fallbacks) and the variant-th one is returned.  Raises
        TraceTripleUnsolvable only if the full sweep is empty, which the
        existence theorem rules out for variant 0.
        """
        count = 0
        for sol in self._trace_solutions(a, b, g):
            if count == variant:
                A, B, C = sol
                assert self._triple_ok(A, B, C, a, b, g)
                return sol
            count += 1
        if variant == 0:
            raise TraceTripleUnsolvable(
                f"no SL2({self.q}) triple with traces "
                f"({self.field.format(a)},{self.field.format(b)},{self.field.format(g)})")
        raise IndexError(f"only {count} trace-triple solutions available")

    def _triple_ok(self, A, B, C, a, b, g):
        F = self.field
        tr = lambda m: F.add(m[0], m[3])
        prod = self._mat_mul(self._mat_mul(A, B), C)
        return (tr(A) == a and tr(B) == b and tr(C) == g
                and prod == (1, 0, 0, 1)
                and all(self._mat_det(m) == 1 for m in (A, B, C)))

    def _mat_mul(self, m, n):
        F = self.field
        a, b, c, d = m
        x, y, z, w = n
        return (F.add(F.mul(a, x), F.mul(b, z)),
                F.add(F.mul(a, y), F.mul(b, w)),
                F.add(F.mul(c, x), F.mul(d, z)),
                F.add(F.mul(c, y), F.mul(d, w)))

    def _mat_inv(self, m):
        F = self.field
        a, b, c, d = m
        return (d, F.neg(b), F.neg(c), a)

    def _mat_det(self, m):
        F = self.field
        return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]))

    @staticmethod
    def _rotate_back(sol, rot):
        # a solution for the rot-th cyclic rotation of the traces, mapped
        # back: (A,B,C) for (b,g,a) becomes (C,A,B) for (a,b,g), etc.
        A, B, C = sol
        if rot == 0:
            return (A, B, C)
        if rot == 1:
            return (C, A, B)
        return (B, C, A)

    def _trace_solutions(self, a, b, g):
        rotations = ((a, b, g), (b, g, a), (g, a, b))
        for rot, traces in enumerate(rotations):
            for sol in self._companion_solutions(*traces):
                yield self._rotate_back(sol, rot)
        F = self.field
        ident = (1, 0, 0, 1)
        # scalar lifts, reachable only with a +-2 trace: A = I forces
        # tr C = tr B, A = -I forces tr C = -tr B
        for rot, (x, y, z) in enumerate(rotations):
            B = (0, F.minus_one, 1, y)
            if x == F.two and z == y:
                sol = (ident, B, self._mat_inv(B))
            elif x == F.minus_two and z == F.neg(y) and self.d == 2:
                neg = lambda m: tuple(F.neg(v) for v in m)
                sol = (neg(ident), B, neg(self._mat_inv(B)))
            else:
                continue
            yield self._rotate_back(sol, rot)

    def _companion_solutions(self, x, y, z):
        """All B completing A = companion(x) with tr B = y, tr AB = z,
        det B = 1, swept deterministically."""
        F = self.field
        A = (0, F.minus_one, 1, x)
        for s in range(self.q):
            b22 = F.sub(y, s)
            coef1 = F.add(F.sub(z, F.mul(x, y)), F.mul(x, s))
            coef0 = F.add(1, F.sub(F.mul(s, s), F.mul(s, y)))
            for r in F.solve_quadratic(1, coef1, coef0):
                b12 = F.sub(F.add(z, r), F.mul(x, b22))
                B = (s, b12, r, b22)
                C = self._mat_inv(self._mat_mul(A, B))
                yield (A, B, C)

    # -- subgroup classification -----------------------------------------------------

    def classify_pair(self, x, y) -> SubgroupClass:
        """The exact Dickson class of the subgroup generated by x and y.

        Decision order: singular trace triple (structural); two involutions
        among (x, y, xy) (dihedral); small order patterns confirmed by a
        capped closure (A4/S4/A5); then the subfield test on the field
        generated by the squared traces and their product, whose degree is
        invariant under the quadratic twist that distinguishes PGL2 of a
        subfield from PSL2; anything left generates the whole group.
        """
        F = self.field
        a = self.trace(x)
        b = self.trace(y)
        # the product of the canonical lifts, NOT canonicalized: the
        # singular and trace-field invariants need lift-consistent signs
        # (negating x flips both a and g, which they tolerate; flipping g
        # alone would break them)
        xy_lift = self._mat_mul(x, y)
        g = F.add(xy_lift[0], xy_lift[3])
        if self.is_singular_triple(a, b, g):
            return SubgroupClass("structural")
        orders = (self.order_of(x), self.order_of(y),
                  self.order_of(self._canon(xy_lift)))
        if sum(1 for o in orders if o == 2) >= 2:
            return SubgroupClass("dihedral")
        os = set(orders)
        if os <= {1, 2, 3, 4} or os <= {1, 2, 3, 5}:
            h = closure(self, (x, y), stop_above=60)
            if len(h) <= 60:
                return self._classify_closure(h)
        pieces = (F.mul(a, a), F.mul(b, b), F.mul(g, g), F.mul(F.mul(a, b), g))
        d0 = 1
        for v in pieces:
            d0 = math.lcm(d0, F.subfield_degree(v))
        if d0 < self.e:
            # PGL2(p^d0) pairs have exactly two elements of (x, y, xy) in the
            # outer coset, whose traces are sqrt(nonsquare)*F_{p^d0}.  Trace 0
            # is ambiguous (inner and outer involutions both have it), but at
            # most one of the three traces is 0 here, two involutions having
            # been classified dihedral already, so the parity resolves it.
            twisted = sum(1 for v in (a, b, g) if d0 % F.subfield_degree(v) != 0)
            ambiguous = sum(1 for v in (a, b, g) if v == 0)
            if twisted == 2 or (twisted == 1 and ambiguous >= 1):
                kind = "pgl"
            elif twisted == 0:
                kind = "psl"
            else:
                kind = "unknown"
                log.warning("unexpected twist pattern %s for traces (%s,%s,%s) in %s",
                            twisted, F.format(a), F.format(b), F.format(g),
                            self.descriptor())
            return SubgroupClass("subfield", d0, kind)
        return SubgroupClass("full")

    def _classify_closure(self, h) -> SubgroupClass:
        """Classify a fully materialized subgroup by structure."""
        n = len(h)
        if n == self.order:
            return SubgroupClass("full")
        orders = {self.order_of(m) for m in h}
        if max(orders) == n:
            return SubgroupClass("structural")  # cyclic
        if self._fixes_projective_point(h):
            return SubgroupClass("structural")  # inside a Borel
        if n == 4:
            return SubgroupClass("dihedral")  # Klein four-group
        if n % 2 == 0 and (n // 2) in orders:
            involutions = sum(1 for m in h if self.order_of(m) == 2)
            if involutions >= n // 2:
                return SubgroupClass("dihedral")
        if n == 12 and orders == {1, 2, 3}:
            return SubgroupClass("a4")
        if n == 24 and orders == {1, 2, 3, 4}:
            return SubgroupClass("s4")
        if n == 60 and orders == {1, 2, 3, 5}:
            return SubgroupClass("a5")
        deg = self._subfield_order_match(n)
        if deg is not None:
            return SubgroupClass("subfield", deg[0], deg[1])
        raise AssertionError(
            f"closure of order {n} matches no Dickson class in {self.descriptor()}")

    def generates(self, x, y) -> bool:
        return self.classify_pair(x, y).kind == "full"

    def classify_pair_brute(self, x, y) -> SubgroupClass:
        """Oracle classification via BFS closure, independent of the trace
        machinery except for element orders.  The closure stops once it
        outgrows the largest proper subgroup, certifying full generation."""
        h = closure(self, (x, y), stop_above=self.proper_subgroup_bound)
        if len(h) > self.proper_subgroup_bound:
            return SubgroupClass("full")
        return self._classify_closure(h)

    def _fixes_projective_point(self, h):
        """Common fixed point on P1(GF(q)) for all elements (Borel test)."""
        candidates = None
        for m in h:
            if m == (1, 0, 0, 1):
                continue
            pts = self._fixed_points(m)
            candidates = pts if candidates is None else [p for p in candidates if p in pts]
            if not candidates:
                return False
        return candidates is not None and bool(candidates)

    def _fixed_points(self, m):
        """Fixed points of a non-scalar m on the projective line over
        GF(q), as normalized pairs (x, 1) or (1, 0)."""
        F = self.field
        a, b, c, d = m
        pts = []
        # [x : 1] is fixed iff c*x^2 + (d - a)*x - b = 0
        if c != 0:
            for x in F.solve_quadratic(c, F.sub(d, a), F.neg(b)):
                pts.append((x, 1))
        else:
            diag = F.sub(d, a)
            if diag != 0:
                pts.append((F.div(b, diag), 1))
            pts.append((1, 0))
        return pts

    def _subfield_order_match(self, n):
        for dd in range(1, self.e):
            if self.e % dd:
                continue
            q1 = self.p**dd
            psl = q1 * (q1 * q1 - 1) // math.gcd(2, q1 - 1)
            pgl = q1 * (q1 * q1 - 1)
            if n == psl:
                return (dd, "psl")
            if n == pgl and (self.e // dd) % 2 == 0:
                return (dd, "pgl")
        return None

    # -- element lookup by order -------------------------------------------------

    def traces_by_order(self) -> dict[int, list[int]]:
        """Semisimple trace candidates for each projective order > 1,
        scanned once in encoding order (unipotent traces excluded)."""
        if self._traces_by_order_cache is None:
            table: dict[int, list[int]] = {}
            for a in self.field.elements():
                if self._is_pm2(a):
                    continue
                table.setdefault(self._semisimple_order(a), []).append(a)
            self._traces_by_order_cache = table
        return self._traces_by_order_cache

    def realizable_orders(self):
        menu = {1, self.p}
        menu.update(self.traces_by_order().keys())
        return menu

    def element_of_order(self, k: int):
        """A canonical witness of exact projective order k."""
        if k == 1:
            return self.identity()
        if k == self.p:
            return self._canon((1, 1, 0, 1))
        traces = self.traces_by_order().get(k)
        if not traces:
            raise GroupError(
                f"order {k} not realizable in {self.descriptor()}: orders are "
                f"1, p = {self.p}, divisors of {self.split_order} and of "
                f"{self.nonsplit_order}")
        a = traces[0]
        return self._canon((0, self.field.minus_one, 1, a))

    # -- text encoding ---------------------------------------------------------------

    def parse_element(self, text):
        t = text.strip().replace(" ", "")
        if not (t.startswith("[[") and t.endswith("]]")):
            raise GroupError(f"malformed matrix {text!r}; expected [[a,b],[c,d]]")
        body = t[2:-2]
        rows = body.split("],[")
        if len(rows) != 2:
            raise GroupError(f"malformed matrix {text!r}")
        entries = []
        for row in rows:
            parts = row.split(",")
            if len(parts) != 2:
                raise GroupError(f"malformed matrix {text!r}")
            entries.extend(self.field.parse(p) for p in parts)
        m = tuple(entries)
        if self._mat_det(m) != 1:
            raise GroupError(
                f"matrix {text!r} has determinant {self.field.format(self._mat_det(m))}, "
                f"not an SL2({self.field.descriptor()}) lift")
        return self._canon(m)

    def format_element(self, m):
        F = self.field
        return f"[[{F.format(m[0])},{F.format(m[1])}],[{F.format(m[2])},{F.format(m[3])}]]"
