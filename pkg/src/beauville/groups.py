"""The uniform group contract and the Zn x Zn realization.

Every realization exposes the same small surface over an immutable,
hashable element payload:

* ``identity()``, ``multiply``, ``inverse``, ``power``, ``order_of``
* ``generates(x, y)`` -- exact test for <x, y> == G
* ``fingerprint(x)`` -- canonical conjugacy label, equal iff conjugate in G
* ``elements(limit)`` -- full enumeration, each element exactly once
* ``random_element(rng)`` -- exactly uniform, rng owned by the caller
* ``parse_element`` / ``format_element`` -- the CLI text encoding

Payloads from different handles must never be mixed; ``check_element``
validates membership and is used by the verification layer.

Group handle text encodings: ``psl2:p^e``, ``alt:n``, ``sym:n``, ``ab:n``.
"""
from __future__ import annotations

import math


class GroupError(ValueError):
    pass


class HandleMismatch(GroupError):
    """An element payload was used with the wrong group handle."""


class CapExceeded(RuntimeError):
    """An enumeration or search exceeded its configured cap."""

    def __init__(self, message, required=None, cap=None):
        super().__init__(message)
        self.required = required
        self.cap = cap


class Group:
    """Base class; concrete realizations fill in the payload semantics."""

    kind = "?"
    order: int

    # -- required surface ---------------------------------------------------

    def identity(self):
        raise NotImplementedError

    def multiply(self, a, b):
        raise NotImplementedError

    def inverse(self, a):
        raise NotImplementedError

    def order_of(self, a) -> int:
        raise NotImplementedError

    def generates(self, x, y) -> bool:
        raise NotImplementedError

    def fingerprint(self, a):
        raise NotImplementedError

    def iter_elements(self):
        raise NotImplementedError

    def random_element(self, rng):
        raise NotImplementedError

    def check_element(self, a) -> None:
        raise NotImplementedError

    def parse_element(self, text: str):
        raise NotImplementedError

    def format_element(self, a) -> str:
        raise NotImplementedError

    def descriptor(self) -> str:
        raise NotImplementedError

    # -- shared helpers -------------------------------------------------------

    def power(self, a, k: int):
        if k < 0:
            return self.power(self.inverse(a), -k)
        result = self.identity()
        base = a
        while k:
            if k & 1:
                result = self.multiply(result, base)
            base = self.multiply(base, base)
            k >>= 1
        return result

    def conjugate(self, g, a):
        """g * a * g**-1."""
        return self.multiply(self.multiply(g, a), self.inverse(g))

    def commutator(self, a, b):
        return self.multiply(self.multiply(a, b),
                             self.inverse(self.multiply(b, a)))

    def elements(self, limit: int = 1_000_000):
        """Enumerate the whole group, refusing when |G| exceeds the cap."""
        if self.order > limit:
            raise CapExceeded(
                f"group order {self.order} exceeds enumeration cap {limit}",
                required=self.order, cap=limit)
        return self.iter_elements()

    def order_of_brute(self, a) -> int:
        """Reference order computation by repeated multiplication."""
        k, cur = 1, a
        e = self.identity()
        while cur != e:
            cur = self.multiply(cur, a)
            k += 1
        return k

    def __repr__(self):
        return f"<{type(self).__name__} {self.descriptor()} order={self.order}>"

    def __eq__(self, other):
        return isinstance(other, Group) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(self.descriptor())


class AbelianSquare(Group):
    """Zn x Zn with payloads (a, b), 0 <= a, b < n.

    This is the family of Beauville's original construction; it admits an
    unmixed Beauville structure exactly when gcd(n, 6) == 1, which the
    exhaustive search reproduces without assuming it.
    """

    kind = "abelian"

    def __init__(self, n: int):
        if n < 2:
            raise GroupError("Zn x Zn needs n >= 2")
        self.n = n
        self.order = n * n

    def descriptor(self):
        return f"ab:{self.n}"

    def identity(self):
        return (0, 0)

    def multiply(self, a, b):
        n = self.n
        return ((a[0] + b[0]) % n, (a[1] + b[1]) % n)

    def inverse(self, a):
        n = self.n
        return (-a[0] % n, -a[1] % n)

    def order_of(self, a):
        g = math.gcd(math.gcd(a[0], a[1]), self.n)
        return self.n // g

    def generates(self, x, y):
        # <x, y> = Zn^2 iff the matrix with columns x, y is invertible mod n;
        # over each Z/p^k factor surjectivity reduces mod p, where it is the
        # nonvanishing of the determinant.
        det = (x[0] * y[1] - x[1] * y[0]) % self.n
        return math.gcd(det, self.n) == 1

    def fingerprint(self, a):
        # conjugacy classes are singletons
        return ("e", a[0], a[1])

    def iter_elements(self):
        n = self.n
        return ((i, j) for i in range(n) for j in range(n))

    def random_element(self, rng):
        return (rng.randrange(self.n), rng.randrange(self.n))

    def check_element(self, a):
        if (not isinstance(a, tuple) or len(a) != 2
                or not all(isinstance(c, int) and 0 <= c < self.n for c in a)):
            raise HandleMismatch(f"{a!r} is not an element of {self.descriptor()}")

    def parse_element(self, text):
        text = text.strip()
        if not (text.startswith("(") and text.endswith(")")):
            raise GroupError(f"malformed pair {text!r}; expected (a,b)")
        try:
            a_s, b_s = text[1:-1].split(",")
            return (int(a_s) % self.n, int(b_s) % self.n)
        except ValueError as exc:
            raise GroupError(f"malformed pair {text!r}") from exc

    def format_element(self, a):
        return f"({a[0]},{a[1]})"

    def element_of_order(self, k):
        if self.n % k != 0:
            raise GroupError(f"no element of order {k} in {self.descriptor()}")
        return (self.n // k, 0)


def closure(group: Group, gens, cap: int = 1_000_000, stop_above: int | None = None):
    """BFS multiplicative closure of the generators.

    Returns the set of elements generated.  When ``stop_above`` is given and
    the closure grows past it, the partial set is returned immediately (used
    with the largest-proper-subgroup bound to certify full generation
    without materializing G).
    """
    gens = [g for g in gens if g != group.identity()]
    seen = {group.identity(), *gens}
    frontier = list(seen)
    while frontier:
        new = []
        for b in frontier:
            for a in gens:
                c = group.multiply(a, b)
                if c not in seen:
                    seen.add(c)
                    if stop_above is not None and len(seen) > stop_above:
                        return seen
                    if len(seen) > cap:
                        raise CapExceeded(
                            f"closure exceeded cap {cap}", cap=cap)
                    new.append(c)
        frontier = new
    return seen


def brute_conjugacy_partition(group: Group, elements=None):
    """Partition into conjugacy classes by orbiting under conjugation.

    Orbits are computed under conjugation by a generating set (any full
    enumeration works since conjugation by products composes), so the cost
    is O(|G| * #gens) group operations rather than O(|G|^2).
    """
    if elements is None:
        elements = list(group.elements())
    gens = _generating_set(group, elements)
    unseen = set(elements)
    classes = []
    for a in elements:
        if a not in unseen:
            continue
        orbit = {a}
        frontier = [a]
        while frontier:
            nxt = []
            for b in frontier:
                for g in gens:
                    c = group.conjugate(g, b)
                    if c not in orbit:
                        orbit.add(c)
                        nxt.append(c)
            frontier = nxt
        unseen -= orbit
        classes.append(orbit)
    return classes


def _generating_set(group: Group, elements):
    """A small generating set found greedily from the enumeration."""
    gens = []
    have = {group.identity()}
    for a in elements:
        if a in have:
            continue
        gens.append(a)
        have = closure(group, gens)
        if len(have) == group.order:
            break
    return gens


def parse_group(descriptor: str) -> Group:
    """Build a group handle from its text descriptor."""
    descriptor = descriptor.strip()
    kind, _, arg = descriptor.partition(":")
    if not arg:
        raise GroupError(f"malformed group descriptor {descriptor!r}")
    if kind == "ab":
        return AbelianSquare(int(arg))
    if kind == "alt":
        from .perms import AlternatingGroup
        return AlternatingGroup(int(arg))
    if kind == "sym":
        from .perms import SymmetricGroup
        return SymmetricGroup(int(arg))
    if kind == "psl2":
        from .fields import FieldError, parse_field_descriptor
        from .psl2 import PSL2
        try:
            field = parse_field_descriptor(arg)
        except FieldError as exc:
            raise GroupError(f"bad psl2 field {arg!r}: {exc}") from exc
        return PSL2(field.p, field.e)
    raise GroupError(f"unknown group kind {kind!r} (use psl2:, alt:, sym:, ab:)")
