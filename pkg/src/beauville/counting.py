"""Conjugacy classes, the class-algebra counting formula, character tables.

The number of solutions of x*y*z = 1 with x, y, z in prescribed conjugacy
classes X, Y, Z is computed two ways:

* brute convolution: fix one representative x of X (the count is constant
  on the class) and count y in Y with (x*y)**-1 in Z, times |X|;
* the character formula |X||Y||Z|/|G| * sum over irreducible characters of
  chi(x) chi(y) chi(z) / chi(1).

The brute count is ground truth; the character path exists to embody the
formula and to reuse persisted tables.  Character tables are computed with
the Burnside class-matrix method: the class-sum matrices commute, their
common eigenvectors are the central characters, and degrees follow from
the orthogonality relation.  Values are stored as complex floats with a
declared tolerance of 1e-8 rather than exact cyclotomics.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .groups import CapExceeded, Group

VALUE_TOLERANCE = 1e-8
INTEGER_TOLERANCE = 1e-6

ENUMERATION_CAP = 1_000_000
TABLE_CAP = 10_000
CLASS_CAP = 60


class TableInvalid(RuntimeError):
    """A character-table invariant failed (orthogonality, degrees, or
    non-integral class-algebra count)."""


@dataclass
class ClassData:
    index: int
    fingerprint: object
    size: int
    representative: object
    element_order: int

    def label(self) -> str:
        return repr(self.fingerprint)


class ClassPartition:
    """The full partition of G into conjugacy classes.

    Classes are ordered by (element order, size, fingerprint label), so the
    identity class is always first and the ordering is reproducible.
    """

    def __init__(self, group: Group, cap: int = ENUMERATION_CAP):
        if group.order > cap:
            raise CapExceeded(
                f"conjugacy enumeration needs |G| = {group.order} <= {cap}",
                required=group.order, cap=cap)
        self.group = group
        members: dict[object, list] = {}
        for m in group.elements(cap):
            members.setdefault(group.fingerprint(m), []).append(m)
        keyed = sorted(
            members.items(),
            key=lambda kv: (group.order_of(kv[1][0]), len(kv[1]), repr(kv[0])))
        self.classes = [
            ClassData(i, fp, len(ms), ms[0], group.order_of(ms[0]))
            for i, (fp, ms) in enumerate(keyed)]
        self._members = [ms for _, ms in keyed]
        self.index_of = {c.fingerprint: c.index for c in self.classes}
        self.element_class = {
            m: i for i, ms in enumerate(self._members) for m in ms}
        assert sum(c.size for c in self.classes) == group.order

    def __len__(self):
        return len(self.classes)

    def members(self, i: int):
        return self._members[i]

    def class_of(self, m) -> int:
        return self.element_class[m]

    def by_label(self, label: str) -> ClassData:
        for c in self.classes:
            if c.label() == label:
                return c
        raise KeyError(f"no conjugacy class labelled {label!r}")


def conjugacy_classes(group: Group, cap: int = ENUMERATION_CAP) -> ClassPartition:
    return ClassPartition(group, cap)


def frobenius_count_brute(partition: ClassPartition, i: int, j: int, k: int) -> int:
    """Exact number of (x, y, z) in X_i x Y_j x Z_k with x*y*z = 1.

    The inner count is independent of the representative x by conjugation
    symmetry, so it is computed once and multiplied by |X_i|.
    """
    G = partition.group
    x = partition.classes[i].representative
    target = partition.classes[k].fingerprint
    hits = 0
    for y in partition.members(j):
        if G.fingerprint(G.inverse(G.multiply(x, y))) == target:
            hits += 1
    return partition.classes[i].size * hits


def frobenius_table_brute(partition: ClassPartition, i: int) -> list[list[int]]:
    """All counts N_{X_i, Y_j, Z_k} for a fixed first class in one sweep."""
    G = partition.group
    k = len(partition)
    x = partition.classes[i].representative
    counts = [[0] * k for _ in range(k)]
    for j in range(k):
        for y in partition.members(j):
            kk = partition.class_of(G.inverse(G.multiply(x, y)))
            counts[j][kk] += 1
    size = partition.classes[i].size
    return [[size * c for c in row] for row in counts]


# ---------------------------------------------------------------------------
# character tables (Burnside class-matrix method)
# ---------------------------------------------------------------------------

@dataclass
class CharacterTable:
    group: str
    class_labels: list[str]
    class_sizes: list[int]
    class_orders: list[int]
    degrees: list[int]
    values: list[list[complex]]  # rows: characters, columns: classes
    tolerance: float = VALUE_TOLERANCE

    @property
    def group_order(self) -> int:
        return sum(self.class_sizes)

    def validate(self):
        n = self.group_order
        k = len(self.class_labels)
        if sum(d * d for d in self.degrees) != n:
            raise TableInvalid(
                f"degree check failed: sum of squares {sum(d * d for d in self.degrees)} != {n}")
        if not all(abs(v - 1) < self.tolerance for v in self.values[0]):
            raise TableInvalid("first row is not the trivial character")
        vals = np.array(self.values, dtype=complex)
        sizes = np.array(self.class_sizes, dtype=float)
        gram = (vals * sizes) @ vals.conj().T / n
        if not np.allclose(gram, np.eye(k), atol=self.tolerance):
            raise TableInvalid("row orthogonality failed beyond tolerance")
        # column orthogonality: sum_chi chi(g) conj(chi(h)) = |C_G(g)| delta
        col = vals.conj().T @ vals
        expect = np.diag([n / s for s in sizes])
        if not np.allclose(col, expect, atol=self.tolerance * n):
            raise TableInvalid("column orthogonality failed beyond tolerance")

    def to_payload(self) -> dict:
        return {
            "group": self.group,
            "tolerance": self.tolerance,
            "classes": [
                {"fingerprint": lb, "size": s, "order": o}
                for lb, s, o in zip(self.class_labels, self.class_sizes,
                                    self.class_orders)],
            "degrees": self.degrees,
            "values": [[[v.real, v.imag] for v in row] for row in self.values],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_payload(), indent=1, sort_keys=True)

    @classmethod
    def from_payload(cls, payload: dict) -> "CharacterTable":
        return cls(
            group=payload["group"],
            class_labels=[c["fingerprint"] for c in payload["classes"]],
            class_sizes=[c["size"] for c in payload["classes"]],
            class_orders=[c["order"] for c in payload["classes"]],
            degrees=list(payload["degrees"]),
            values=[[complex(re, im) for re, im in row] for row in payload["values"]],
            tolerance=payload["tolerance"],
        )

    @classmethod
    def from_json(cls, text: str) -> "CharacterTable":
        return cls.from_payload(json.loads(text))


def _class_matrices(partition: ClassPartition) -> list[np.ndarray]:
    """Matrices A_i with (A_i)[j, l] = #{u in C_i : u**-1 w_l in C_j}, the
    structure constants of the class sums in the center of the group
    algebra."""
    G = partition.group
    k = len(partition)
    reps = [c.representative for c in partition.classes]
    mats = []
    for i in range(k):
        A = np.zeros((k, k))
        for u in partition.members(i):
            u_inv = G.inverse(u)
            for l, w in enumerate(reps):
                j = partition.class_of(G.multiply(u_inv, w))
                A[j, l] += 1
        mats.append(A)
    return mats


def character_table(group_or_partition, cap: int = TABLE_CAP,
                    class_cap: int = CLASS_CAP, seed: int = 7) -> CharacterTable:
    """Complex character table via simultaneous diagonalization of the
    class matrices.

    A random real combination of the class matrices has the k central
    characters as eigenvectors with (generically) distinct eigenvalues;
    degenerate draws are retried with fresh coefficients.  Degrees are
    recovered from the self-orthogonality relation and must round to
    integers with sum of squares |G|.
    """
    if isinstance(group_or_partition, ClassPartition):
        partition = group_or_partition
    else:
        if group_or_partition.order > cap:
            raise CapExceeded(
                f"character table needs |G| = {group_or_partition.order} <= {cap}",
                required=group_or_partition.order, cap=cap)
        partition = ClassPartition(group_or_partition, cap)
    k = len(partition)
    if k > class_cap:
        raise CapExceeded(f"{k} classes exceed the class cap {class_cap}",
                          required=k, cap=class_cap)
    n = partition.group.order
    mats = _class_matrices(partition)
    sizes = np.array([c.size for c in partition.classes], dtype=float)
    id_idx = next(i for i, c in enumerate(partition.classes)
                  if c.element_order == 1)

    rng = np.random.default_rng(seed)
    omegas = None
    for _ in range(24):
        coeffs = rng.standard_normal(k)
        M = sum(c * A for c, A in zip(coeffs, mats))
        eigvals, eigvecs = np.linalg.eig(M)
        spread = max(1.0, float(np.max(np.abs(eigvals))))
        if k > 1:
            dists = np.abs(eigvals[:, None] - eigvals[None, :])
            dists += np.eye(k) * spread
            if float(np.min(dists)) < 1e-7 * spread:
                continue  # degenerate draw; retry with fresh coefficients
        vecs = eigvecs / eigvecs[id_idx, :]
        omegas = vecs.T  # rows: central characters omega(K_l)
        break
    if omegas is None:
        raise TableInvalid("class-matrix eigenvalues would not separate")

    rows = []
    for om in omegas:
        denom = float(np.sum(np.abs(om) ** 2 / sizes).real)
        deg = math.sqrt(n / denom)
        deg_int = round(deg)
        if abs(deg - deg_int) > 1e-4 or deg_int < 1:
            raise TableInvalid(f"non-integral character degree {deg}")
        chi = deg_int * om / sizes
        rows.append((deg_int, [complex(v) for v in chi]))

    # trivial character first, the rest by degree then value key
    def row_key(row):
        deg, vals = row
        return (deg, [(round(v.real, 6), round(v.imag, 6)) for v in vals])

    trivial = min(rows, key=lambda r: max(abs(v - 1) for v in r[1]))
    rest = sorted((r for r in rows if r is not trivial), key=row_key)
    ordered = [trivial] + rest

    table = CharacterTable(
        group=partition.group.descriptor(),
        class_labels=[c.label() for c in partition.classes],
        class_sizes=[c.size for c in partition.classes],
        class_orders=[c.element_order for c in partition.classes],
        degrees=[deg for deg, _ in ordered],
        values=[vals for _, vals in ordered],
    )
    table.validate()
    return table


def frobenius_count_character(table: CharacterTable, i: int, j: int, k: int) -> int:
    """The class-algebra count from the character table; the complex sum
    must land within 1e-6 of a non-negative integer."""
    n = table.group_order
    total = 0 + 0j
    for deg, row in zip(table.degrees, table.values):
        total += row[i] * row[j] * row[k] / deg
    value = (table.class_sizes[i] * table.class_sizes[j] * table.class_sizes[k]
             / n) * total
    nearest = round(value.real)
    if abs(value.imag) > INTEGER_TOLERANCE or abs(value.real - nearest) > INTEGER_TOLERANCE:
        raise TableInvalid(
            f"character count {value} is not an integer within {INTEGER_TOLERANCE}")
    if nearest < 0:
        raise TableInvalid(f"character count {nearest} is negative")
    return int(nearest)


def witten_zeta(degrees, s: float) -> float:
    """sum over irreducible degrees of degree**(-s); the plain Dirichlet
    sum, no analytic continuation."""
    if s <= 0:
        raise ValueError("witten zeta needs s > 0")
    return float(sum(d ** (-float(s)) for d in degrees))
