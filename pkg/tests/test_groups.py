import math
import random

import pytest

from beauville.groups import (AbelianSquare, CapExceeded, GroupError,
                              HandleMismatch, closure, parse_group)
from beauville.perms import AlternatingGroup, SymmetricGroup
from beauville.psl2 import PSL2

from _oracles import brute_partition, fingerprint_partition


def test_parse_group_descriptors():
    assert isinstance(parse_group("ab:5"), AbelianSquare)
    assert isinstance(parse_group("alt:6"), AlternatingGroup)
    assert isinstance(parse_group("sym:5"), SymmetricGroup)
    g = parse_group("psl2:2^3")
    assert isinstance(g, PSL2) and g.q == 8
    assert parse_group("psl2:7").order == 168
    for bad in ("foo:3", "alt", "psl2:6"):
        with pytest.raises(GroupError):
            parse_group(bad)


def test_handle_invariants():
    with pytest.raises(GroupError):
        AbelianSquare(1)
    with pytest.raises(GroupError):
        AlternatingGroup(2)
    with pytest.raises(GroupError):
        PSL2(3)  # q = 3 < 4
    assert PSL2(2, 2).order == 60
    assert AlternatingGroup(5).order == 60
    assert SymmetricGroup(5).order == 120
    assert AbelianSquare(7).order == 49


def test_abelian_order_examples():
    g = AbelianSquare(5)
    assert g.order_of((1, 0)) == 5
    assert g.order_of((0, 0)) == 1
    g6 = AbelianSquare(6)
    assert g6.order_of((2, 3)) == 6
    assert g6.order_of((2, 0)) == 3


def test_abelian_generates_examples():
    g = AbelianSquare(5)
    assert g.generates((1, 0), (0, 1))
    assert not g.generates((1, 0), (2, 0))


@pytest.mark.parametrize("n", range(2, 11))
def test_abelian_generates_det_criterion_matches_bfs_closure(n):
    g = AbelianSquare(n)
    for x in g.iter_elements():
        for y in g.iter_elements():
            det_rule = math.gcd((x[0] * y[1] - x[1] * y[0]) % n, n) == 1
            bfs = len(closure(g, (x, y))) == g.order
            assert g.generates(x, y) == bfs == det_rule


def test_enumeration_counts():
    assert len(list(AlternatingGroup(5).elements())) == 60
    assert len(list(PSL2(7).elements())) == 168
    assert len(list(AbelianSquare(4).elements())) == 16
    assert len(list(SymmetricGroup(4).elements())) == 24


def test_enumeration_cap_refusal_reports_size():
    g = AlternatingGroup(9)
    with pytest.raises(CapExceeded) as exc:
        list(g.elements(limit=1000))
    assert exc.value.required == g.order and exc.value.cap == 1000


@pytest.mark.parametrize("descriptor", ["ab:7", "alt:7", "sym:6", "psl2:13", "psl2:2^3"])
def test_lagrange_order_divides_group_order(descriptor):
    g = parse_group(descriptor)
    rng = random.Random(99)
    for _ in range(10_000):
        m = g.random_element(rng)
        assert g.order % g.order_of(m) == 0


@pytest.mark.parametrize("descriptor", ["ab:6", "alt:6", "psl2:11", "psl2:3^2"])
def test_generates_symmetric_and_conjugation_invariant(descriptor):
    g = parse_group(descriptor)
    rng = random.Random(5)
    for _ in range(60):
        x, y, c = (g.random_element(rng) for _ in range(3))
        forward = g.generates(x, y)
        assert forward == g.generates(y, x)
        assert forward == g.generates(g.conjugate(c, x), g.conjugate(c, y))


@pytest.mark.parametrize("descriptor", ["alt:5", "alt:6", "sym:5", "psl2:5",
                                        "psl2:7", "psl2:2^3", "psl2:3^2",
                                        "psl2:11", "psl2:13",
                                        "ab:4", "ab:7", "ab:10"])
def test_fingerprint_equality_is_exact_conjugacy(descriptor):
    g = parse_group(descriptor)
    els = list(g.elements())
    assert fingerprint_partition(g, els) == brute_partition(g, els)


def test_group_axioms_spot_checks():
    for descriptor in ("ab:6", "alt:6", "sym:4", "psl2:3^2", "psl2:2^2"):
        g = parse_group(descriptor)
        rng = random.Random(3)
        e = g.identity()
        for _ in range(200):
            a, b, c = (g.random_element(rng) for _ in range(3))
            assert g.multiply(g.multiply(a, b), c) == g.multiply(a, g.multiply(b, c))
            assert g.multiply(a, e) == a and g.multiply(e, a) == a
            assert g.multiply(a, g.inverse(a)) == e
            assert g.order_of(a) == g.order_of_brute(a)


def test_handle_mismatch_rejected():
    g = AbelianSquare(5)
    with pytest.raises(HandleMismatch):
        g.check_element((1, 7))
    a5 = AlternatingGroup(5)
    with pytest.raises(HandleMismatch):
        a5.check_element((1, 0, 2, 3))          # wrong length
    with pytest.raises(HandleMismatch):
        a5.check_element((1, 0, 2, 3, 4))       # odd permutation
    p7 = PSL2(7)
    with pytest.raises(HandleMismatch):
        p7.check_element((1, 1, 1, 1))          # det != 1


def test_element_text_encodings_round_trip():
    rng = random.Random(12)
    for descriptor in ("ab:9", "alt:7", "sym:6", "psl2:13", "psl2:3^2", "psl2:2^3"):
        g = parse_group(descriptor)
        for _ in range(100):
            m = g.random_element(rng)
            assert g.parse_element(g.format_element(m)) == m


def test_psl2_parse_accepts_either_lift():
    g = PSL2(7)
    m = g.parse_element("[[1,1],[0,1]]")
    m_neg = g.parse_element("[[6,6],[0,6]]")
    assert m == m_neg
