import itertools

import pytest
from hypothesis import given, settings, strategies as st

from avlift.ec_arith import parse_curve
from avlift.errors import BadInput, RingMismatch, SearchSpaceTooLarge
from avlift.isometry import (
    EndMatrix,
    EndRing,
    determinant,
    enumerate_isometric,
    hat,
    is_isometric,
    kernel_report,
    multiply,
    tilde,
)

ZZ = EndRing.integers()
ZI = EndRing.order(0, 1)


def zmat(*xs):
    return EndMatrix.from_ints(ZZ, xs)


def imat(*xs):
    return EndMatrix.from_ints(ZI, xs)


def det_z(m):
    a, b, c, d = m
    return a * d - b * c


def test_ring_validation():
    with pytest.raises(BadInput):
        EndRing.order(0, -1)  # real quadratic
    with pytest.raises(BadInput):
        EndRing.order(2, 1)  # discriminant 0
    assert EndRing.parse("Z[i]") == ZI
    assert EndRing.parse("Q(1, 1)") == EndRing.order(1, 1)
    with pytest.raises(BadInput):
        EndRing.parse("R")


def test_element_arithmetic():
    i = ZI(0, 1)
    assert i * i == ZI(-1)
    assert i.conj() == ZI(0, -1)
    w = EndRing.order(1, 1)(0, 1)
    assert w * w * w == EndRing.order(1, 1)(1)  # primitive cube root of unity
    assert w.conj() == EndRing.order(1, 1)(-1, -1)
    with pytest.raises(RingMismatch):
        ZI(1) + ZZ(1)


orders = st.sampled_from([ZI, EndRing.order(1, 1), EndRing.order(1, 2), EndRing.order(0, 5)])


@given(orders, st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50), st.integers(-50, 50))
def test_conjugation_is_involutive_ring_automorphism(ring, u1, v1, u2, v2):
    x, y = ring(u1, v1), ring(u2, v2)
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()
    n = x * x.conj()
    assert n == ring(x.norm()) and x.norm() >= 0


def test_hat_examples():
    assert hat(EndMatrix.identity(ZZ)) == EndMatrix.identity(ZZ)
    assert hat(zmat(1, 2, 3, 4)) == zmat(4, 2, 3, 1)
    assert hat(imat(0, 1, 0, 0, 0, 0, 0, 1)) == imat(0, -1, 0, 0, 0, 0, 0, -1)


def test_tilde_examples():
    assert tilde(EndMatrix.identity(ZI)) == EndMatrix.identity(ZI)
    assert tilde(zmat(1, 1, 0, 1)) == zmat(1, -1, 0, 1)
    assert tilde(zmat(2, 0, 0, 1)) == zmat(1, 0, 0, 2)


def test_multiply_examples():
    f = zmat(3, -1, 4, 2)
    assert multiply(f, EndMatrix.identity(ZZ)) == f
    assert multiply(zmat(1, 1, 0, 1), zmat(1, 0, 1, 1)) == zmat(2, 1, 1, 1)
    i2 = imat(0, 1, 0, 0, 0, 0, 0, 1)
    assert multiply(i2, i2) == imat(-1, 0, 0, 0, 0, 0, -1, 0)
    with pytest.raises(RingMismatch):
        multiply(f, i2)


def test_is_isometric_examples():
    assert is_isometric(EndMatrix.identity(ZZ))
    assert is_isometric(zmat(1, 1, 0, 1))
    assert not is_isometric(zmat(2, 0, 0, 1))
    assert is_isometric(imat(0, 1, 0, 0, 0, 0, 0, 1))


def test_enumerate_z_height1_matches_det_count():
    found = enumerate_isometric(ZZ, 1)
    oracle = [m for m in itertools.product((-1, 0, 1), repeat=4) if det_z(m) == 1]
    assert [f.coordinates() for f in found] == oracle
    assert len(found) == 20


def test_enumerate_height0_empty():
    assert enumerate_isometric(ZZ, 0) == []
    assert enumerate_isometric(ZI, 0) == []


def test_enumerate_gaussian_height1():
    found = enumerate_isometric(ZI, 1)
    assert found
    oracle = [
        m for m in itertools.product((-1, 0, 1), repeat=8)
        if is_isometric(EndMatrix.from_ints(ZI, m))
    ]
    assert [f.coordinates() for f in found] == oracle
    keys = {f.coordinates() for f in found}
    for f in found:
        assert tilde(f).coordinates() in keys


def test_enumeration_cap():
    with pytest.raises(SearchSpaceTooLarge):
        enumerate_isometric(ZI, 5)


def test_z_isometric_iff_det_one_height2():
    for m in itertools.product(range(-2, 3), repeat=4):
        assert is_isometric(zmat(*m)) == (det_z(m) == 1)


def test_tilde_times_f_is_det_over_z():
    for m in itertools.product(range(-2, 3), repeat=4):
        f = zmat(*m)
        assert multiply(tilde(f), f) == zmat(det_z(m), 0, 0, det_z(m))


def matrices(ring):
    k = ring.coords
    return st.lists(st.integers(-5, 5), min_size=4 * k, max_size=4 * k).map(
        lambda xs: EndMatrix.from_ints(ring, xs)
    )


rings = st.sampled_from([ZZ, ZI, EndRing.order(1, 1), EndRing.order(1, 3)])


@settings(max_examples=300)
@given(rings.flatmap(lambda r: st.tuples(matrices(r), matrices(r))))
def test_tilde_involution_and_anti_multiplicative(pair):
    f, g = pair
    assert tilde(tilde(f)) == f
    assert hat(hat(f)) == f
    assert tilde(multiply(f, g)) == multiply(tilde(g), tilde(f))
    # hat and tilde differ by conjugating with diag(1, -1)
    r = f.ring
    s = EndMatrix(r(1), r(0), r(0), r(-1))
    assert hat(tilde(f)) == multiply(multiply(s, f), s)


def test_isometries_closed_height1():
    group = enumerate_isometric(ZZ, 1)
    for f, g in itertools.product(group, repeat=2):
        assert tilde(multiply(f, g)) == multiply(tilde(g), tilde(f))
        assert is_isometric(multiply(f, g))
    for f in group:
        assert is_isometric(tilde(f))
        assert multiply(f, tilde(f)) == EndMatrix.identity(ZZ)


def test_determinant_unit_norm_for_gaussian_isometries():
    # over a commutative order tilde(f) f = I forces det(f) * conj(det(f)) = 1
    for f in enumerate_isometric(ZI, 1):
        assert determinant(f).norm() == 1


def test_kernel_report():
    rep = kernel_report(parse_curve(5, 1, 0))
    assert (rep.free_rank, rep.finite_order) == (1, 16)
    assert kernel_report(parse_curve(7, 1, 0)).finite_order == 64
    for p, a, b in [(11, 1, 3), (13, 2, 5), (101, 7, 9)]:
        rep = kernel_report(parse_curve(p, a, b))
        assert rep.finite_order == rep.point_count**2
