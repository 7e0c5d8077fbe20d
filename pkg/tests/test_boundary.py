from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcycles import catalog as cat
from addcycles.boundary import ZeroCycle, boundary, check_admissible, face_intersections, face_points
from addcycles.cycles import ParamCurve, make_C1, make_C2, star
from addcycles.errors import AddCycleError
from addcycles.exact_arith import INFINITY, parse_ratfunc as rf
from addcycles.radicals import cbrt

P = ZeroCycle.point


def curve(z):
    return z.curves()[0]


def test_face_points():
    assert face_points(curve(cat.Gamma2()), 1, 0) == P(-6, -8)
    assert face_points(curve(cat.Gamma1()), 2, 0) == P(2, 2, 2)
    assert not face_points(curve(make_C2(3, 5, 7)), 1, 0)


def test_boundary_examples():
    a1, a2, b = F(2), F(-1, 3), F(5)
    want = -P(1 / a1, b) - P(1 / a2, b) + P(1 / (a1 + a2), b)
    assert boundary(make_C1(a1, a2, b)) == want
    assert boundary(cat.GammaBar1()) == P(1, 2)
    assert str(boundary(cat.GammaBar1())) == "+1·(1, 2)"
    assert not boundary(cat.Gamma3(repaired=True))


def test_point_rules():
    assert not P(3, 1)
    with pytest.raises(AddCycleError):
        P(0, 2)
    with pytest.raises(AddCycleError):
        P(1, 0)


def test_admissibility():
    rep = check_admissible(curve(cat.Gamma2()))
    assert rep.admissible and rep.modulus == {F(0): {"t2"}}
    rep = check_admissible(curve(make_C2(F(1, 2), F(2, 3), F(3, 2))))
    assert rep.admissible and rep.modulus == {}
    rep = check_admissible(ParamCurve(rf("t"), rf("1+t"), rf("5")))
    assert not rep.admissible and rep.violations


def test_catalog_admissible():
    for z in (cat.Gamma3(), cat.Qtilde(F(1, 3)), cat.Ca(2)):
        assert all(check_admissible(c).admissible for c in z.curves())


def test_inadmissible_boundary_point():
    # t1 = 0 at t = 0 where x = 0
    with pytest.raises(AddCycleError):
        face_points(ParamCurve(rf("t"), rf("t"), rf("2")), 1, 0)


def test_face_at_infinity_dropped():
    # x has a pole where t1 does: the point leaves ◊₁
    c = ParamCurve(rf("1/t"), rf("1/t"), rf("3"))
    assert not face_points(c, 1, INFINITY)


nz = st.fractions(min_value=-9, max_value=9, max_denominator=7).filter(bool)


@settings(max_examples=40, deadline=None)
@given(nz, nz, nz)
def test_star_equivariance(a, b, lam_c):
    if b == 1 or b == 0:
        return
    z = make_C2(a, b, 3) + cat.Gamma1()
    lam = cbrt(lam_c)
    assert boundary(star(lam, z)) == boundary(z).star(lam)


def test_multiplicity_conservation():
    # zeros and poles of t2, kept or dropped, both count deg t2
    for z in (cat.Gamma1(), cat.Gamma2(), cat.Q(3)):
        c = curve(z)
        for j in (0, INFINITY):
            assert sum(h.mult for h in face_intersections(c, 2, j)) == c.t2.degree
