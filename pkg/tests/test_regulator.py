from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from addcycles import catalog as cat
from addcycles.cycles import make_C1, make_C2, materialize, star
from addcycles.regulator import r2, r2_point, vanishing_shortcuts
from addcycles.radicals import cbrt


def curve(z):
    return z.curves()[0]


def test_point_values():
    assert r2_point(curve(cat.Gamma1()), F(0)) == F(1, 4)
    assert r2_point(curve(cat.Gamma2()), F(0)) == F(-1, 24)
    assert r2_point(curve(cat.Q(3)), F(0)) == F(-9, 8)


def test_totals():
    assert r2(cat.Gamma1()) == F(1, 4)
    assert r2(cat.Gamma2()) == F(-1, 24)
    assert r2(cat.Gamma3()) == F(7, 24)
    assert r2(cat.Gamma3(repaired=True)) == F(7, 24)


def test_shortcuts():
    assert vanishing_shortcuts(curve(make_C1(F(1, 2), F(1, 2), 2))) == 0
    assert vanishing_shortcuts(curve(make_C2(F(1, 2), F(2, 3), F(3, 2)))) == 0
    assert vanishing_shortcuts(curve(cat.Gamma1())) is None


def test_ca_values():
    # a(1-a) holds with α = ∛2; with ∛(-2) the value is a² - a + 3/2
    a = F(1, 3)
    assert r2(cat.Ca(a, repaired=True)) == F(2, 9)
    assert r2(cat.Ca(a)) == F(23, 18)


def test_q_shifted_sign():
    a = F(2, 7)
    assert r2(cat.Q(1 - 2 * a)) == a * (1 - a) / 2 - F(1, 8)


nz = st.fractions(min_value=-8, max_value=8, max_denominator=6).filter(bool)


@settings(max_examples=30, deadline=None)
@given(nz, nz, nz)
def test_c_terms_vanish(a1, a2, b):
    if b == 1 or a1 + a2 == 0:
        return
    assert r2(make_C1(a1, a2, b)) == 0
    if b != -1 and b * b != 1:
        assert r2(make_C2(a1, b, a2 if a2 != 1 else 2)) == 0


@settings(max_examples=25, deadline=None)
@given(nz, nz)
def test_cubing(lam, c):
    z = cat.Gamma3() + cat.Q(c)
    assert r2(star(cbrt(lam), z)) == lam * r2(z)
    assert r2(materialize(star(lam, z))) == lam ** 3 * r2(z)
