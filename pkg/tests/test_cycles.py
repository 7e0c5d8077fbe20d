from fractions import Fraction as F

import pytest

from addcycles import catalog as cat
from addcycles.cycles import CycleSum, ParamCurve, make_C1, make_C2, star
from addcycles.errors import AddCycleError
from addcycles.exact_arith import parse_ratfunc as rf
from addcycles.radicals import cbrt, normalize


def only_curve(z):
    (curve,) = z.curves()
    return curve.coords()


def test_c1_degenerate():
    assert not make_C1(0, 5, 7)


def test_c1_branches():
    assert only_curve(make_C1(F(1, 2), F(1, 2), 2)) == (rf("t"), rf("(1-t/2)^2/(1-t)"), rf("2"))
    assert only_curve(make_C1(3, -3, 5)) == (rf("t"), rf("1-9*t^2"), rf("5"))


def test_c2():
    assert not make_C2(0, 2, 3)
    assert only_curve(make_C2(F(1, 2), F(2, 3), F(3, 2))) == (rf("2"), rf("t"), rf("((2/3)*t-1)/(t-1)"))
    assert only_curve(make_C2(F(-1, 6), 4, -2)) == (rf("-6"), rf("t"), rf("(4*t+8)/(t+8)"))


def test_star_scales():
    z = cat.Gamma1()
    al = cbrt(-2)
    (_, s, _), = star(al, star(al, z)).terms()
    assert s == cbrt(4)
    (_, s, _), = star(2, star(al, z)).terms()
    assert s == normalize(-2, 2)


def test_cycle_sum_merges():
    c = make_C1(1, 1, 2)
    assert c + c == 2 * c
    assert not (c - c)
    assert c + make_C2(1, 2, 3) == make_C2(1, 2, 3) + c


def test_gamma3_terms():
    g3 = cat.Gamma3()
    labels = [str(c) for c in g3.curves()]
    assert sum(1 for s in labels if s.startswith("C1")) == 5
    assert sum(1 for s in labels if s.startswith("C2")) == 6
    assert len(labels) == 13


def test_qtilde_contains():
    assert make_C1(F(1, 3), F(2, 3), 2).curves()[0] in cat.Qtilde(F(1, 3)).curves()


def test_ca_scales():
    scales = {s for _, s, _ in cat.Ca(2).terms()}
    assert scales == {cbrt(-2), cbrt(F(-18, 7))}


@pytest.mark.parametrize("a", [0, F(1, 2), 1, F(-1, 2)])
def test_qtilde_domain(a):
    with pytest.raises(AddCycleError):
        cat.Qtilde(a)


def test_d_domain():
    with pytest.raises(AddCycleError):
        cat.D(2, 2)


def test_bad_curves():
    with pytest.raises(AddCycleError):
        ParamCurve(rf("t"), rf("1"), rf("t"))
    with pytest.raises(AddCycleError):
        ParamCurve(rf("0"), rf("t"), rf("t"))


def test_type_checks():
    with pytest.raises(TypeError):
        CycleSum([(F(1, 2), cbrt(1), make_C1(1, 1, 2).curves()[0])])
