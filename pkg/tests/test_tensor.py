import random
from fractions import Fraction as F

import pytest

from addcycles.boundary import ZeroCycle, boundary
from addcycles.cycles import make_C1, make_C2
from addcycles.errors import AddCycleError
from addcycles.radicals import RadScalar, cbrt
from addcycles.tensor import TensorElem, cathelineau_tensor, f_map, g_map, prime_exponents


def test_g_simple():
    t = g_map(ZeroCycle.point(1, 2))
    assert t.coeffs == {2: RadScalar.rational(1)}


def test_g_radical():
    al = cbrt(-2)
    x = (2 * al).invert()
    t = g_map(ZeroCycle.point(x, 2))
    assert t.coeffs == {2: (2 * al).as_scalar()}


def test_prime_exponents():
    assert prime_exponents(F(-12, 5)) == ((2, 2), (3, 1), (5, -1))
    with pytest.raises(AddCycleError):
        prime_exponents(F(0))


def test_f_map():
    assert not f_map(0, 5)
    assert f_map(3, 5) == ZeroCycle.point(F(1, 3), 5)


def test_kills_c_boundaries():
    rng = random.Random(3)
    for _ in range(100):
        a1, a2, a = (F(rng.randint(-20, 20) or 1, rng.randint(1, 9)) for _ in range(3))
        b1, b2 = (F(rng.randint(2, 30), rng.randint(1, 9)) for _ in range(2))
        if a1 + a2 == 0 or b1 == 1 or b2 == 1 or b1 * b2 == 1:
            continue
        assert g_map(boundary(make_C1(a1, a2, b1))).is_zero()
        assert g_map(boundary(make_C2(a, b1, b2))).is_zero()


def test_cathelineau():
    assert cathelineau_tensor(2, 3).is_zero()
    assert cathelineau_tensor(F(1, 3), F(1, 4)).is_zero()
    with pytest.raises(AddCycleError):
        cathelineau_tensor(2, 2)


def test_f_then_g():
    rng = random.Random(11)
    for _ in range(100):
        a = F(rng.randint(-30, 30) or 1, rng.randint(1, 30))
        b = F(rng.randint(-30, 30) or 2, rng.randint(1, 30))
        if b == 1:
            continue
        assert g_map(f_map(a, b)) == TensorElem.simple(a, b)
