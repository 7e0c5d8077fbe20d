from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from addcycles.errors import AddCycleError
from addcycles.radicals import RadMonomial, RadScalar, cbrt, normalize


@pytest.mark.parametrize("q, c, want", [(1, -16, (-2, 2)), (1, -2, (-1, 2)), (3, F(1, 8), (F(3, 2), 1))])
def test_normalize(q, c, want):
    m = normalize(q, c)
    assert (m.q, m.c) == want


def test_alpha_cube():
    assert cbrt(-2).cube() == -2
    assert cbrt(F(-18, 7)).cube() == F(-18, 7)


def test_scalar_cancels():
    s = cbrt(2).as_scalar() + cbrt(2).as_scalar() - 2 * cbrt(2).as_scalar()
    assert s.is_zero()


def test_invert():
    m = normalize(-1, 2)
    assert m.invert() == normalize(F(-1, 2), 4)
    assert m.invert() * m == RadMonomial(F(1), 1)


def test_zero_radicand():
    with pytest.raises(AddCycleError):
        normalize(1, 0)


radicands = st.fractions(min_value=-40, max_value=40, max_denominator=12).filter(bool)


@settings(max_examples=40)
@given(radicands, radicands)
def test_monomial_laws(c1, c2):
    x, y = cbrt(c1), cbrt(c2)
    assert (x * y).cube() == c1 * c2
    assert x * x.invert() == RadMonomial(F(1), 1)
    assert normalize(x.q, x.c) == x


@settings(max_examples=40)
@given(radicands, radicands)
def test_scalar_distributes(c1, c2):
    x, y = cbrt(c1).as_scalar(), cbrt(c2).as_scalar()
    z = cbrt(c1 + 1 if c1 != -1 else 3).as_scalar()
    assert (x + y) * z == x * z + y * z
    assert isinstance(x + y, RadScalar)
