from fractions import Fraction as F

import pytest

from addcycles import catalog as cat
from addcycles import claims
from addcycles.tensor import g_map


def failing(eqs):
    return [e.label for e in eqs if not e.holds()]


def test_face_claims_hold():
    assert all(f.holds() for f in claims.gamma_faces())
    assert all(f.holds() for f in claims.q_faces(F(1, 3)))


@pytest.mark.parametrize("a", [F(1, 3), F(2), F(-3, 7)])
def test_printed_failures(a):
    assert failing(claims.gamma_bar2_chain()) == ["G6", "G7", "G8"]
    assert failing(claims.q_chain(1 - 2 * a)) == ["E4", "E7", "E8"]
    assert failing(claims.qtilde_chain(a)) == ["F5"]


@pytest.mark.parametrize("a", [F(1, 3), F(2), F(-3, 7)])
def test_repaired_chains(a):
    assert failing(claims.gamma_bar2_chain(True)) == []
    assert failing(claims.q_chain(1 - 2 * a, True)) == []
    assert failing(claims.qtilde_chain(a, True)) == []
    left, right = claims.q_intermediate(1 - 2 * a, True)
    assert left == right


def test_printed_leftovers_are_classwise_zero():
    for eq in claims.gamma_bar2_chain() + claims.q_chain(F(1, 3)):
        left, right = eq.evaluate()
        assert g_map(left) == g_map(right)


def test_qtilde_consistency():
    a = F(1, 3)
    assert cat.Qtilde(a, True) == claims.qtilde_from_chains(a, True)
    assert cat.Qtilde(a) != claims.qtilde_from_chains(a)
