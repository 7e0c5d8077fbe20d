"""Acceptance criteria, one pass/fail line each (see the summary section).

The primary run uses the printed catalog.  The ``repaired`` parametrization
repeats the cycle-level criteria on the sign-corrected catalog.  Criteria
that are false as stated stay red.
"""

import random
from fractions import Fraction as F

import pytest

from addcycles import catalog as cat
from addcycles import claims
from addcycles.boundary import ZeroCycle, boundary, check_admissible
from addcycles.cycles import make_C1, make_C2, materialize, star
from addcycles.exact_arith import INFINITY, Poly, RatFunc, residue_at, zeros_poles
from addcycles.radicals import cbrt
from addcycles.regulator import r2
from addcycles.tensor import TensorElem, cathelineau_tensor, g_map

from .conftest import ACCEPTANCE

P = ZeroCycle.point
SEED = 2024
EDITIONS = [pytest.param(False, id="printed"), pytest.param(True, id="repaired")]


def record(cid, repaired, results):
    """``results`` is a list of (label, expected, computed); equality is exact."""
    bad = [(lab, e, c) for lab, e, c in results if e != c]
    edition = "repaired" if repaired else "printed"
    if bad:
        lab, e, c = bad[0]
        detail = f"{len(results) - len(bad)}/{len(results)} hold; first failure {lab}: expected {e}, got {c}"
    else:
        detail = f"{len(results)}/{len(results)} hold"
    ACCEPTANCE.append((cid, edition, "FAIL" if bad else "PASS", detail))
    assert not bad, detail


def rat(rng, nonzero=False):
    while True:
        q = F(rng.randint(-50, 50), rng.randint(1, 50))
        if q or not nonzero:
            return q


def sample(n, ok, arity=1, probes=(), seed=SEED):
    rng = random.Random(seed)
    out = [p for p in probes if ok(*p)]
    while len(out) < n:
        p = tuple(rat(rng) for _ in range(arity))
        if p not in out and ok(*p):
            out.append(p)
    return out[:n]


A_SAMPLES = sample(20, cat.qtilde_domain_ok, probes=[(F(1, 3),), (F(2),)])
D_SAMPLES = sample(20, cat.d_domain_ok, arity=2, probes=[(F(2), F(3)), (F(1, 3), F(1, 4))])


# 1, 2 ----------------------------------------------------------------------

def test_1_gamma1_regulator():
    record("1", False, [("R2(Γ1)", F(1, 4), r2(cat.Gamma1()))])


def test_2_gamma2_regulator():
    record("2", False, [("R2(Γ2)", F(-1, 24), r2(cat.Gamma2()))])


# 3 -------------------------------------------------------------------------

@pytest.mark.parametrize("repaired", EDITIONS)
def test_3_gamma_bar1_boundary(repaired):
    record("3.bar1", repaired, [("∂Γ̄1", P(1, 2), boundary(cat.GammaBar1(repaired)))])


@pytest.mark.parametrize("repaired", EDITIONS)
def test_3_gamma_bar2_boundary(repaired):
    record("3.bar2", repaired, [("∂Γ̄2", P(1, 2), boundary(cat.GammaBar2(repaired)))])


def test_3_face_equations():
    rows = []
    for fc in claims.gamma_faces():
        left, right = fc.evaluate()
        rows.append((fc.label, right, left))
    record("3.faces", False, rows)


@pytest.mark.parametrize("repaired", EDITIONS)
@pytest.mark.parametrize("k", range(12))
def test_3_telescoping_equation(k, repaired):
    eq = claims.gamma_bar2_chain(repaired)[k]
    left, right = eq.evaluate()
    record(f"3.{eq.label}", repaired, [(str(eq), right, left)])


# 4 -------------------------------------------------------------------------

@pytest.mark.parametrize("repaired", EDITIONS)
def test_4_gamma3(repaired):
    g3 = cat.Gamma3(repaired)
    record("4", repaired, [("∂Γ3", ZeroCycle(), boundary(g3)), ("R2(Γ3)", F(7, 24), r2(g3))])


# 5 -------------------------------------------------------------------------

def _c_params():
    rng = random.Random(SEED + 5)
    out = []
    while len(out) < 50:
        a1, a2, b = rat(rng, True), rat(rng, True), rat(rng, True)
        b2 = rat(rng, True)
        if a1 + a2 == 0 or 1 in (b, b2) or b * b2 == 1:
            continue
        out.append((a1, a2, b, b2))
    # probes for the a1 = a2 and generic branches; a1 + a2 = 0 is checked below
    out[0] = (F(1, 2), F(1, 2), F(2), F(3))
    out[1] = (F(3), F(3), F(5), F(7))
    out[2] = (F(2), F(5), F(-4), F(1, 3))
    return out


def test_5_c1_boundary_and_regulator():
    rows = []
    for a1, a2, b, _ in _c_params():
        z = make_C1(a1, a2, b)
        want = -P(1 / a1, b) - P(1 / a2, b) + P(1 / (a1 + a2), b)
        rows.append((f"∂C1({a1},{a2};{b})", want, boundary(z)))
        rows.append((f"R2(C1({a1},{a2};{b}))", 0, r2(z)))
    # a1 + a2 = 0 branch: the third point is absent
    z = make_C1(3, -3, 5)
    rows.append(("∂C1(3,-3;5)", -P(F(1, 3), 5) - P(F(-1, 3), 5), boundary(z)))
    rows.append(("R2(C1(3,-3;5))", 0, r2(z)))
    record("5.C1", False, rows)


def test_5_c2_boundary_and_regulator():
    rows = []
    for a, _, b1, b2 in _c_params():
        z = make_C2(a, b1, b2)
        want = P(1 / a, b1) + P(1 / a, b2) - P(1 / a, b1 * b2)
        rows.append((f"∂C2({a};{b1},{b2})", want, boundary(z)))
        rows.append((f"R2(C2({a};{b1},{b2}))", 0, r2(z)))
    record("5.C2", False, rows)


def test_5_seed_deterministic():
    record("5.seed", False, [("same seed, same tuples", _c_params(), _c_params())])


# 6 -------------------------------------------------------------------------

def test_6_q():
    rows = [(f"R2(Q({a}))", -a * a / 8, r2(cat.Q(a))) for (a,) in sample(20, lambda a: a != 0)]
    record("6.Q(a)", False, rows)


def test_6_q_shifted():
    rows = [(f"R2(Q(1-2a)), a={a}", -F(1, 2) * a * (1 - a) - F(1, 8), r2(cat.Q(1 - 2 * a)))
            for (a,) in A_SAMPLES]
    record("6.Q(1-2a)", False, rows)


# 7 -------------------------------------------------------------------------

@pytest.mark.parametrize("repaired", EDITIONS)
def test_7_qtilde_boundary(repaired):
    rows = []
    for (a,) in A_SAMPLES:
        want = P(1 / a, a) + P(1 / (1 - a), 1 - a) + P(1, 2)
        rows.append((f"∂Q̃({a})", want, boundary(cat.Qtilde(a, repaired))))
    record("7", repaired, rows)


# 8 -------------------------------------------------------------------------

@pytest.mark.parametrize("repaired", EDITIONS)
def test_8_ca_regulator(repaired):
    rows = [(f"R2(C_{a})", a * (1 - a), r2(cat.Ca(a, repaired))) for (a,) in A_SAMPLES]
    record("8.R2", repaired, rows)


@pytest.mark.parametrize("repaired", EDITIONS)
def test_8_ca_boundary(repaired):
    al = cat.alpha(repaired)
    rows = []
    for (a,) in A_SAMPLES:
        want = (P(1 / a, a) + P(1 / (1 - a), 1 - a)).star(al)
        rows.append((f"∂C_{a}", want, boundary(cat.Ca(a, repaired))))
    record("8.∂", repaired, rows)


@pytest.mark.parametrize("repaired", EDITIONS)
def test_8_scales(repaired):
    record("8.scales", repaired, [
        ("cube(α)", F(-2), cat.alpha(repaired).cube()),
        ("cube(α')", F(-18, 7), cat.alpha_prime(repaired).cube()),
    ])


# 9 -------------------------------------------------------------------------

@pytest.mark.parametrize("repaired", EDITIONS)
def test_9_d_regulator(repaired):
    rows = [(f"R2(D({a},{b}))", 0, r2(cat.D(a, b, repaired))) for a, b in D_SAMPLES]
    record("9.R2", repaired, rows)


@pytest.mark.parametrize("repaired", EDITIONS)
def test_9_d_tensor(repaired):
    rows = [(f"g(∂D({a},{b}))", TensorElem(), cathelineau_tensor(a, b, repaired)) for a, b in D_SAMPLES]
    record("9.g", repaired, rows)


# 10 ------------------------------------------------------------------------

def _random_ratfunc(rng):
    def split():
        p = Poly([rat(rng, True)])
        for _ in range(rng.randint(0, 3)):
            p = p * Poly([-rat(rng), 1])
        return p
    return RatFunc(split(), split())


def test_10_residue_sum():
    rng = random.Random(SEED + 10)
    rows = []
    for k in range(200):
        f = _random_ratfunc(rng)
        pts = set(zeros_poles(f, INFINITY)) | {INFINITY}
        rows.append((f"Σ res {f}", 0, sum(residue_at(f, p) for p in pts)))
    record("10.residues", False, rows)


def _catalog():
    return [
        cat.Gamma1(), cat.Gamma2(), cat.GammaBar1(), cat.GammaBar2(), cat.Gamma3(),
        cat.Q(3), cat.Qtilde(F(1, 3)), cat.Ca(2), cat.D(F(2), F(3)),
    ]


def test_10_star_equivariance():
    rows = []
    for z in _catalog():
        for lam in (F(2), F(-3, 5), cbrt(-2), cbrt(F(5, 4))):
            lam_m = lam if not isinstance(lam, F) else cbrt(lam ** 3)
            rows.append((f"R2({lam}*z)", lam_m.cube() * r2(z), r2(star(lam, z))))
            rows.append((f"∂({lam}*z)", boundary(z).star(lam_m), boundary(star(lam, z))))
        if all(sc.is_rational() for _, sc, _ in z.terms()):
            rows.append(("R2(2*z) materialized", 8 * r2(z), r2(materialize(star(2, z)))))
    record("10.star", False, rows)


def test_10_g_kills_c():
    rng = random.Random(SEED + 100)
    rows = []
    while len(rows) < 100:
        a1, a2, b, b2 = (rat(rng, True) for _ in range(4))
        if a1 + a2 == 0 or 1 in (b, b2) or b * b2 == 1:
            continue
        rows.append((f"g∂C1({a1},{a2};{b})", TensorElem(), g_map(boundary(make_C1(a1, a2, b)))))
        rows.append((f"g∂C2({a1};{b},{b2})", TensorElem(), g_map(boundary(make_C2(a1, b, b2)))))
    record("10.g", False, rows)


def test_10_admissible():
    rows = []
    for z in _catalog():
        for c in z.curves():
            rows.append((str(c), True, check_admissible(c).admissible))
    record("10.admissible", False, rows)
