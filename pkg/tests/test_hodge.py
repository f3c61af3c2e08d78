import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhodge import calculus as cal
from qhodge import hodge as hd
from qhodge import quantum_group as qg
from qhodge.params import ALPHA, BETA, GAMMA, M, ParamPoly, is_zero
from qhodge.scalar_field import ONE, Q, evaluate_at, qpow

GS = hd.Contraction.symmetric()
nonzero = st.integers(-6, 6).filter(bool)


def test_closed_form_table_generic():
    H = hd.HodgeOperator(hd.Contraction())
    assert all(all(is_zero(x) for x in v) for v in hd.compare_with_table(H).values())


def test_top_degree_value():
    H = hd.HodgeOperator(GS)
    lam3 = cal.exterior_algebra().lambda3
    want = -6 * qpow(4) * M * ALPHA * BETA * GAMMA / ParamPoly.const(lam3)
    assert is_zero((H.on_basis(3, 0)[0] - want).subs({"beta": ALPHA * qpow(6)}))


@settings(max_examples=20, deadline=None)
@given(nonzero, nonzero, st.integers(-3, 8), st.booleans())
def test_symmetric_iff_beta_q6_alpha(a, gam, p, on_line):
    beta = ParamPoly.const(a) * qpow(6 if on_line else p)
    g = hd.Contraction(ParamPoly.const(a), beta, ParamPoly.const(gam))
    assert hd.is_symmetric(g) == (beta == ParamPoly.const(a) * qpow(6))


def test_reality_and_star_commutation():
    rng = random.Random(5)
    for _ in range(8):
        g = hd.random_triple(rng, symmetric=True, complex_ok=True)
        real = all(not any(k[1] for k in x.terms) for x in (g.alpha, g.gamma))
        assert hd.is_real(g) == real
    assert hd.commutes_with_star(hd.HodgeOperator(GS))


@pytest.mark.parametrize("sign_gamma", [1, -1])
def test_normalized_square(sign_gamma):
    sgn = -sign_gamma
    sq = hd.t_square_eigenvalues(GS, hd.volume_m_squared(GS, sign_gamma))
    lam2, lam3 = cal.spectrum_values()
    assert sq[0][0][0] == ParamPoly.const(sgn)
    assert hd.is_scalar_matrix(sq[1])
    assert sq[1][0][0] == ParamPoly.const(sgn * 2 * lam3 / (6 * qpow(4) * lam2))


@pytest.mark.parametrize("q0", [Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)])
@pytest.mark.parametrize("gam", [1, -2, 3])
def test_sign_is_minus_sign_gamma(q0, gam):
    _, s = hd.det_sgn(hd.Contraction.symmetric(1, gam), M, q0)
    assert s == (-1 if gam > 0 else 1)


def test_normalize_volume_numeric():
    g = hd.Contraction.symmetric(1, 1)
    m2, m = hd.normalize_volume(g, Fraction(1, 2))
    assert m2 == 280 and abs(m * m - 280) < 1e-9


def test_degenerate_rejected():
    with pytest.raises(ArithmeticError):
        hd.det_sgn(hd.Contraction(0, 1, 1), M, Fraction(1, 2))


def test_sigma_inverse_family():
    assert hd.is_symmetric(GS, "sigma_inv")
    assert not hd.is_symmetric(hd.Contraction(), "sigma_inv")
    wit = hd.commutator_witness(GS)
    assert wit is not None and wit["degree"] == 1
    assert hd.eigenvalue_pattern(GS, "sigma") == hd.eigenvalue_pattern(GS, "sigma_inv") == \
        {0: [1], 1: [3], 2: [3], 3: [1]}


def test_defining_equation_basis_and_samples():
    H = hd.HodgeOperator(GS)
    for k in range(4):
        n = len(cal.BASIS_LIFTS[k])
        for mo in qg.monomials_up_to(2):
            x = qg.AlgebraElement.monomial(mo)
            for p in range(n):
                for j in range(n):
                    assert is_zero(hd.defining_residual(H, cal.KForm.basis(k, p), cal.KForm.basis(k, j, x)))
                    assert is_zero(hd.defining_residual(H, cal.KForm.basis(k, p, x), cal.KForm.basis(k, j)))


def test_hodge_left_linear():
    H = hd.HodgeOperator(GS)
    x = qg.a * qg.cstar
    f = cal.omega("wm").left_mul(x)
    assert hd.hodge_T(H, f) == hd.hodge_T(H, cal.omega("wm")).left_mul(x)


def test_report_keys():
    rep = hd.report(hd.Contraction.symmetric(1, 1), Fraction(1, 2))
    assert rep["symmetric"] and rep["real"] and rep["matches_closed_form"]
    assert rep["sgn"] == -1 and rep["m_squared"] == "280"
