from fractions import Fraction

import pytest

from qhodge import calculus as cal
from qhodge import hodge as hd
from qhodge import podles as pod
from qhodge import quantum_group as qg
from qhodge.params import ALPHA, I, MC, ParamPoly, is_zero
from qhodge.scalar_field import ONE, Q, qpow

c, cstar, a = qg.c, qg.cstar, qg.a
VM = pod.SphereForm(1, [c * c, 0])
VP = pod.SphereForm(1, [0, cstar * cstar])


def test_membership():
    assert pod.sphere_membership(c * cstar)
    assert pod.sphere_membership(a * cstar)
    assert not pod.sphere_membership(c)


def test_form_check_rejects_wrong_sector():
    with pytest.raises(pod.ChargeError):
        pod.sphere_form_check(cal.KForm.basis(1, "wm"))
    with pytest.raises(pod.ChargeError):
        pod.sphere_form_check(cal.theta())
    f = pod.sphere_form_check(VM.to_kform())
    assert f.components[0] == c * c


def test_hodge_on_one_forms():
    H = pod.SphereHodge()
    beta = H.g.beta
    assert pod.sphere_hodge(H, VM).components[0] == (c * c).scale(-(I * MC * beta) * qpow(-2))
    assert pod.sphere_hodge(H, VP).components[1] == (cstar * cstar).scale(I * MC * H.g.alpha)
    for f in (VM, VP):
        assert is_zero(pod.sphere_defining_residual(H, f, f))


def test_scalar_product_sign():
    g = hd.Contraction.symmetric()
    sp = pod.restricted_scalar_product(VM, VM, g)
    want = -g.beta * ParamPoly.const(qg.haar(qg.star(c * c) * c * c))
    assert is_zero(sp - want)


def test_volume_scale():
    H = pod.SphereHodge()
    assert H.m_squared() == H.g.alpha * H.g.beta * (ONE + Q * Q) / 2


def test_square_not_constant_on_one_forms():
    H = pod.SphereHodge(hd.Contraction.symmetric(1, 1))
    sq = pod.sphere_hodge_square_factors(H, H.m_squared())
    q0 = Fraction(1, 2)
    assert sq["minus"].evaluate(q0) == Fraction(-5, 131072)
    assert sq["plus"].evaluate(q0) == Fraction(-5, 512)


def test_square_diagonal():
    H = pod.SphereHodge()
    samples = [pod.SphereForm(0, [c * cstar]), VM, VP, pod.SphereForm(2, [c * cstar])]
    assert pod.sphere_hodge_square_is_diagonal(H, samples)


def test_top_adjudication():
    adj = pod.adjudicate_top()
    assert not adj["quadratic_consistent"] and not adj["linear_consistent"]
    assert adj["verdict"].startswith("neither")
    H = pod.SphereHodge(top="consistent")
    top = pod.SphereForm(2, [1])
    assert is_zero(pod.sphere_defining_residual(H, top, top))
    unit = pod.SphereForm(0, [c * cstar])
    assert is_zero(pod.sphere_defining_residual(H, unit, unit))


def test_closure():
    assert pod.closed_under_d(pod.SphereForm(0, [c * cstar]))
    assert pod.closed_under_d(VM)
    assert pod.closed_under_wedge(VM, VP)
    assert pod.non_freeness_witness() is not None
