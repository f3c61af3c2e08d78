import pytest
from hypothesis import given, settings

from qhodge import calculus as cal
from qhodge import linalg
from qhodge import quantum_group as qg
from qhodge.scalar_field import ONE, Q, qpow

from strategies import elements

d = cal.differential0
wm, wp, wz = cal.omega("wm"), cal.omega("wp"), cal.omega("wz")


def _at1(mat):
    from qhodge.scalar_field import evaluate_at
    return [[evaluate_at(x, 1) for x in row] for row in mat]


def test_braid_relation_and_inverse():
    s = cal.sigma_matrix()
    s1, s2 = cal.braid_operators(s)
    assert linalg.matmul(linalg.matmul(s1, s2), s1) == linalg.matmul(linalg.matmul(s2, s1), s2)
    assert linalg.matmul(s, cal.sigma_inverse_matrix()) == linalg.identity(9)
    assert _at1(s) == _at1(cal.flip_matrix())


def test_antisymmetrizer_spectra():
    ext = cal.exterior_algebra()
    assert linalg.matmul(ext.A2, ext.A2) == linalg.scale(ext.A2, ONE + Q * Q)
    lam3 = ONE + 2 * Q ** 2 + 2 * Q ** 4 + Q ** 6
    assert linalg.matmul(ext.A3, ext.A3) == linalg.scale(ext.A3, lam3)
    assert (linalg.rank(ext.A2), linalg.rank(ext.A3)) == (3, 1)
    assert ext.kernels_nest()


def test_kernel_relations():
    ker = cal.wedge_relations()
    assert len(ker) == 6
    rep = cal.adjudicate_relations()
    assert rep["corrected_spans_kernel"]
    assert rep["wm^wp + q^-2 wp^wm"]
    assert not rep["wz^wp + q^-4 wm^wz"]
    assert rep["wz^wp + q^-4 wp^wz"]


def test_wedge_reductions():
    assert cal.wedge(wp, wm) == cal.wedge(wm, wp).left_mul(-Q * Q)
    assert cal.wedge(wz, wm) == cal.wedge(wm, wz).left_mul(-qpow(4))
    assert cal.wedge(wz, wp) == cal.wedge(wp, wz).left_mul(-qpow(-4))
    assert not cal.wedge(wm, wm)
    assert cal.wedge(wz, cal.wedge(wm, wp)) == cal.theta()


def test_generators_of_invariant_forms():
    a, c, astar, cstar = qg.a, qg.c, qg.astar, qg.cstar
    assert d(a).left_mul(astar) + d(c).left_mul(cstar) == wz
    assert d(astar).left_mul(cstar) - d(cstar).left_mul(astar).left_mul(Q) == wm
    assert d(c).left_mul(a) - d(a).left_mul(c).left_mul(Q) == wp


def test_maurer_cartan():
    assert cal.differential(wm) == cal.wedge(wm, wz).left_mul(Q ** 2 + Q ** 4)
    assert cal.differential(wp) == cal.wedge(wp, wz).left_mul(-(ONE + qpow(-2)))
    assert cal.differential(wz) == -cal.wedge(wm, wp)


def test_differential_degree_three_raises():
    with pytest.raises(ValueError):
        cal.differential(cal.theta())


@settings(max_examples=40)
@given(elements(3, 2), elements(3, 2))
def test_leibniz(x, y):
    assert d(x * y) == d(x).right_mul(y) + d(y).left_mul(x)


@settings(max_examples=30)
@given(elements(2, 2))
def test_d_squared_zero(x):
    assert not cal.differential(d(x))
    assert not cal.differential(cal.differential(d(x).left_mul(x)))


@settings(max_examples=30)
@given(elements(2, 2), elements(2, 2))
def test_graded_leibniz_on_one_forms(x, y):
    phi = d(x)
    psi = wm.left_mul(y)
    lhs = cal.differential(cal.wedge(phi, psi))
    rhs = cal.wedge(cal.differential(phi), psi) - cal.wedge(phi, cal.differential(psi))
    assert lhs == rhs


@settings(max_examples=30)
@given(elements(2, 2))
def test_star_involutive_and_commutes_with_d(x):
    f = d(x).left_mul(x)
    assert cal.star(cal.star(f)) == f
    assert cal.star(d(x)) == d(qg.star(x))


def test_star_on_basis():
    assert cal.star(wm) == -wp
    assert cal.star(wz) == -wz
    assert cal.star(cal.theta()) == cal.theta()


def test_commutation_weights():
    c, astar = qg.c, qg.astar
    # c has charge -1, a* has charge +1; weights 1, 1, 2
    assert wz.right_mul(c) == wz.left_mul(c * qpow(-2))
    assert wm.right_mul(astar) == wm.left_mul(astar * Q)
    assert cal.theta().right_mul(c) == cal.theta().left_mul(c * qpow(-4))


def test_json_round_trip():
    f = d(qg.a * qg.c).left_mul(qg.cstar)
    assert cal.KForm.from_json(f.to_json()) == f


def test_classical_structure():
    C = cal.classical_structure_constants()
    assert cal.jacobi_defect(C) == 0
    assert cal.totally_antisymmetric(cal.lowered_structure_constants(C))
