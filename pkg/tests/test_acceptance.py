"""
Acceptance criteria 1-12.  Each test prints one PASS/FAIL line.  Expected
values are frozen literals (parsed from text) rather than recomputed.
"""

import random
from fractions import Fraction

from qhodge import calculus as cal
from qhodge import hodge as hd
from qhodge import laplacian as lp
from qhodge import linalg
from qhodge import podles as pod
from qhodge import quantum_group as qg
from qhodge.params import ALPHA, BETA, GAMMA, I, M, MC, ParamPoly, is_zero
from qhodge.parser import evaluate_text
from qhodge.scalar_field import ONE, ZERO, evaluate_at, qpow


def verdict(n, ok, detail=""):
    print(f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}")
    assert ok, detail


def _q(text):
    return evaluate_text(text)


# basis words (a, b) -> index 3a + b with 0 = wm, 1 = wp, 2 = wz
SIGMA_TABLE = {
    ("wm", "wm"): [("1", "wm", "wm")],
    ("wp", "wp"): [("1", "wp", "wp")],
    ("wz", "wz"): [("1", "wz", "wz")],
    ("wm", "wp"): [("1 - q^2", "wm", "wp"), ("q^-2", "wp", "wm")],
    ("wp", "wm"): [("q^4", "wm", "wp")],
    ("wm", "wz"): [("1 - q^2", "wm", "wz"), ("q^-4", "wz", "wm")],
    ("wz", "wm"): [("q^6", "wm", "wz")],
    ("wz", "wp"): [("1 - q^2", "wz", "wp"), ("q^-4", "wp", "wz")],
    ("wp", "wz"): [("q^6", "wz", "wp")],
}
IDX = {"wm": 0, "wp": 1, "wz": 2}


def test_criterion_01_braiding():
    want = linalg.zeros(9)
    for (x, y), terms in SIGMA_TABLE.items():
        for coeff, u, v in terms:
            want[3 * IDX[u] + IDX[v]][3 * IDX[x] + IDX[y]] = _q(coeff)
    s = cal.sigma_matrix()
    s1, s2 = cal.braid_operators(s)
    table = s == want
    braid = linalg.matmul(linalg.matmul(s1, s2), s1) == linalg.matmul(linalg.matmul(s2, s1), s2)
    at1 = [[evaluate_at(x, 1) for x in r] for r in s]
    flip = all(at1[3 * i + j][3 * j + i] == 1 for i in range(3) for j in range(3)) and \
        sum(1 for r in at1 for x in r if x) == 9
    verdict(1, table and braid and flip, f"table={table} braid={braid} flip_at_q1={flip}")


def test_criterion_02_antisymmetrizer_spectra():
    ext = cal.exterior_algebra()
    lam2, lam3 = _q("1 + q^2"), _q("1 + 2*q^2 + 2*q^4 + q^6")
    sq2 = linalg.matmul(ext.A2, ext.A2) == linalg.scale(ext.A2, lam2)
    sq3 = linalg.matmul(ext.A3, ext.A3) == linalg.scale(ext.A3, lam3)
    ranks = (linalg.rank(ext.A2), linalg.rank(ext.A3))
    q1 = (evaluate_at(lam2, 1), evaluate_at(lam3, 1))
    verdict(2, sq2 and sq3 and ranks == (3, 1) and q1 == (2, 6), f"ranks={ranks} eigenvalues_at_q1={q1}")


def test_criterion_03_wedge_relations():
    ext = cal.exterior_algebra()
    ker = linalg.nullspace(ext.A2)

    def vec(terms):
        v = [ZERO] * 9
        for coeff, x, y in terms:
            v[3 * IDX[x] + IDX[y]] = v[3 * IDX[x] + IDX[y]] + _q(coeff)
        return v

    rels = [vec([("1", x, x)]) for x in IDX] + [
        vec([("1", "wm", "wp"), ("q^-2", "wp", "wm")]),      # verbatim
        vec([("1", "wz", "wm"), ("q^4", "wm", "wz")]),
        vec([("1", "wz", "wp"), ("q^-4", "wp", "wz")]),      # the kernel fixes the second factor
    ]
    listed_last = vec([("1", "wz", "wp"), ("q^-4", "wm", "wz")])
    dim = len(ker)
    spans = linalg.same_span(ker, rels)
    verdict(3, dim == 6 and spans,
            f"dim ker={dim} spanned={spans} listed_wz_wp_in_kernel={linalg.in_span(ker, listed_last)}")


def test_criterion_04_calculus_identities():
    d = cal.differential0
    a, c, astar, cstar = qg.a, qg.c, qg.astar, qg.cstar
    q = _q("q")
    gens = (d(a).left_mul(astar) + d(c).left_mul(cstar) == cal.omega("wz")
          and d(astar).left_mul(cstar) - d(cstar).left_mul(astar).left_mul(q) == cal.omega("wm")
          and d(c).left_mul(a) - d(a).left_mul(c).left_mul(q) == cal.omega("wp"))
    rng = random.Random(2024)
    leib = True
    for _ in range(100):
        x = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        y = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        leib &= d(x * y) == d(x).right_mul(y) + d(y).left_mul(x)
    try:
        mc = cal.maurer_cartan()
        unique = [[str(v) for v in r] for r in mc] == [["0", "q^2 + q^4", "0"], ["0", "0", "-q^-2 - 1"],
                                                        ["-1", "0", "0"]]
    except ArithmeticError:
        unique = False
    dd = all(not cal.differential(d(qg.AlgebraElement.monomial(mo))) for mo in qg.monomials_up_to(2))
    verdict(4, gens and leib and unique and dd, f"generator_forms={gens} leibniz={leib} mc_unique={unique} d2={dd}")


def test_criterion_05_hodge_closed_form():
    H = hd.HodgeOperator(hd.Contraction(), M)
    sub = {"beta": ALPHA * qpow(6)}
    lam2, lam3 = _q("1 + q^2"), _q("1 + 2*q^2 + 2*q^4 + q^6")
    a, b, g, m = ALPHA, BETA, GAMMA, M
    z = ParamPoly.const(0)
    table = {
        (0, 0): [m],
        (1, 0): [z, -m * b * _q("q^-2"), z],
        (1, 1): [z, z, m * a],
        (1, 2): [m * g, z, z],
        (2, 0): [z, z, -2 * m * a * b / lam2],
        (2, 1): [2 * m * b * g * _q("q^-4") / lam2, z, z],
        (2, 2): [z, -2 * m * a * g * _q("q^6") / lam2, z],
        (3, 0): [-6 * m * a * b * g * _q("q^4") / lam3],
    }
    bad = [(k, r) for (k, r), want in table.items()
           if not all(is_zero((x - y).subs(sub)) for x, y in zip(H.on_basis(k, r), want))]
    verdict(5, not bad, f"mismatches={bad}")


def test_criterion_06_symmetry_classification():
    rng = random.Random(11)
    agree = []
    for i in range(20):
        g = hd.random_triple(rng, symmetric=bool(i % 2))
        agree.append(hd.is_symmetric(g) == (g.beta == g.alpha * qpow(6)))
    both = {bool(i % 2) for i in range(20)}
    real_ok = True
    for _ in range(10):
        g = hd.random_triple(rng, symmetric=True, complex_ok=True)
        real = all(not any(k[1] for k in x.terms) for x in (g.alpha, g.gamma))
        real_ok &= hd.is_real(g) == real
    star = hd.commutes_with_star(hd.HodgeOperator(hd.Contraction.symmetric()))
    verdict(6, all(agree) and both == {True, False} and real_ok and star,
            f"symmetric_iff={all(agree)} real_iff={real_ok} star_commutes={star}")


def test_criterion_07_normalization():
    gs = hd.Contraction.symmetric()
    ok = True
    detail = []
    lam2, lam3 = _q("1 + q^2"), _q("1 + 2*q^2 + 2*q^4 + q^6")
    for sign_gamma in (1, -1):
        sgn = -sign_gamma
        sq = hd.t_square_eigenvalues(gs, hd.volume_m_squared(gs, sign_gamma))
        want1 = ParamPoly.const(sgn * 2 * lam3 / (6 * qpow(4) * lam2))
        ok &= sq[0][0][0] == ParamPoly.const(sgn) and hd.is_scalar_matrix(sq[1]) and sq[1][0][0] == want1
        ok &= evaluate_at(want1.const_value(), 1) == sgn
    # numeric: q = 1/2, alpha = gamma = 1 against a direct float evaluation
    q0 = Fraction(1, 2)
    g1 = hd.Contraction.symmetric(1, 1)
    m2, m = hd.normalize_volume(g1, q0)
    H = hd.HodgeOperator(g1, M)
    t1 = H.matrices[1]
    t2 = H.matrices[2]
    direct = sum(float(t2[0][r].at_q(q0).subs({"m": 1}).evaluate(q0)) * float(t1[r][0].at_q(q0).subs({"m": 1})
                 .evaluate(q0)) for r in range(3)) * m * m
    closed = -float(2 * evaluate_at(lam3, q0) / (6 * q0 ** 4 * evaluate_at(lam2, q0)))
    ok &= abs(direct - closed) < 1e-12
    detail.append(f"T^2(w)@q=1/2: direct={direct:.15g} closed={closed:.15g}")
    signs = []
    for q in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for gam in (1, -1):
            signs.append(hd.det_sgn(hd.Contraction.symmetric(1, gam), M, q)[1] == -gam)
    ok &= all(signs)
    verdict(7, ok, "; ".join(detail) + f"; sgn=-sign(gamma) on {len(signs)} cases: {all(signs)}")


def test_criterion_08_sigma_inverse_family():
    rng = random.Random(5)
    same = True
    for i in range(10):
        g = hd.random_triple(rng, symmetric=bool(i % 2))
        same &= hd.is_symmetric(g, "sigma") == hd.is_symmetric(g, "sigma_inv")
        if i % 2:
            same &= hd.is_real(g, "sigma") == hd.is_real(g, "sigma_inv")
    gs = hd.Contraction.symmetric()
    wit = hd.commutator_witness(gs)
    pat = hd.eigenvalue_pattern(gs, "sigma")
    pat_inv = hd.eigenvalue_pattern(gs, "sigma_inv")
    verdict(8, same and wit is not None and pat is not None and pat == pat_inv,
            f"same_family={same} witness={wit} patterns={pat}")


def test_criterion_09_sphere():
    H = pod.SphereHodge()
    c, cstar = qg.c, qg.cstar
    vm = pod.SphereForm(1, [c * c, 0])
    vp = pod.SphereForm(1, [0, cstar * cstar])
    defining = all(is_zero(pod.sphere_defining_residual(H, f, f)) for f in (vm, vp))
    i, mc = I, MC
    one_forms = (pod.sphere_hodge(H, vm).components[0] == (c * c).scale(-i * mc * H.g.beta * _q("q^-2"))
            and pod.sphere_hodge(H, vp).components[1] == (cstar * cstar).scale(i * mc * H.g.alpha))
    m2 = H.m_squared() == H.g.alpha * H.g.beta * _q("1 + q^2") / 2
    samples = [pod.SphereForm(0, [c * cstar]), vm, vp, pod.SphereForm(2, [c * cstar])]
    diag = pod.sphere_hodge_square_is_diagonal(H, samples)
    Hn = pod.SphereHodge(hd.Contraction.symmetric(1, 1))
    sq = pod.sphere_hodge_square_factors(Hn, Hn.m_squared())
    vals = (sq["minus"].evaluate(Fraction(1, 2)), sq["plus"].evaluate(Fraction(1, 2)))
    adj = pod.adjudicate_top()
    definite = bool(adj["verdict"]) and not adj["verdict"].startswith("no candidate")
    verdict(9, defining and one_forms and m2 and diag and vals[0] != vals[1] and definite,
            f"one_form_factors={one_forms} mc^2={m2} diagonal={diag} T^2 on one-forms={vals} top: {adj['verdict']}")


def test_criterion_10_laplacian():
    a_ = ParamPoly.symbol("alpha")
    g_ = ParamPoly.symbol("gamma")
    gens = (not lp.box(qg.one, a_, g_)
            and lp.box(qg.c, a_, g_) == qg.c.scale(a_ + g_)
            and lp.box(qg.astar, a_, g_) == qg.astar.scale(a_ * _q("q^6") + g_ * _q("q^4")))
    q0 = Fraction(1, 2)
    pos = lp.numeric_box_matrix(lp.LaplaceParams(1, 1, q0), 3, 0)
    nonneg = lp.count_sign(pos.matrix, negative=True) == 0
    neg = lp.numeric_box_matrix(lp.LaplaceParams(1, -1, q0), 3, 0)
    n_neg = lp.count_sign(neg.matrix, negative=True)
    n_pos = lp.count_sign(neg.matrix, negative=False)
    mixed = n_neg > 0 and n_pos > 0
    full = lp.sign_summary(lp.spectrum_numeric(lp.numeric_box_matrix(lp.LaplaceParams(1, -1, q0), 2))[0])
    verdict(10, gens and nonneg and mixed,
            f"generators={gens} charge0(alpha=gamma=1) nonneg={nonneg}; "
            f"charge0(alpha=1,gamma=-1) negative={n_neg} positive={n_pos} "
            f"(the gamma term annihilates charge-0 elements, so this block does not see gamma); "
            f"full D=2 block at gamma=-1: {full}")


def test_criterion_11_haar():
    values = qg.solve_haar(4)
    inv = all(not l and not r for l, r in
              (qg.haar_invariance_defect(qg.AlgebraElement.monomial(mo)) for mo in qg.monomials_up_to(4)))
    cc = qg.haar(qg.c * qg.cstar) == _q("(1 - q^2)/(1 - q^4)")
    locked = {0: "1", 1: "1/(1 + q^2)", 2: "1/(1 + q^2 + q^4)"}
    pattern = all(values[qg.Monomial(False, 0, l, l)] == _q(v) for l, v in locked.items())
    others = all(not v for mo, v in values.items() if mo.k or mo.l != mo.m)
    verdict(11, inv and cc and pattern and others, f"invariance={inv} h(cc*)={cc} pattern={pattern} zeros={others}")


def test_criterion_12_defining_equation():
    H = hd.HodgeOperator(hd.Contraction.symmetric())
    bad = 0
    n = 0
    for k in range(4):
        nb = len(cal.BASIS_LIFTS[k])
        coeffs = [None] + [qg.AlgebraElement.monomial(mo) for mo in qg.monomials_up_to(2)]
        for x in coeffs:
            for p in range(nb):
                for j in range(nb):
                    pairs = [(cal.KForm.basis(k, p), cal.KForm.basis(k, j))] if x is None else \
                        [(cal.KForm.basis(k, p), cal.KForm.basis(k, j, x)), (cal.KForm.basis(k, p, x), cal.KForm.basis(k, j))]
                    for phi, psi in pairs:
                        n += 1
                        bad += not is_zero(hd.defining_residual(H, phi, psi))
    rng = random.Random(8)
    reported = []
    for _ in range(10):
        k = rng.randrange(4)
        nb = len(cal.BASIS_LIFTS[k])
        x = qg.AlgebraElement.monomial(qg.random_monomial(rng, 2))
        y = qg.AlgebraElement.monomial(qg.random_monomial(rng, 2))
        r = hd.defining_residual(H, cal.KForm.basis(k, rng.randrange(nb), x), cal.KForm.basis(k, rng.randrange(nb), y))
        reported.append(str(r))
    nonzero = sum(1 for r in reported if r != "0")
    verdict(12, bad == 0, f"{n} pinned pairs, {bad} nonzero residuals; doubly non-invariant samples: "
                          f"{nonzero}/{len(reported)} nonzero (reported only)")
