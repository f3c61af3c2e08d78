"""Verification suites behind `qhodge verify`.  Each returns [(name, ok, detail)]."""

from __future__ import annotations

import random
from fractions import Fraction

from . import calculus as cal
from . import enveloping as env
from . import hodge as hd
from . import laplacian as lp
from . import linalg
from . import podles as pod
from . import quantum_group as qg
from .params import ALPHA, GAMMA, I, M, MC, ParamPoly, is_zero
from .scalar_field import ONE, Q, qpow


class _Collector(list):
    def check(self, name, ok, detail=""):
        self.append((name, bool(ok), str(detail)))


def hopf_suite(seed: int = 0):
    out = _Collector()
    rng = random.Random(seed)
    a, astar, c, cstar = qg.a, qg.astar, qg.c, qg.cstar
    out.check("u*u = 1 and u u* = 1",
              astar * a + cstar * c == 1 and a * astar + (c * cstar).scale(Q * Q) == 1)
    out.check("rewriting relations confluent", not qg.RELATIONS.check_overlaps())
    out.check("enveloping relations confluent", not env.UEA_RELATIONS.check_overlaps())
    ok_mult = ok_coass = ok_counit = ok_anti = ok_star = ok_rw = True
    for _ in range(25):
        x = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        y = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        ok_mult &= qg.coproduct(x * y) == qg.coproduct(x) * qg.coproduct(y)
        d = qg.coproduct(x)
        ok_counit &= d.apply(lambda t: qg.AlgebraElement.scalar(qg.counit(t)), lambda t: t) == \
            qg.TensorElement.pure(qg.one, x)
        ok_anti &= qg.tensor_multiply(d.apply(qg.antipode, lambda t: t)) == \
            qg.AlgebraElement.scalar(qg.counit(x))
        ok_star &= qg.star(x * y) == qg.star(y) * qg.star(x) and qg.star(qg.star(x)) == x
        word = qg.random_word(rng, 5)
        direct = qg.normal_form(word)
        ok_rw &= qg.normal_form_rewriting(word, "random") == direct
    for _ in range(6):
        ok_coass &= _coassociative(qg.AlgebraElement.monomial(qg.random_monomial(rng, 2)))
    out.check("coproduct multiplicative (25 samples)", ok_mult)
    out.check("counit axiom", ok_counit)
    out.check("antipode axiom m(S (x) id)Delta = eps", ok_anti)
    out.check("star anti-multiplicative and involutive", ok_star)
    out.check("random-strategy rewriting equals direct normal form", ok_rw)
    out.check("coassociativity", ok_coass)
    values = qg.solve_haar(4)
    closed = all(values[mo] == qg.haar_monomial(mo) for mo in values)
    out.check("Haar solver matches closed form (degree <= 4)", closed)
    defects = [qg.haar_invariance_defect(qg.AlgebraElement.monomial(mo)) for mo in qg.monomials_up_to(4)]
    out.check("Haar two-sided invariance (degree <= 4)", all(not l and not r for l, r in defects))
    out.check("haar(c c*) = (1-q^2)/(1-q^4)", qg.haar(c * cstar) == (ONE - Q * Q) / (ONE - qpow(4)))
    out.check("pairing star convention", not env.star_compatibility_defects())
    out.check("d a = a wz - q cs wp", cal.differential0(a) ==
              cal.KForm(1, [qg.AlgebraElement(), cstar.scale(-Q), a]))
    return out


def _coassociative(x) -> bool:
    """(Delta (x) id) Delta x = (id (x) Delta) Delta x, compared as triple tensors."""
    left, right = {}, {}
    for (m1, m2), v in qg.coproduct(x).terms.items():
        for (n1, n2), w in qg.coproduct(qg.AlgebraElement.monomial(m1)).terms.items():
            k = (n1, n2, m2)
            left[k] = left.get(k, 0) + v * w
        for (n1, n2), w in qg.coproduct(qg.AlgebraElement.monomial(m2)).terms.items():
            k = (m1, n1, n2)
            right[k] = right.get(k, 0) + v * w
    left = {k: v for k, v in left.items() if v}
    right = {k: v for k, v in right.items() if v}
    return left == right


def calculus_suite(seed: int = 0, leibniz_samples: int = 100):
    out = _Collector()
    rng = random.Random(seed)
    sigma = cal.sigma_matrix()
    s1, s2 = cal.braid_operators(sigma)
    out.check("braid relation", linalg.matmul(linalg.matmul(s1, s2), s1) ==
              linalg.matmul(linalg.matmul(s2, s1), s2))
    out.check("sigma sigma^-1 = 1", linalg.matmul(sigma, cal.sigma_inverse_matrix()) == linalg.identity(9))
    ext = cal.exterior_algebra()
    out.check("A2^2 = (1+q^2) A2", ext.lambda2 == ONE + Q * Q, ext.lambda2)
    out.check("A3^2 = (1+2q^2+2q^4+q^6) A3", ext.lambda3 == ONE + 2 * Q ** 2 + 2 * Q ** 4 + Q ** 6, ext.lambda3)
    out.check("rank A2 = 3, rank A3 = 1", linalg.rank(ext.A2) == 3 and linalg.rank(ext.A3) == 1)
    rel = cal.adjudicate_relations()
    out.check("ker A2 spanned by the wedge relations", rel["corrected_spans_kernel"] and rel["wm^wp + q^-2 wp^wm"])
    out.check("wedge well defined (kernels nest)", ext.kernels_nest())
    inv = cal.exterior_algebra("sigma_inv")
    out.check("sigma^-1 antisymmetrisers: ranks 3, 1 and degenerate spectra",
              linalg.rank(inv.A2) == 3 and linalg.rank(inv.A3) == 1 and bool(inv.lambda2) and bool(inv.lambda3))
    a, c, astar, cstar = qg.a, qg.c, qg.astar, qg.cstar
    d = cal.differential0
    wz = d(a).left_mul(astar) + d(c).left_mul(cstar)
    wm = d(astar).left_mul(cstar) - d(cstar).left_mul(astar).left_mul(Q)
    wp = d(c).left_mul(a) - d(a).left_mul(c).left_mul(Q)
    out.check("wz = a* da + c* dc", wz == cal.omega("wz"))
    out.check("wm = c* da* - q a* dc*", wm == cal.omega("wm"))
    out.check("wp = a dc - q c da", wp == cal.omega("wp"))
    ok = True
    for _ in range(leibniz_samples):
        x = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        y = qg.AlgebraElement.monomial(qg.random_monomial(rng, 3))
        ok &= d(x * y) == d(x).right_mul(y) + d(y).left_mul(x)
    out.check(f"Leibniz on {leibniz_samples} random monomial pairs", ok)
    try:
        mc = cal.maurer_cartan()
        out.check("Maurer-Cartan solve unique", True, [[str(v) for v in r] for r in mc])
    except ArithmeticError as exc:
        out.check("Maurer-Cartan solve unique", False, exc)
    dd = all(not cal.differential(d(qg.AlgebraElement.monomial(mo))) for mo in qg.monomials_up_to(2))
    out.check("d^2 = 0 on monomials of degree <= 2", dd)
    samples = [d(c).left_mul(a), cal.wedge(d(a), d(cstar)), cal.omega("wm").left_mul(c * c)]
    out.check("star involutive on forms", all(cal.star(cal.star(f)) == f for f in samples))
    out.check("star(wm) = -wp, star(wz) = -wz",
              cal.star(cal.omega("wm")) == -cal.omega("wp") and cal.star(cal.omega("wz")) == -cal.omega("wz"))
    out.check("wz ^ wm ^ wp = theta",
              cal.wedge(cal.omega("wz"), cal.wedge(cal.omega("wm"), cal.omega("wp"))) == cal.theta())
    return out


def hodge_suite(seed: int = 0):
    out = _Collector()
    rng = random.Random(seed)
    H = hd.HodgeOperator(hd.Contraction())
    table = hd.compare_with_table(H)
    out.check("solved T equals closed-form table", all(all(is_zero(x) for x in v) for v in table.values()))
    agree = True
    for i in range(20):
        g = hd.random_triple(rng, symmetric=bool(i % 2))
        predicate = g.beta == g.alpha * qpow(6)
        agree &= hd.is_symmetric(g) == predicate
    out.check("is_symmetric <=> beta = q^6 alpha (20 triples)", agree)
    agree = True
    for i in range(10):
        g = hd.random_triple(rng, symmetric=True, complex_ok=True)
        real = all(not any(k[1] for k in x.terms) for x in (g.alpha, g.gamma))
        agree &= hd.is_real(g) == real
    out.check("is_real <=> real parameters on the symmetric line", agree)
    gs = hd.Contraction.symmetric()
    out.check("[T, star] = 0 on all basis forms", hd.commutes_with_star(hd.HodgeOperator(gs)))
    sg = 1
    m2 = hd.volume_m_squared(gs, sg)
    sq = hd.t_square_eigenvalues(gs, m2)
    lam2, lam3 = cal.spectrum_values()
    want1 = ParamPoly.const(-sg * 2 * lam3 / (6 * qpow(4) * lam2))
    out.check("T^2(1) = sgn(g) after normalisation", sq[0][0][0] == ParamPoly.const(-sg))
    out.check("T^2(w_a) = sgn(g) 2 lambda3 / (6 q^4 lambda2)", hd.is_scalar_matrix(sq[1]) and sq[1][0][0] == want1)
    signs_ok = True
    for q0 in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
        for gam in (1, -1, 3):
            _, s = hd.det_sgn(hd.Contraction.symmetric(1, gam), M, q0)
            signs_ok &= s == (-1 if gam > 0 else 1)
    out.check("sgn(g) = -sign(gamma)", signs_ok)
    wit = hd.commutator_witness(gs)
    out.check("[T, T_sigma^-1] != 0 witness", wit is not None, wit)
    out.check("symmetric family identical for sigma^-1",
              hd.is_symmetric(gs, "sigma_inv") and not hd.is_symmetric(hd.Contraction(), "sigma_inv"))
    pat = hd.eigenvalue_pattern(gs, "sigma")
    out.check("T^2 and T'^2 multiplicity patterns agree",
              pat is not None and pat == hd.eigenvalue_pattern(gs, "sigma_inv"), pat)
    Hs = hd.HodgeOperator(gs)
    bad = []
    for k in range(4):
        for p in range(len(cal.BASIS_LIFTS[k])):
            for j in range(len(cal.BASIS_LIFTS[k])):
                r = hd.defining_residual(Hs, cal.KForm.basis(k, p), cal.KForm.basis(k, j))
                if r:
                    bad.append((k, p, j, str(r)))
    out.check("defining equation on invariant basis pairs", not bad, bad[:3])
    return out


def sphere_suite():
    out = _Collector()
    c, cstar = qg.c, qg.cstar
    H = pod.SphereHodge()
    vm = pod.SphereForm(1, [c * c, 0])
    vp = pod.SphereForm(1, [0, cstar * cstar])
    beta = H.g.beta
    out.check("T(v- w-) = -i q^-2 mc beta v- w-",
              pod.sphere_hodge(H, vm).components[0] == (c * c).scale(-(I * MC * beta) * qpow(-2)))
    out.check("T(v+ w+) = i mc alpha v+ w+",
              pod.sphere_hodge(H, vp).components[1] == (cstar * cstar).scale(I * MC * H.g.alpha))
    out.check("1-form samples satisfy the restricted defining equation",
              all(is_zero(pod.sphere_defining_residual(H, f, f)) for f in (vm, vp)))
    out.check("mc^2 = lambda2 alpha beta / 2", H.m_squared() == H.g.alpha * H.g.beta * (ONE + Q * Q) / 2)
    g = hd.Contraction.symmetric(1, 1)
    Hn = pod.SphereHodge(g)
    sq = pod.sphere_hodge_square_factors(Hn, Hn.m_squared())
    q0 = Fraction(1, 2)
    vals = (sq["minus"].evaluate(q0), sq["plus"].evaluate(q0))
    out.check("T^2 not constant on one-forms (q=1/2)", vals[0] != vals[1], vals)
    samples = [pod.SphereForm(0, [c * cstar]), vm, vp, pod.SphereForm(2, [c * cstar])]
    out.check("T^2 diagonal on the four summands", pod.sphere_hodge_square_is_diagonal(H, samples))
    adj = pod.adjudicate_top()
    definite = adj["quadratic_consistent"] != adj["linear_consistent"] or \
        "neither" in adj["verdict"]
    out.check("top-degree coefficient adjudicated", definite, adj["verdict"])
    out.check("closed under d", all(pod.closed_under_d(f) for f in samples[:3]))
    out.check("closed under wedge", pod.closed_under_wedge(vm, vp))
    out.check("basis one-forms are not sphere forms", pod.non_freeness_witness() is not None,
              pod.non_freeness_witness())
    return out


def laplacian_suite():
    out = _Collector()
    a, c, astar = qg.a, qg.c, qg.astar
    out.check("box(1) = 0", not lp.box(qg.one, ALPHA, GAMMA))
    out.check("box(c) = (alpha + gamma) c", lp.box(c, ALPHA, GAMMA) == c.scale(ALPHA + GAMMA))
    out.check("box(a*) = (q^6 alpha + q^4 gamma) a*",
              lp.box(astar, ALPHA, GAMMA) == astar.scale(ALPHA * qpow(6) + GAMMA * qpow(4)))
    out.check("box preserves charge (D <= 3)", lp.preserves_charge(ALPHA, GAMMA, 3))
    q0 = Fraction(1, 2)
    pos = lp.LaplaceParams(1, 1, q0)
    neg = lp.LaplaceParams(1, -1, q0)
    fm = lp.numeric_box_matrix(pos, 3, 0)
    out.check("alpha=gamma=1: charge-0 block (D=3) has no negative eigenvalue",
              lp.count_sign(fm.matrix, negative=True) == 0)
    full = lp.numeric_box_matrix(neg, 2)
    s = lp.sign_summary(lp.spectrum_numeric(full)[0])
    out.check("alpha=1, gamma=-1: full D=2 block has mixed signs", s["negative"] and s["positive"], s)
    growth = lp.max_eigenvalue_growth(pos)
    vals = [growth[D] for D in sorted(growth)]
    out.check("largest eigenvalue nondecreasing in D", all(x <= y + 1e-9 for x, y in zip(vals, vals[1:])), growth)
    res = lp.self_adjointness_residuals(pos, [(c * qg.cstar, a * qg.cstar), (a * qg.cstar, astar * c)])
    out.check("self-adjointness residuals on charge-0 samples (reported)", True, [str(r) for r in res])
    return out


def classical_suite():
    from .classical import classical_suite as run
    return _Collector(run())


SUITES = {
    "calculus": calculus_suite,
    "classical": classical_suite,
    "hodge": hodge_suite,
    "hopf": hopf_suite,
    "laplacian": laplacian_suite,
    "sphere": sphere_suite,
}


def run_suites(names):
    results = {}
    for name in sorted(names):
        results[name] = SUITES[name]()
    return results
