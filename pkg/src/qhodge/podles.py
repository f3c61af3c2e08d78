"""
The standard Podles sphere: the charge-zero subalgebra L_0, its 2d
exterior algebra

    Omega = L_0  +  (L_-2 w-  +  L_+2 w+)  +  L_0 w-^w+

and the induced Hodge operator on it.  The sphere volume is
mu_c = i mc w-^w+ with  int(y mu_c) = h(y), i.e. int(y w-^w+) = h(y) / (i mc).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .calculus import KForm, _as_algebra, differential, exterior_algebra, star as form_star, wedge
from .hodge import Contraction, scalar_product, _pp
from .params import ALPHA, BETA, I, MC, ParamPoly, is_zero
from .quantum_group import AlgebraElement, grade_decompose, haar
from .scalar_field import qpow

#: required charge of each KForm component, None = must vanish
_SECTORS = {
    0: (0,),
    1: (-2, 2, None),
    2: (0, None, None),
}


class ChargeError(ValueError):
    pass


def sphere_membership(x: AlgebraElement) -> bool:
    return all(n == 0 for n, _ in grade_decompose(x))


def _check_sector(x: AlgebraElement, n, where: str):
    for mo in x.terms:
        if n is None or mo.charge != n:
            want = "zero" if n is None else f"charge {n}"
            raise ChargeError(f"{where}: monomial {mo} has charge {mo.charge}, expected {want}")


@dataclass
class SphereForm:
    """degree 0: [f0]; degree 1: [v-, v+]; degree 2: [f2] (coefficient of w-^w+)."""

    degree: int
    components: list = field(default_factory=list)

    def __post_init__(self):
        self.components = [_as_algebra(x) for x in self.components]

    def to_kform(self) -> KForm:
        c = self.components
        if self.degree == 0:
            return KForm(0, [c[0]])
        if self.degree == 1:
            return KForm(1, [c[0], c[1], AlgebraElement()])
        return KForm(2, [c[0], AlgebraElement(), AlgebraElement()])

    def __str__(self):
        return str(self.to_kform())


def sphere_form_check(phi: KForm) -> SphereForm:
    if phi.degree not in _SECTORS:
        raise ChargeError("the sphere calculus stops at degree 2")
    labels = {0: ["1"], 1: ["wm", "wp", "wz"], 2: ["wm^wp", "wm^wz", "wp^wz"]}[phi.degree]
    for x, n, lab in zip(phi.coeffs, _SECTORS[phi.degree], labels):
        _check_sector(x, n, f"coefficient of {lab}")
    if phi.degree == 1:
        return SphereForm(1, [phi.coeffs[0], phi.coeffs[1]])
    return SphereForm(phi.degree, [phi.coeffs[0]])


def top_candidates(alpha=ALPHA, beta=BETA, mc=MC):
    """Candidates for T(w-^w+): quadratic and linear in mc, and the one forced by the defining equation."""
    lam2 = exterior_algebra().lambda2
    mc = _pp(mc)
    return {
        "quadratic": mc * mc * 2 / lam2,
        "linear": mc * 2 / lam2,
        "consistent": -(I * mc * _pp(alpha) * _pp(beta) * 2) / lam2,
    }


@dataclass
class SphereHodge:
    g: Contraction = field(default_factory=Contraction.symmetric)
    mc: ParamPoly = MC
    top: str = "quadratic"

    def __post_init__(self):
        self.mc = _pp(self.mc)

    def factors(self):
        """Scalar by which T acts on each summand: 1 -> w-^w+, v-w-, v+w+, w-^w+ -> 1."""
        a, b = self.g.alpha, self.g.beta
        return {
            "unit": I * self.mc,
            "minus": -(I * self.mc * b) * qpow(-2),
            "plus": I * self.mc * a,
            "top": top_candidates(a, b, self.mc)[self.top],
        }

    def m_squared(self) -> ParamPoly:
        return self.g.alpha * self.g.beta * exterior_algebra().lambda2 / 2


def sphere_hodge(H: SphereHodge, phi: SphereForm) -> SphereForm:
    f = H.factors()
    c = phi.components
    if phi.degree == 0:
        return SphereForm(2, [c[0].scale(f["unit"])])
    if phi.degree == 1:
        return SphereForm(1, [c[0].scale(f["minus"]), c[1].scale(f["plus"])])
    return SphereForm(0, [c[0].scale(f["top"])])


def sphere_hodge_square_factors(H: SphereHodge, m_squared=None):
    """T^2 on each of the four summands (it is diagonal by construction)."""
    f = H.factors()
    out = {
        "unit": f["unit"] * f["top"],
        "minus": f["minus"] * f["minus"],
        "plus": f["plus"] * f["plus"],
        "top": f["top"] * f["unit"],
    }
    if m_squared is not None:
        out = {k: v.reduce_square("mc", m_squared) for k, v in out.items()}
    return out


def sphere_hodge_square_is_diagonal(H: SphereHodge, samples) -> bool:
    """Check T(T(phi)) = factor * phi on explicit sample forms, summand by summand."""
    sq = sphere_hodge_square_factors(H)
    for phi in samples:
        twice = sphere_hodge(H, sphere_hodge(H, phi))
        if phi.degree == 1:
            want = [phi.components[0].scale(sq["minus"]), phi.components[1].scale(sq["plus"])]
        else:
            want = [phi.components[0].scale(sq["unit" if phi.degree == 0 else "top"])]
        if twice.degree != phi.degree or any(x != y for x, y in zip(twice.components, want)):
            return False
    return True


def restricted_scalar_product(phi: SphereForm, psi: SphereForm, g: Contraction) -> ParamPoly:
    if phi.degree != psi.degree:
        raise ValueError("scalar product of forms of different degree")
    return scalar_product(phi.to_kform(), psi.to_kform(), g)


def sphere_integral(phi: KForm, mc=MC) -> ParamPoly:
    """int(y w-^w+) = h(y) / (i mc); only the w-^w+ component contributes."""
    if phi.degree != 2:
        raise ValueError("only 2-forms are integrated on the sphere")
    for x in phi.coeffs[1:]:
        if x:
            raise ChargeError("2-form leaves the sphere calculus")
    return _pp(haar(phi.coeffs[0])) / (I * _pp(mc))


def sphere_defining_residual(H: SphereHodge, phi: SphereForm, psi: SphereForm) -> ParamPoly:
    """int(phi^* ^ T(psi)) - <phi, psi>."""
    lhs = sphere_integral(wedge(form_star(phi.to_kform()), sphere_hodge(H, psi).to_kform()), H.mc)
    return lhs - restricted_scalar_product(phi, psi, H.g)


def adjudicate_top(g: Contraction = None):
    """
    Test each candidate for T(w-^w+) against the restricted defining equation
    on (w-^w+, w-^w+).  Returns {candidate: residual} and the verdict.
    """
    g = g or Contraction.symmetric()
    one = AlgebraElement.scalar(1)
    top = SphereForm(2, [one])
    res = {}
    for name in ("quadratic", "linear", "consistent"):
        H = SphereHodge(g, MC, name)
        res[name] = sphere_defining_residual(H, top, top)
    ok = [k for k in ("quadratic", "linear") if is_zero(res[k])]
    if ok:
        verdict = ok[0]
    elif is_zero(res["consistent"]):
        verdict = "neither the mc^2 nor the mc candidate is consistent; the defining equation forces " \
                  + str(top_candidates(g.alpha, g.beta)["consistent"])
    else:
        verdict = "no candidate satisfies the defining equation"
    return {"residuals": {k: str(v) for k, v in res.items()}, "verdict": verdict,
            "quadratic_consistent": is_zero(res["quadratic"]),
            "linear_consistent": is_zero(res["linear"])}


def closed_under_d(phi: SphereForm) -> bool:
    if phi.degree == 2:
        return True
    try:
        sphere_form_check(differential(phi.to_kform()))
    except ChargeError:
        return False
    return True


def closed_under_wedge(phi: SphereForm, psi: SphereForm) -> bool:
    if phi.degree + psi.degree > 2:
        return True
    try:
        sphere_form_check(wedge(phi.to_kform(), psi.to_kform()))
    except ChargeError:
        return False
    return True


def non_freeness_witness():
    """The invariant basis 1-form w- is not a sphere form (1 is not in L_-2)."""
    try:
        sphere_form_check(KForm.basis(1, "wm"))
    except ChargeError as exc:
        return str(exc)
    return None


def report(g: Contraction = None, q0=None):
    g = g or Contraction.symmetric()
    H = SphereHodge(g)
    f = H.factors()
    out = {
        "T": {k: str(v) for k, v in f.items()},
        "mc_squared": str(H.m_squared()),
        "T2": {k: str(v) for k, v in sphere_hodge_square_factors(H, H.m_squared()).items()},
        "adjudication": adjudicate_top(g),
    }
    if q0 is not None:
        sq = sphere_hodge_square_factors(H, H.m_squared())
        vals = {}
        for k in ("minus", "plus"):
            v = sq[k]
            vals[k] = str(v.evaluate(q0)) if v.is_const() else str(v.at_q(q0))
        out["T2_one_forms_at_q0"] = vals
    return out

