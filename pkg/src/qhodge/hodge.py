"""
Contractions, scalar products and Hodge operators on the 3d calculus.

Hodge data lives in the parameter ring of params.ParamPoly: alpha, beta,
gamma and the volume scale m are exact symbols (or constants after
substitution).  The integral of a top form is  int(y theta) = h(y) / m,
so that the volume mu = m theta integrates to one.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import linalg
from .calculus import (BASIS_LABELS, BASIS_LIFTS, ExteriorAlgebra, KForm, exterior_algebra,
                       star as form_star, wedge)
from .params import ALPHA, BETA, GAMMA, M, ParamPoly, conj, is_zero
from .quantum_group import AlgebraElement, haar, star as algebra_star
from .scalar_field import ONE, QRational, qpow

_PARTNER = (1, 0, 2)


def _pp(x) -> ParamPoly:
    return x if isinstance(x, ParamPoly) else ParamPoly.const(x)


@dataclass(frozen=True)
class Contraction:
    """g(w-, w+) = alpha, g(w+, w-) = beta, g(wz, wz) = gamma; all other pairs vanish."""

    alpha: ParamPoly = ALPHA
    beta: ParamPoly = BETA
    gamma: ParamPoly = GAMMA

    def __post_init__(self):
        for f in ("alpha", "beta", "gamma"):
            object.__setattr__(self, f, _pp(getattr(self, f)))

    @classmethod
    def symmetric(cls, alpha=ALPHA, gamma=GAMMA) -> "Contraction":
        """The line beta = q^6 alpha."""
        alpha = _pp(alpha)
        return cls(alpha, alpha * qpow(6), gamma)

    def value(self, a: int, b: int) -> ParamPoly:
        if _PARTNER[a] != b:
            return ParamPoly.const(0)
        return (self.alpha, self.beta, self.gamma)[a]

    def matrix(self):
        return [[self.value(a, b) for b in range(3)] for a in range(3)]

    def is_nondegenerate(self) -> bool:
        return all(bool(x) for x in (self.alpha, self.beta, self.gamma))

    def subs(self, values) -> "Contraction":
        return Contraction(self.alpha.subs(values), self.beta.subs(values), self.gamma.subs(values))

    def to_json(self):
        return {"alpha": str(self.alpha), "beta": str(self.beta), "gamma": str(self.gamma)}


def contract_tensors(g: Contraction, u, v, k: int) -> ParamPoly:
    """Factorwise contraction sum_{I,J} u_I v_J prod_t g(e_{I_t}, e_{J_t})."""
    out = ParamPoly.const(0)
    for idx, x in enumerate(u):
        if not x:
            continue
        word, rest = [], idx
        for _ in range(k):
            rest, r = divmod(rest, 3)
            word.append(r)
        word.reverse()
        jdx = 0
        for a in word:
            jdx = 3 * jdx + _PARTNER[a]
        y = v[jdx]
        if not y:
            continue
        prod = ParamPoly.const(x * y)
        for a in word:
            prod = prod * g.value(a, _PARTNER[a])
        out = out + prod
    return out


def extend_contraction(g: Contraction, k: int, ext: ExteriorAlgebra = None):
    """Gram matrix of the extended contraction on the degree-k invariant basis."""
    ext = ext or exterior_algebra()
    if k == 0:
        return [[ParamPoly.const(1)]]
    if k == 1:
        return g.matrix()
    vecs = [ext.embed_word(w) for w in BASIS_LIFTS[k]]
    return [[contract_tensors(g, u, v, k) for v in vecs] for u in vecs]


def star_matrix(k: int, ext: ExteriorAlgebra = None):
    """S[p][t]: basis_p^* = sum_t S[p][t] basis_t."""
    ext = ext or exterior_algebra()
    return [list(ext.star_basis(k, p)) for p in range(len(BASIS_LIFTS[k]))]


def invariant_inner_product(g: Contraction, k: int, ext: ExteriorAlgebra = None):
    """<basis_p, basis_j> = (1/lambda_k) g(basis_p^*, basis_j)."""
    ext = ext or exterior_algebra()
    gram = extend_contraction(g, k, ext)
    S = star_matrix(k, ext)
    lam = ext.lam(k).inverse()
    n = len(BASIS_LIFTS[k])
    return [[sum((gram[t][j] * S[p][t] for t in range(n) if S[p][t]), ParamPoly.const(0)) * lam
             for j in range(n)] for p in range(n)]


@lru_cache(maxsize=None)
def _top_pairing(k: int, name: str):
    """W[p][i] = theta-coefficient of basis_p^* ^ basis_(3-k)[i]."""
    ext = exterior_algebra(name)
    S = star_matrix(k, ext)
    n, n2 = len(BASIS_LIFTS[k]), len(BASIS_LIFTS[3 - k])
    W = []
    for p in range(n):
        row = []
        for i in range(n2):
            acc = QRational(0)
            for t in range(n):
                if S[p][t]:
                    acc = acc + S[p][t] * ext.wedge_basis(k, t, 3 - k, i)[0]
            row.append(acc)
        W.append(row)
    return W


def solve_T_from_inner_product(g: Contraction, m=M, braiding: str = "sigma"):
    """
    Per-degree matrices T_k (columns: images of the basis k-forms in the
    degree 3-k basis), solving  int (basis_p^* ^ T(basis_j)) = <basis_p, basis_j>.
    """
    ext = exterior_algebra(braiding)
    m = _pp(m)
    out = {}
    for k in range(4):
        W = _top_pairing(k, braiding)
        try:
            Winv = linalg.inverse(W)
        except ZeroDivisionError as exc:
            raise ArithmeticError(f"wedge pairing in degree {k} is singular") from exc
        P = invariant_inner_product(g, k, ext)
        # int(y theta) = h(y)/m  =>  W T / m = P  =>  T = m W^-1 P
        n = len(P)
        T = [[sum((P[p][j] * Winv[i][p] for p in range(n) if Winv[i][p]), ParamPoly.const(0)) * m
              for j in range(n)] for i in range(len(Winv))]
        out[k] = T
    return out


@dataclass
class HodgeOperator:
    g: Contraction
    m: ParamPoly = M
    braiding: str = "sigma"

    def __post_init__(self):
        self.m = _pp(self.m)
        self._T = None

    @property
    def matrices(self):
        if self._T is None:
            self._T = solve_T_from_inner_product(self.g, self.m, self.braiding)
        return self._T

    def on_basis(self, k: int, r: int):
        """T(basis_k[r]) as a coefficient list over the degree 3-k basis."""
        T = self.matrices[k]
        return [T[i][r] for i in range(len(T))]

    def __call__(self, phi: KForm) -> KForm:
        return hodge_T(self, phi)

    def square(self, k: int):
        return linalg.map_entries(linalg.matmul(self.matrices[3 - k], self.matrices[k]), _pp)

    def reduced(self, x: ParamPoly, m_squared=None) -> ParamPoly:
        return x.reduce_square("m", m_squared) if m_squared is not None else x


def hodge_T(H: HodgeOperator, phi: KForm) -> KForm:
    """Left-linear extension: T(x basis_r) = x T(basis_r)."""
    k = phi.degree
    out = [AlgebraElement()] * len(BASIS_LIFTS[3 - k])
    for r, x in enumerate(phi.coeffs):
        if not x:
            continue
        for i, t in enumerate(H.on_basis(k, r)):
            if t:
                out[i] = out[i] + x.scale(t)
    return KForm(3 - k, out)


def closed_form_table():
    """The closed-form values of T on the invariant basis, for beta = q^6 alpha."""
    a, b, g, m = ALPHA, BETA, GAMMA, M
    l2 = exterior_algebra().lambda2.inverse()
    l3 = exterior_algebra().lambda3.inverse()
    z = ParamPoly.const(0)
    return {
        (0, "1"): [m],
        (1, "wm"): [z, -qpow(-2) * m * b, z],
        (1, "wp"): [z, z, m * a],
        (1, "wz"): [m * g, z, z],
        (2, "wm^wp"): [z, z, -2 * l2 * m * a * b],
        (2, "wm^wz"): [2 * qpow(-4) * l2 * m * b * g, z, z],
        (2, "wp^wz"): [z, -2 * qpow(6) * l2 * m * a * g, z],
        (3, "theta"): [-6 * qpow(4) * l3 * m * a * b * g],
    }


def compare_with_table(H: HodgeOperator):
    """Differences (solved - closed form) per basis form, after beta -> q^6 alpha."""
    sub = {"beta": ALPHA * qpow(6)}
    g = H.g
    actual = {"alpha": g.alpha, "beta": g.beta, "gamma": g.gamma, "m": H.m}
    out = {}
    for (k, label), expected in closed_form_table().items():
        r = BASIS_LABELS[k].index(label)
        got = H.on_basis(k, r)
        out[(k, label)] = [(x - y.subs(actual)).subs(sub) for x, y in zip(got, expected)]
    return out


def scalar_product(phi: KForm, psi: KForm, g: Contraction, ext: ExteriorAlgebra = None) -> ParamPoly:
    """<x w, x' w'> = h(x* x') (1/lambda_k) g(w*, w'), extended sesquilinearly."""
    if phi.degree != psi.degree:
        raise ValueError("scalar product of forms of different degree")
    P = invariant_inner_product(g, phi.degree, ext)
    out = ParamPoly.const(0)
    for p, x in enumerate(phi.coeffs):
        if not x:
            continue
        xs = algebra_star(x)
        for j, y in enumerate(psi.coeffs):
            if not y or not P[p][j]:
                continue
            h = haar(xs * y)
            if h:
                out = out + P[p][j] * h
    return out


def integral_top(phi: KForm, m=M):
    """int(y theta) = h(y) / m."""
    if phi.degree != 3:
        raise ValueError("only top forms are integrated")
    return _pp(haar(phi.coeffs[0])) / _pp(m)


def defining_residual(H: HodgeOperator, phi: KForm, psi: KForm) -> ParamPoly:
    """int(phi^* ^ T(psi)) - <phi, psi>."""
    lhs = integral_top(wedge(form_star(phi), hodge_T(H, psi)), H.m)
    rhs = scalar_product(phi, psi, H.g, exterior_algebra(H.braiding))
    return lhs - rhs


def is_scalar_matrix(mat) -> bool:
    n = len(mat)
    return all(is_zero(mat[i][j]) if i != j else mat[i][i] == mat[0][0]
               for i in range(n) for j in range(n))


def is_symmetric(g: Contraction, braiding: str = "sigma") -> bool:
    """T^2 is a constant on the invariant 1-forms."""
    return is_scalar_matrix(HodgeOperator(g, M, braiding).square(1))


def _star_coeffs(k: int, coeffs, ext):
    """Coefficients of (sum c_r basis_r)^* for constant c_r."""
    S = star_matrix(k, ext)
    out = [ParamPoly.const(0)] * len(S)
    for r, c in enumerate(coeffs):
        if c:
            for t, s in enumerate(S[r]):
                if s:
                    out[t] = out[t] + conj(_pp(c)) * s
    return out


def star_defects(H: HodgeOperator, degrees=(1,)):
    """T(w^*) - T(w)^* for all basis forms of the given degrees."""
    ext = exterior_algebra(H.braiding)
    out = {}
    for k in degrees:
        S = star_matrix(k, ext)
        T = H.matrices[k]
        for r, label in enumerate(BASIS_LABELS[k]):
            lhs = [sum((T[i][t] * S[r][t] for t in range(len(S)) if S[r][t]), ParamPoly.const(0))
                   for i in range(len(T))]
            rhs = _star_coeffs(3 - k, H.on_basis(k, r), ext)
            out[(k, label)] = [x - y for x, y in zip(lhs, rhs)]
    return out


def is_real(g: Contraction, braiding: str = "sigma") -> bool:
    """T(w_a^*) = T(w_a)^* on the three basis 1-forms (m real)."""
    return all(all(is_zero(x) for x in d) for d in star_defects(HodgeOperator(g, M, braiding)).values())


def commutes_with_star(H: HodgeOperator) -> bool:
    return all(all(is_zero(x) for x in d) for d in star_defects(H, degrees=(0, 1, 2, 3)).values())


def gram_theta(g: Contraction, ext: ExteriorAlgebra = None) -> ParamPoly:
    return extend_contraction(g, 3, ext)[0][0]


def determinant(g: Contraction, m=M) -> ParamPoly:
    """det g = <mu, mu> with mu = m theta."""
    mu = KForm.basis(3, 0, AlgebraElement.scalar(ONE))
    return scalar_product(mu, mu, g) * _pp(m) * _pp(m)


def _numeric(x: ParamPoly, q0) -> Fraction:
    v = x.evaluate(q0)
    if isinstance(v, tuple):
        raise ValueError(f"{x} is not real at q = {q0}")
    return v


def det_sgn(g: Contraction, m, q0):
    """(det g, sgn g) at numeric q0 and numeric parameters (m may be symbolic: det/m^2 has the same sign)."""
    m = _pp(m)
    if m.is_const():
        det = _numeric(determinant(g, m), q0)
    else:
        det = _numeric(determinant(g, 1), q0)
    if det == 0:
        raise ArithmeticError("degenerate contraction")
    return det, (1 if det > 0 else -1)


def volume_m_squared(g: Contraction, sign_gamma: int) -> ParamPoly:
    """m^2 = lambda_3 / (6 q^4 alpha beta |gamma|), |gamma| = sign_gamma * gamma."""
    lam3 = exterior_algebra().lambda3
    denom = g.alpha * g.beta * g.gamma * (6 * sign_gamma) * qpow(4)
    return ParamPoly.const(lam3) / denom


def normalize_volume(g: Contraction, q0):
    """
    Exact m^2 at q0 for numeric parameters with T^2(1) = sgn(g), and the
    positive root m as a float.
    """
    gam = _numeric(g.gamma, q0)
    ab = _numeric(g.alpha * g.beta, q0)
    if ab <= 0:
        raise ArithmeticError("alpha*beta <= 0: no real volume scale")
    m2 = _numeric(volume_m_squared(g, 1 if gam > 0 else -1), q0)
    return m2, float(m2) ** 0.5


def t_square_eigenvalues(g: Contraction, m_squared, braiding="sigma"):
    """Per-degree T^2 matrices with m^2 replaced by the given value."""
    H = HodgeOperator(g, M, braiding)
    return {k: linalg.map_entries(H.square(k), lambda x: x.reduce_square("m", m_squared))
            for k in range(4)}


def commutator_witness(g: Contraction, degrees=(1, 2, 0, 3)):
    """
    First basis form on which T o T' != T' o T, T' built from sigma^-1;
    None if they commute everywhere.
    """
    H = HodgeOperator(g, M, "sigma")
    Hi = HodgeOperator(g, M, "sigma_inv")
    for k in degrees:
        a = linalg.map_entries(linalg.matmul(H.matrices[3 - k], Hi.matrices[k]), _pp)
        b = linalg.map_entries(linalg.matmul(Hi.matrices[3 - k], H.matrices[k]), _pp)
        for r, label in enumerate(BASIS_LABELS[k]):
            col_a = [row[r] for row in a]
            col_b = [row[r] for row in b]
            if col_a != col_b:
                return {"degree": k, "form": label,
                        "TT'": [str(x) for x in col_a], "T'T": [str(x) for x in col_b]}
    return None


def eigenvalue_pattern(g: Contraction, braiding: str, m_squared=None):
    """Multiplicity pattern of T^2 per degree, e.g. {0: [1], 1: [3], ...}; None if not diagonalizable by scalars."""
    H = HodgeOperator(g, M, braiding)
    out = {}
    for k in range(4):
        sq = H.square(k)
        if m_squared is not None:
            sq = linalg.map_entries(sq, lambda x: x.reduce_square("m", m_squared))
        if not is_scalar_matrix(sq):
            return None
        out[k] = [len(sq)]
    return out


def random_triple(rng: random.Random, symmetric: bool, complex_ok: bool = False):
    def r():
        while True:
            v = Fraction(rng.randint(-9, 9), rng.randint(1, 5))
            if v:
                return v
    alpha = ParamPoly.const(r())
    gamma = ParamPoly.const(r())
    if complex_ok:
        alpha = alpha + ParamPoly.gaussian(0, r()) if rng.random() < 0.5 else alpha
        gamma = gamma + ParamPoly.gaussian(0, r()) if rng.random() < 0.5 else gamma
    if symmetric:
        return Contraction.symmetric(alpha, gamma)
    while True:
        beta = ParamPoly.const(r()) * qpow(rng.randint(-3, 8))
        if beta != alpha * qpow(6):
            return Contraction(alpha, beta, gamma)


def report(g: Contraction, q0=None, braiding="sigma"):
    """CLI-facing summary."""
    H = HodgeOperator(g, M, braiding)
    out = {
        "braiding": braiding,
        "contraction": g.to_json(),
        "T": {str(k): [[str(x) for x in row] for row in H.matrices[k]] for k in range(4)},
        "symmetric": is_symmetric(g, braiding),
        "real": is_real(g, braiding),
    }
    table = compare_with_table(H) if braiding == "sigma" else None
    if table is not None:
        out["matches_closed_form"] = all(all(is_zero(x) for x in v) for v in table.values())
    if q0 is not None:
        det, sgn = det_sgn(g, M, q0)
        out["det_over_m2"] = str(det)
        out["sgn"] = sgn
        if out["symmetric"] and out["real"]:
            m2, mf = normalize_volume(g, q0)
            out["m_squared"] = str(m2)
            out["m"] = mf
            sq = t_square_eigenvalues(g, ParamPoly.const(m2), braiding)
            out["T2_degree1"] = str(sq[1][0][0].evaluate(q0))
    return out
