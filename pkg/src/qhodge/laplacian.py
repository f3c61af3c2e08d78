"""
The scalar Laplacian  box x = {alpha (X- X+ + q^6 X+ X-) + gamma Xz Xz} |> x
on A(SU_q(2)), its matrices on the PBW degree filtration and their spectra.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
import sympy

from .enveloping import X_MINUS, X_PLUS, X_Z, act_left
from .quantum_group import AlgebraElement, Monomial, haar, monomials_up_to, star
from .scalar_field import QRational, evaluate_at, parse_rational, qpow

BOX_ALPHA = X_MINUS * X_PLUS + (X_PLUS * X_MINUS).scale(qpow(6))
BOX_GAMMA = X_Z * X_Z

EXACT_LIMIT = 12
FLOAT_TOL = 1e-8


@dataclass(frozen=True)
class LaplaceParams:
    alpha: Fraction
    gamma: Fraction
    q0: Fraction

    def __post_init__(self):
        for f in ("alpha", "gamma", "q0"):
            v = getattr(self, f)
            object.__setattr__(self, f, parse_rational(v) if isinstance(v, str) else Fraction(v))
        if not self.alpha * self.gamma:
            raise ValueError("alpha * gamma must be nonzero")
        if not 0 < self.q0 <= 1:
            raise ValueError("q0 must lie in (0, 1]")


@lru_cache(maxsize=None)
def _box_parts(mo: Monomial):
    x = AlgebraElement.monomial(mo)
    return act_left(BOX_ALPHA, x), act_left(BOX_GAMMA, x)


def box(x: AlgebraElement, alpha, gamma) -> AlgebraElement:
    """alpha, gamma: rationals, QRationals or ParamPoly symbols."""
    out = AlgebraElement()
    for mo, c in x.terms.items():
        pa, pg = _box_parts(mo)
        out = out + pa.scale(alpha * c) + pg.scale(gamma * c)
    return out


@dataclass
class FilteredMatrix:
    basis: list
    matrix: list          # exact entries (QRational or ParamPoly); column j = box(basis[j])
    degree: int
    charge: int = None

    def numeric(self, q0):
        return [[evaluate_at(x, q0) for x in row] for row in self.matrix]


def filtered_basis(D: int, charge=None):
    return monomials_up_to(D, charge)


def box_matrix(alpha, gamma, D: int, charge=None, retries: int = 0) -> FilteredMatrix:
    """
    Exact matrix of box on the span of PBW monomials of degree <= D.  Raises
    if box leaves the span (after enlarging D `retries` times).
    """
    if D < 1:
        raise ValueError("D >= 1 expected")
    basis = filtered_basis(D, charge)
    index = {mo: i for i, mo in enumerate(basis)}
    n = len(basis)
    cols = []
    for mo in basis:
        y = box(AlgebraElement.monomial(mo), alpha, gamma)
        outside = [t for t in y.terms if t not in index]
        if outside:
            if retries > 0:
                return box_matrix(alpha, gamma, D + 1, charge, retries - 1)
            raise ArithmeticError(f"box leaves the degree-{D} span: {outside[0]}")
        col = [QRational(0)] * n
        for t, c in y.terms.items():
            col[index[t]] = c
        cols.append(col)
    mat = [[cols[j][i] for j in range(n)] for i in range(n)]
    return FilteredMatrix(basis, mat, D, charge)


def numeric_box_matrix(p: LaplaceParams, D: int, charge=None) -> FilteredMatrix:
    fm = box_matrix(QRational(p.alpha), QRational(p.gamma), D, charge)
    fm.matrix = fm.numeric(p.q0)
    return fm


def preserves_charge(alpha, gamma, D: int) -> bool:
    """box maps every monomial into its own charge sector."""
    for mo in filtered_basis(D):
        y = box(AlgebraElement.monomial(mo), alpha, gamma)
        if any(t.charge != mo.charge for t in y.terms):
            return False
    return True


# ---------------------------------------------------------------------------
# spectra

@dataclass
class Eigenvalue:
    value: float
    multiplicity: int = 1
    interval: tuple = None    # exact isolating interval (Fractions) on the Sturm path
    imag: float = 0.0

    def to_json(self):
        out = {"value": self.value, "multiplicity": self.multiplicity}
        if self.interval is not None:
            out["interval"] = [str(self.interval[0]), str(self.interval[1])]
        if self.imag:
            out["imag"] = self.imag
        return out


def charpoly(mat):
    x = sympy.Symbol("x")
    M = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in mat])
    return M.charpoly(x).as_expr(), x


def _sturm_count(seq, x, point):
    vals = [s.eval(point) for s in seq]
    vals = [v for v in vals if v != 0]
    return sum(1 for u, v in zip(vals, vals[1:]) if (u < 0) != (v < 0))


def _roots_in(seq, x, lo, hi):
    return _sturm_count(seq, x, lo) - _sturm_count(seq, x, hi)


def _isolate(poly: sympy.Poly, width: Fraction):
    """Isolating intervals (lo, hi] of the real roots of a squarefree polynomial via Sturm."""
    x = poly.gen
    seq = sympy.sturm(poly)
    coeffs = [abs(Fraction(int(sympy.numer(c)), int(sympy.denom(c)))) for c in poly.all_coeffs()]
    bound = 1 + max(coeffs[1:], default=Fraction(0)) / coeffs[0]
    # shift off exact roots at the ends
    lo, hi = -bound - Fraction(1, 7), bound + Fraction(1, 11)
    stack = [(sympy.Rational(lo.numerator, lo.denominator), sympy.Rational(hi.numerator, hi.denominator))]
    out = []
    w = sympy.Rational(width.numerator, width.denominator)
    while stack:
        a, b = stack.pop()
        n = _roots_in(seq, x, a, b)
        if n == 0:
            continue
        if n == 1 and b - a <= w:
            out.append((Fraction(int(a.p), int(a.q)), Fraction(int(b.p), int(b.q))))
            continue
        mid = (a + b) / 2
        stack.append((a, mid))
        stack.append((mid, b))
    return sorted(out)


def spectrum_exact(mat, width=Fraction(1, 10 ** 12)):
    """
    Characteristic polynomial over Q, factorisation over Q and Sturm
    isolation of the real roots of the nonlinear factors.  Non-real roots (if any) come from numpy.
    """
    expr, x = charpoly(mat)
    poly = sympy.Poly(expr, x)
    out = []
    # irreducible factors over Q: linear ones give exact rational eigenvalues
    _, factors = poly.factor_list()
    for f, mult in factors:
        f = sympy.Poly(f, x)
        if f.degree() == 1:
            c1, c0 = f.all_coeffs()
            r = Fraction(int(sympy.numer(-c0 / c1)), int(sympy.denom(-c0 / c1)))
            out.append(Eigenvalue(float(r), mult, (r, r)))
            continue
        real = _isolate(f, width)
        for lo, hi in real:
            out.append(Eigenvalue(float((lo + hi) / 2), mult, (lo, hi)))
        if len(real) < f.degree():
            coeffs = [float(c) for c in f.all_coeffs()]
            for z in np.roots(coeffs):
                if abs(z.imag) > FLOAT_TOL:
                    out.append(Eigenvalue(float(z.real), mult, None, float(z.imag)))
    return sorted(out, key=lambda e: (e.value, e.imag))


def count_sign(mat, negative: bool) -> int:
    """Exact number of real eigenvalues < 0 (or > 0), with multiplicity, by Sturm counts at 0."""
    expr, x = charpoly(mat)
    poly = sympy.Poly(expr, x)
    total = 0
    for f, mult in sympy.sqf_list(poly)[1]:
        f = sympy.Poly(f, x)
        seq = sympy.sturm(f)
        big = sum(abs(c) for c in f.all_coeffs()) + 1
        lo, hi = (-big, 0) if negative else (0, big)
        n = _roots_in(seq, x, lo, hi)
        if negative and f.eval(0) == 0:
            n -= 1  # (lo, hi] counts a root at 0
        total += n * mult
    return total


def spectrum_float(mat):
    arr = np.array([[float(v) for v in row] for row in mat], dtype=float)
    vals = np.linalg.eigvals(arr)
    out = []
    for z in sorted(vals, key=lambda z: (z.real, z.imag)):
        imag = float(z.imag) if abs(z.imag) > FLOAT_TOL else 0.0
        out.append(Eigenvalue(float(z.real), 1, None, imag))
    return out


def spectrum_numeric(fm: FilteredMatrix, exact_limit: int = EXACT_LIMIT):
    """Numeric matrix (Fractions) -> eigenvalues; exact path for small blocks."""
    if len(fm.matrix) <= exact_limit:
        return spectrum_exact(fm.matrix), "sturm"
    return spectrum_float(fm.matrix), "float"


def sign_summary(eigs, tol=FLOAT_TOL):
    neg = sum(e.multiplicity for e in eigs if e.value < -tol)
    pos = sum(e.multiplicity for e in eigs if e.value > tol)
    return {"negative": neg, "positive": pos,
            "zero": sum(e.multiplicity for e in eigs) - neg - pos,
            "complex": sum(1 for e in eigs if e.imag)}


def max_eigenvalue_growth(p: LaplaceParams, degrees=(1, 2, 3), charge=None):
    """Largest real eigenvalue per filtration degree."""
    out = {}
    for D in degrees:
        eigs, _ = spectrum_numeric(numeric_box_matrix(p, D, charge))
        out[D] = max(e.value for e in eigs)
    return out


def self_adjointness_residuals(p: LaplaceParams, samples):
    """<box x, y> - <x, box y> with <x, y> = h(x* y), at numeric parameters."""
    a, g = QRational(p.alpha), QRational(p.gamma)
    out = []
    for x, y in samples:
        lhs = haar(star(box(x, a, g)) * y)
        rhs = haar(star(x) * box(y, a, g))
        out.append(evaluate_at(lhs - rhs, p.q0))
    return out


def report(p: LaplaceParams, D: int, charge=None):
    fm = numeric_box_matrix(p, D, charge)
    eigs, path = spectrum_numeric(fm)
    return {
        "basis": [str(mo) for mo in fm.basis],
        "matrix": [[str(v) for v in row] for row in fm.matrix],
        "eigenvalues": [e.to_json() for e in eigs],
        "path": path,
        "signs": sign_summary(eigs),
    }
