"""
q = 1 checks: the quantum pipeline evaluated at q = 1 against the same
pipeline run with the classical flip as braiding.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import linalg
from .calculus import (classical_structure_constants, exterior_algebra, flip_matrix, jacobi_defect,
                       killing_form, lowered_structure_constants, sigma_matrix, totally_antisymmetric)
from .hodge import Contraction, HodgeOperator, is_real, is_scalar_matrix, is_symmetric, random_triple
from .params import ALPHA, GAMMA, M, ParamPoly
from .scalar_field import evaluate_at


def _at1(mat):
    return [[evaluate_at(x, 1) for x in row] for row in mat]


def _pp_at1(x: ParamPoly) -> ParamPoly:
    return x.at_q(1)


def classical_t_matrices(g: Contraction):
    """T from the flip braiding (lambda_k = k!), via the shared solver."""
    from .hodge import solve_T_from_inner_product
    return solve_T_from_inner_product(g, M, "flip")


def classical_suite(verbose: bool = False):
    """Returns a list of (name, ok, detail)."""
    out = []

    def check(name, ok, detail=""):
        out.append((name, bool(ok), detail))

    sig1 = _at1(sigma_matrix())
    check("sigma(q=1) is the flip", sig1 == _at1(flip_matrix()))

    ext = exterior_algebra()
    flip = exterior_algebra("flip")
    for k in (2, 3):
        lam = evaluate_at(ext.lam(k), 1)
        check(f"lambda_{k}(q=1) = {k}!", lam == factorial(k) == evaluate_at(flip.lam(k), 1), str(lam))

    # structure constants at q = 1
    C = classical_structure_constants()
    check("Jacobi identity at q=1", jacobi_defect(C) == 0)
    kap = killing_form(C)
    low = lowered_structure_constants(C)
    check("lowered structure constants totally antisymmetric", totally_antisymmetric(low),
          f"killing form {[[str(x) for x in r] for r in kap]}")

    # Hodge: q-pipeline at q=1 vs flip pipeline
    g = Contraction()
    Tq = HodgeOperator(g).matrices
    Tc = classical_t_matrices(g)
    same = all(_pp_at1(x) == _pp_at1(y) for k in range(4) for rx, ry in zip(Tq[k], Tc[k])
               for x, y in zip(rx, ry))
    check("T at q=1 equals flip-braiding T", same)

    # symmetric family collapses to beta = alpha
    gs = Contraction.symmetric(ALPHA, GAMMA)
    check("beta = q^6 alpha becomes beta = alpha", gs.beta.at_q(1) == ALPHA)
    gc = Contraction(ALPHA, ALPHA, GAMMA)
    Hc = HodgeOperator(gc, M, "flip")
    check("flip family symmetric on beta = alpha",
          is_scalar_matrix(Hc.square(1)) and not is_scalar_matrix(HodgeOperator(Contraction(), M, "flip").square(1)))

    # T^2 = sgn(g) (-1)^(k(3-k)) after normalisation, for both signs of gamma
    for gam in (1, -1):
        g1 = Contraction(1, 1, gam)
        H1 = HodgeOperator(g1, M, "flip")
        T3 = H1.matrices[3][0][0]
        # m^2 fixed by T^2(1) = m^2 * T(theta)/m = sgn(g); sgn(g) = -sgn(gamma)
        sgn = -gam
        m2 = ParamPoly.const(sgn) / (T3 / M)
        ok = True
        for k in range(4):
            sq = linalg.map_entries(H1.square(k), lambda x: x.reduce_square("m", m2).at_q(1))
            want = ParamPoly.const(sgn * (-1) ** (k * (3 - k)))
            ok = ok and is_scalar_matrix(sq) and sq[0][0] == want
        check(f"T^2 = sgn(g)(-1)^(k(3-k)) for gamma = {gam}", ok)

    # reality <=> real parameters at q = 1
    import random
    rng = random.Random(7)
    agree = True
    for _ in range(10):
        gq = random_triple(rng, symmetric=True, complex_ok=True)
        g1 = Contraction(gq.alpha.at_q(1), gq.alpha.at_q(1), gq.gamma.at_q(1))
        real_params = all(not any(k[1] for k in x.terms) for x in (g1.alpha, g1.gamma))
        agree = agree and is_real(g1, "flip") == real_params
    check("reality <=> real parameters (flip)", agree)

    if verbose:
        for name, ok, detail in out:
            print(("PASS " if ok else "FAIL ") + name + (f"  [{detail}]" if detail else ""))
    return out


def classical_sign(gamma) -> int:
    return -1 if Fraction(gamma) > 0 else 1
