"""
The 3d left-covariant calculus on SU_q(2).

Basis of invariant 1-forms: omega_- (index 0, label wm), omega_+ (1, wp),
omega_z (2, wz).  Higher invariant forms are classes of tensor words modulo
the kernel of the braided antisymmetrisers; basis choices

    degree 2:  wm^wp, wm^wz, wp^wz         degree 3:  theta = wm^wp^wz

KForm coefficients sit on the LEFT of the basis forms.  Moving a function
x in L_n to the left of a basis form of "weight" w costs q^(w n): weights are
1 for omega_+-, 2 for omega_z and additive on wedges.
"""

from __future__ import annotations

import itertools
from functools import cached_property, lru_cache

from . import linalg
from .enveloping import TANGENT, act_left
from .quantum_group import AlgebraElement, Monomial, grade_decompose, star as algebra_star
from .scalar_field import ONE, Q, ZERO, QRational, evaluate_at, qpow

LABELS1 = ("wm", "wp", "wz")
BASIS_LIFTS = {
    0: [()],
    1: [(0,), (1,), (2,)],
    2: [(0, 1), (0, 2), (1, 2)],
    3: [(0, 1, 2)],
}
BASIS_LABELS = {
    0: ["1"],
    1: list(LABELS1),
    2: ["wm^wp", "wm^wz", "wp^wz"],
    3: ["theta"],
}
#: q-power weight of each invariant 1-form in  omega x = q^(w n) x omega
WEIGHT = (1, 1, 2)
#: U(1) charge of the basis 1-forms in the convention of the functions
#: (x in L_n); v_- omega_- is coinvariant for v_- in L_-2.
FORM_CHARGE = (2, -2, 0)


def word_index(word) -> int:
    idx = 0
    for w in word:
        idx = 3 * idx + w
    return idx


def index_word(idx: int, k: int):
    out = []
    for _ in range(k):
        idx, r = divmod(idx, 3)
        out.append(r)
    return tuple(reversed(out))


def basis_weight(k: int, r: int) -> int:
    return sum(WEIGHT[a] for a in BASIS_LIFTS[k][r])


def basis_charge(k: int, r: int) -> int:
    return sum(FORM_CHARGE[a] for a in BASIS_LIFTS[k][r])


# ---------------------------------------------------------------------------
# braiding

def sigma_matrix():
    """The braiding on invariant 2-tensors; column = image of a basis word."""
    m = linalg.zeros(9)

    def put(src, terms):
        for coeff, dst in terms:
            m[word_index(dst)][word_index(src)] = coeff

    one_m_q2 = ONE - Q * Q
    for a in range(3):
        put((a, a), [(ONE, (a, a))])
    put((0, 1), [(one_m_q2, (0, 1)), (qpow(-2), (1, 0))])
    put((1, 0), [(qpow(4), (0, 1))])
    put((0, 2), [(one_m_q2, (0, 2)), (qpow(-4), (2, 0))])
    put((2, 0), [(qpow(6), (0, 2))])
    put((2, 1), [(one_m_q2, (2, 1)), (qpow(-4), (1, 2))])
    put((1, 2), [(qpow(6), (2, 1))])
    return m


def flip_matrix():
    """The classical flip omega_a (x) omega_b -> omega_b (x) omega_a."""
    m = linalg.zeros(9)
    for a in range(3):
        for b in range(3):
            m[word_index((b, a))][word_index((a, b))] = ONE
    return m


@lru_cache(maxsize=None)
def _sigma():
    return sigma_matrix()


@lru_cache(maxsize=None)
def _sigma_inv():
    return linalg.inverse(_sigma())


def sigma_inverse_matrix():
    return [list(r) for r in _sigma_inv()]


def braid_operators(sigma):
    i3 = linalg.identity(3)
    return linalg.kron(sigma, i3), linalg.kron(i3, sigma)


def antisymmetrizer(k: int, sigma):
    """A2 = 1 - sigma;  A3 = (1 - sigma_2)(1 - sigma_1 + sigma_1 sigma_2)."""
    if k == 2:
        return linalg.sub(linalg.identity(9), sigma)
    if k == 3:
        s1, s2 = braid_operators(sigma)
        i27 = linalg.identity(27)
        right = linalg.add(linalg.sub(i27, s1), linalg.matmul(s1, s2))
        return linalg.matmul(linalg.sub(i27, s2), right)
    raise ValueError("antisymmetrisers are only defined for k = 2, 3")


def _eigen_factor(a):
    """lambda with a @ a = lambda * a (raises if a is not a multiple of a projector)."""
    sq = linalg.matmul(a, a)
    lam = None
    for ra, rs in zip(a, sq):
        for x, y in zip(ra, rs):
            if x:
                lam = y / x
                break
        if lam is not None:
            break
    if lam is None or not linalg.equal(sq, linalg.scale(a, lam)):
        raise ValueError("antisymmetriser is not totally degenerate")
    return lam


class ExteriorAlgebra:
    """
    Invariant exterior algebra built from a braiding matrix.  `name` is
    'sigma', 'sigma_inv' or 'flip'.
    """

    def __init__(self, sigma, name="sigma"):
        self.sigma = sigma
        self.name = name

    @cached_property
    def A2(self):
        return antisymmetrizer(2, self.sigma)

    @cached_property
    def A3(self):
        return antisymmetrizer(3, self.sigma)

    def A(self, k):
        return {2: self.A2, 3: self.A3}[k]

    @cached_property
    def lambda2(self) -> QRational:
        return _eigen_factor(self.A2)

    @cached_property
    def lambda3(self) -> QRational:
        return _eigen_factor(self.A3)

    def lam(self, k: int) -> QRational:
        return {0: ONE, 1: ONE, 2: self.lambda2, 3: self.lambda3}[k]

    def embed_word(self, word):
        """A^(k) applied to a basis tensor word, as a dense vector."""
        k = len(word)
        if k <= 1:
            v = [ZERO] * (3 ** k)
            v[word_index(word)] = ONE
            return v
        col = word_index(word)
        return [row[col] for row in self.A(k)]

    def embed(self, k: int, coeffs):
        """Image in Gamma^(x)k of the invariant k-form sum coeffs[r] * basis_r."""
        out = [ZERO] * (3 ** k)
        for r, c in enumerate(coeffs):
            if c:
                for i, x in enumerate(self.embed_word(BASIS_LIFTS[k][r])):
                    if x:
                        out[i] = out[i] + c * x
        return out

    @cached_property
    def _basis_columns(self):
        return {k: linalg.transpose([self.embed_word(w) for w in BASIS_LIFTS[k]]) for k in (2, 3)}

    @lru_cache(maxsize=None)
    def reduce_word(self, word):
        """Coefficients of the class of a tensor word in the degree-k basis."""
        k = len(word)
        if k > 3:
            return ()
        if k <= 1:
            v = [ZERO] * len(BASIS_LIFTS[k])
            v[BASIS_LIFTS[k].index(tuple(word))] = ONE
            return tuple(v)
        return tuple(linalg.solve(self._basis_columns[k], self.embed_word(word)))

    @lru_cache(maxsize=None)
    def wedge_basis(self, p: int, r: int, s: int, t: int):
        """basis_p[r] ^ basis_s[t] as coefficients in degree p+s."""
        if p + s > 3:
            return ()
        return self.reduce_word(BASIS_LIFTS[p][r] + BASIS_LIFTS[s][t])

    @lru_cache(maxsize=None)
    def star_basis(self, k: int, r: int):
        """(basis_k[r])* as coefficients in the same basis (real in q)."""
        word = BASIS_LIFTS[k][r]
        if k == 0:
            return (ONE,)
        sign = -ONE if (k * (k - 1) // 2) % 2 else ONE
        # omega_-^* = -omega_+, omega_+^* = -omega_-, omega_z^* = -omega_z
        starred = tuple({0: 1, 1: 0, 2: 2}[a] for a in reversed(word))
        sign = sign * (-ONE) ** k
        return tuple(sign * x for x in self.reduce_word(starred))

    @cached_property
    def kernel2(self):
        return linalg.nullspace(self.A2)

    def kernels_nest(self) -> bool:
        """ker(A2 (x) 1) and ker(1 (x) A2) lie in ker A3 (wedge is well defined)."""
        i3 = linalg.identity(3)
        for big in (linalg.kron(self.A2, i3), linalg.kron(i3, self.A2)):
            for v in linalg.nullspace(big):
                if any(linalg.matvec(self.A3, v)):
                    return False
        return True


@lru_cache(maxsize=None)
def exterior_algebra(name: str = "sigma") -> ExteriorAlgebra:
    if name == "sigma":
        return ExteriorAlgebra(_sigma(), "sigma")
    if name == "sigma_inv":
        return ExteriorAlgebra(_sigma_inv(), "sigma_inv")
    if name == "flip":
        return ExteriorAlgebra(flip_matrix(), "flip")
    raise ValueError(name)


def spectrum_values():
    ext = exterior_algebra()
    return ext.lambda2, ext.lambda3


# ---------------------------------------------------------------------------
# wedge relations

def _tensor(terms):
    v = [ZERO] * 9
    for c, w in terms:
        v[word_index(w)] = v[word_index(w)] + c
    return v


def listed_relations():
    """
    omega_a ^ omega_a = 0, omega_- ^ omega_+ + q^-2 omega_+ ^ omega_- = 0 and
    the family omega_z ^ omega_-+ + q^(+-4) omega_- ^ omega_z = 0 with the
    second factor fixed to omega_- for both signs.
    """
    out = {f"{LABELS1[a]}^{LABELS1[a]}": _tensor([(ONE, (a, a))]) for a in range(3)}
    out["wm^wp + q^-2 wp^wm"] = _tensor([(ONE, (0, 1)), (qpow(-2), (1, 0))])
    out["wz^wm + q^4 wm^wz"] = _tensor([(ONE, (2, 0)), (qpow(4), (0, 2))])
    out["wz^wp + q^-4 wm^wz"] = _tensor([(ONE, (2, 1)), (qpow(-4), (0, 2))])
    return out


def corrected_relations():
    """The family with the second wedge factor matching the first: omega_z ^ omega_-+ + q^(+-4) omega_-+ ^ omega_z."""
    rel = listed_relations()
    del rel["wz^wp + q^-4 wm^wz"]
    rel["wz^wp + q^-4 wp^wz"] = _tensor([(ONE, (2, 1)), (qpow(-4), (1, 2))])
    return rel


def wedge_relations(ext: ExteriorAlgebra = None):
    """Basis of ker A2 (6 vectors); hard failure on a dimension mismatch."""
    ext = ext or exterior_algebra()
    ker = ext.kernel2
    if len(ker) != 6:
        raise ArithmeticError(f"ker A2 has dimension {len(ker)}, expected 6")
    return ker


def adjudicate_relations(ext: ExteriorAlgebra = None):
    """Which listed / corrected relations lie in ker A2."""
    ker = wedge_relations(ext)
    report = {}
    for name, v in {**listed_relations(), **corrected_relations()}.items():
        report[name] = linalg.in_span(ker, v)
    report["corrected_spans_kernel"] = linalg.same_span(ker, list(corrected_relations().values()))
    return report


# ---------------------------------------------------------------------------
# forms

def _as_algebra(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(x)


class KForm:
    """A k-form: left coefficients (AlgebraElements) over the invariant basis."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs=None):
        n = len(BASIS_LIFTS[degree]) if 0 <= degree <= 3 else 0
        self.degree = degree
        if coeffs is None:
            coeffs = [AlgebraElement()] * n
        self.coeffs = tuple(_as_algebra(x) for x in coeffs)
        if len(self.coeffs) != n:
            raise ValueError(f"degree {degree} forms have {n} components")

    @classmethod
    def zero(cls, degree: int) -> "KForm":
        return cls(degree)

    @classmethod
    def basis(cls, degree: int, r, coeff=None) -> "KForm":
        if isinstance(r, str):
            r = BASIS_LABELS[degree].index(r)
        c = [AlgebraElement()] * len(BASIS_LIFTS[degree])
        c[r] = AlgebraElement.scalar(ONE) if coeff is None else _as_algebra(coeff)
        return cls(degree, c)

    @classmethod
    def function(cls, x) -> "KForm":
        return cls(0, [_as_algebra(x)])

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        if not self and not other:
            return True
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __add__(self, other):
        if not other:
            return self
        if not self:
            return other
        if self.degree != other.degree:
            raise ValueError("adding forms of different degree")
        return KForm(self.degree, [x + y for x, y in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return KForm(self.degree, [-x for x in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def left_mul(self, x) -> "KForm":
        """x * form, x a function or scalar."""
        if isinstance(x, AlgebraElement):
            return KForm(self.degree, [x * c for c in self.coeffs])
        return KForm(self.degree, [c.scale(x) for c in self.coeffs])

    def __rmul__(self, x):
        return self.left_mul(x)

    def __mul__(self, x):
        """form * x (function on the right, moved left through the basis)."""
        return self.right_mul(x)

    def right_mul(self, x) -> "KForm":
        x = _as_algebra(x)
        out = []
        for r, c in enumerate(self.coeffs):
            out.append(c * commute_right(self.degree, r, x) if c else c)
        return KForm(self.degree, out)

    def component(self, label) -> AlgebraElement:
        if isinstance(label, str):
            label = BASIS_LABELS[self.degree].index(label)
        return self.coeffs[label]

    def map_coefficients(self, fn) -> "KForm":
        return KForm(self.degree, [fn(c) for c in self.coeffs])

    def __repr__(self):
        return f"KForm({self})"

    def __str__(self):
        parts = []
        for lab, c in zip(BASIS_LABELS[self.degree], self.coeffs):
            if not c:
                continue
            cs = str(c)
            if lab == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(lab)
            elif cs == "-1":
                parts.append("-" + lab)
            else:
                parts.append(f"({cs}) * {lab}")
        return " + ".join(parts) if parts else "0"

    def to_json(self):
        keys = {0: ["1"], 1: ["wm", "wp", "wz"], 2: ["wm^wp", "wm^wz", "wp^wz"], 3: ["theta"]}[self.degree]
        return {"degree": self.degree, "coeffs": {k: c.to_json() for k, c in zip(keys, self.coeffs)}}

    @classmethod
    def from_json(cls, data):
        k = data["degree"]
        return cls(k, [AlgebraElement.from_json(data["coeffs"][lab]) for lab in BASIS_LABELS[k]])


def omega(label: str) -> KForm:
    return KForm.basis(1, label)


def theta() -> KForm:
    return KForm.basis(3, 0)


def commute_right(degree: int, r: int, x: AlgebraElement) -> AlgebraElement:
    """y with basis_r * x = y * basis_r."""
    w = basis_weight(degree, r)
    out = AlgebraElement()
    for n, part in grade_decompose(x):
        out = out + part.scale(qpow(w * n))
    return out


def commute_right_1form(label: str, x: AlgebraElement) -> KForm:
    r = LABELS1.index(label)
    return KForm.basis(1, r, commute_right(1, r, x))


def wedge(phi: KForm, psi: KForm, ext: ExteriorAlgebra = None) -> KForm:
    ext = ext or exterior_algebra()
    p, s = phi.degree, psi.degree
    if p + s > 3:
        return KForm.zero(3)
    out = [AlgebraElement()] * len(BASIS_LIFTS[p + s])
    for r, x in enumerate(phi.coeffs):
        if not x:
            continue
        for t, y in enumerate(psi.coeffs):
            if not y:
                continue
            coeff = x * commute_right(p, r, y)
            if not coeff:
                continue
            for u, f in enumerate(ext.wedge_basis(p, r, s, t)):
                if f:
                    out[u] = out[u] + coeff.scale(f)
    return KForm(p + s, out)


def star(phi: KForm, ext: ExteriorAlgebra = None) -> KForm:
    """(x omega)* = omega* x*, renormalized with coefficients on the left."""
    ext = ext or exterior_algebra()
    k = phi.degree
    out = [AlgebraElement()] * len(BASIS_LIFTS[k])
    for r, x in enumerate(phi.coeffs):
        if not x:
            continue
        xs = algebra_star(x)
        for t, f in enumerate(ext.star_basis(k, r)):
            if f:
                out[t] = out[t] + commute_right(k, t, xs).scale(f)
    return KForm(k, out)


def differential0(x: AlgebraElement) -> KForm:
    """dx = sum_a (X_a |> x) omega_a."""
    x = _as_algebra(x)
    return KForm(1, [act_left(TANGENT[lab], x) for lab in LABELS1])


def _mc_unknown_rows():
    """Linear system for the invariant coefficients of d omega_a."""
    from .quantum_group import gen
    ext = exterior_algebra()
    rows = []
    for g in ("a", "c", "as", "cs"):
        dx = differential0(gen(g))
        known = KForm.zero(2)
        for a, y in enumerate(dx.coeffs):
            if y:
                known = known + wedge(differential0(y), KForm.basis(1, a), ext)
        # unknown mu[a][r] multiplies y_a * basis2_r
        monos = set()
        for y in dx.coeffs:
            monos.update(y.terms)
        for c in known.coeffs:
            monos.update(c.terms)
        for r in range(3):
            for mo in monos:
                row = [ZERO] * 10
                for a, y in enumerate(dx.coeffs):
                    row[3 * a + r] = y.coefficient(mo)
                row[9] = -known.coeffs[r].coefficient(mo)
                if any(row):
                    rows.append(row)
    return rows


@lru_cache(maxsize=None)
def maurer_cartan():
    """
    (d omega_-, d omega_+, d omega_z) as invariant 2-form coefficient
    triples, the unique solution of d(dx) = 0 for x in {a, c, a*, c*}.
    """
    rows = _mc_unknown_rows()
    rref, pivots = linalg.row_reduce(rows)
    if 9 in pivots:
        raise ArithmeticError("Maurer-Cartan system is inconsistent")
    if len(pivots) != 9:
        raise ArithmeticError(f"Maurer-Cartan system has rank {len(pivots)} < 9")
    mu = [ZERO] * 9
    for i, p in enumerate(pivots):
        mu[p] = rref[i][9]
    return tuple(tuple(mu[3 * a: 3 * a + 3]) for a in range(3))


def d_basis(k: int, r: int) -> KForm:
    """d of an invariant basis form."""
    if k == 0:
        return KForm.zero(1)
    if k == 1:
        return KForm(2, [AlgebraElement.scalar(c) for c in maurer_cartan()[r]])
    if k == 2:
        a, b = BASIS_LIFTS[2][r]
        return wedge(d_basis(1, a), KForm.basis(1, b)) - wedge(KForm.basis(1, a), d_basis(1, b))
    raise ValueError("no invariant forms above degree 3")


def differential(phi) -> KForm:
    """Graded Leibniz extension: d(x basis_r) = dx ^ basis_r + x d(basis_r)."""
    if isinstance(phi, AlgebraElement):
        return differential0(phi)
    k = phi.degree
    if k == 0:
        return differential0(phi.coeffs[0])
    if k >= 3:
        raise ValueError("d of a top form is zero in degree 4, which has no invariant basis")
    out = KForm.zero(k + 1)
    for r, x in enumerate(phi.coeffs):
        if not x:
            continue
        out = out + wedge(differential0(x), KForm.basis(k, r)) + d_basis(k, r).left_mul(x)
    return out


differential_k = differential


def top_coefficient(phi: KForm) -> AlgebraElement:
    if phi.degree != 3:
        raise ValueError("not a top form")
    return phi.coeffs[0]


def classical_structure_constants():
    """
    At q = 1: d omega^a = -1/2 C^a_bc omega^b ^ omega^c.  Returns C as a
    nested list C[a][b][c] of Fractions.
    """
    mc = maurer_cartan()
    C = [[[0] * 3 for _ in range(3)] for _ in range(3)]
    for a in range(3):
        for r, (b, c) in enumerate(BASIS_LIFTS[2]):
            v = evaluate_at(mc[a][r], 1)
            C[a][b][c] = -v
            C[a][c][b] = v
    return C


def killing_form(C):
    return [[sum(C[d][a][e] * C[e][b][d] for d in range(3) for e in range(3)) for b in range(3)]
            for a in range(3)]


def jacobi_defect(C):
    out = 0
    for a, b, c, e in itertools.product(range(3), repeat=4):
        s = sum(C[d][a][b] * C[e][d][c] + C[d][b][c] * C[e][d][a] + C[d][c][a] * C[e][d][b]
                for d in range(3))
        out = max(out, abs(s))
    return out


def lowered_structure_constants(C):
    """C_abc = kappa_ad C^d_bc."""
    kap = killing_form(C)
    return [[[sum(kap[a][d] * C[d][b][c] for d in range(3)) for c in range(3)] for b in range(3)]
            for a in range(3)]


def totally_antisymmetric(T) -> bool:
    for a, b, c in itertools.product(range(3), repeat=3):
        v = T[a][b][c]
        if T[b][a][c] != -v or T[a][c][b] != -v or T[c][b][a] != -v:
            return False
    return True


def monomials_of_degree(d: int):
    from .quantum_group import monomials_up_to
    return [mo for mo in monomials_up_to(d) if mo.degree == d]


__all__ = [
    "ExteriorAlgebra", "KForm", "Monomial", "antisymmetrizer", "commute_right", "differential",
    "differential0", "exterior_algebra", "maurer_cartan", "sigma_matrix", "sigma_inverse_matrix",
    "star", "wedge", "wedge_relations",
]
