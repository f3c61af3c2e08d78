"""
U_q(su(2)) with PBW basis F^i E^j K^l, its Hopf *-structure, the dual pairing
with A(SU_q(2)) and the two canonical actions

    h |> x = x_(1) <h, x_(2)>,      x <| h = <h, x_(1)> x_(2).

The pairing of a PBW monomial h with a word u_{i1 j1} ... u_{in jn} in the
matrix entries of u is the (I, J) matrix element of h in the n-fold tensor
power of the fundamental representation h -> <h, u>; the coproduct of h
enters through the K^-1 (x) ... (x) E (x) K ... (x) K expansion.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import NamedTuple

from .quantum_group import (AlgebraElement, Monomial, TensorElement, _add_into,
                            coproduct, format_term)
from .rewriting import Rewriter
from .scalar_field import ONE, Q, S, ZERO, QRational, qpow

UEA_GENERATORS = ("E", "F", "K", "Kinv")


class UEAMonomial(NamedTuple):
    """F^i E^j K^l."""
    i: int
    j: int
    l: int

    def word(self):
        k = ("K",) if self.l > 0 else ("Kinv",)
        return ("F",) * self.i + ("E",) * self.j + k * abs(self.l)

    def __str__(self):
        parts = []
        for name, e in (("F", self.i), ("E", self.j)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        if self.l == 1:
            parts.append("K")
        elif self.l == -1:
            parts.append("Kinv")
        elif self.l > 0:
            parts.append(f"K^{self.l}")
        elif self.l < 0:
            parts.append(f"Kinv^{-self.l}")
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {"i": self.i, "j": self.j, "l": self.l}


UEA_UNIT = UEAMonomial(0, 0, 0)
_QMQI = Q - qpow(-1)  # q - q^-1


@lru_cache(maxsize=None)
def _uea_times_gen(x: UEAMonomial, g: str):
    i, j, l = x
    if g == "K":
        return ((UEAMonomial(i, j, l + 1), ONE),)
    if g == "Kinv":
        return ((UEAMonomial(i, j, l - 1), ONE),)
    if g == "E":
        return ((UEAMonomial(i, j + 1, l), qpow(l)),)
    if g == "F":
        f = qpow(-l)
        out = [(UEAMonomial(i + 1, j, l), f)]
        if j:
            cp = sum((qpow(2 * r) for r in range(j)), ZERO) / _QMQI
            cm = sum((qpow(-2 * r) for r in range(j)), ZERO) / _QMQI
            out.append((UEAMonomial(i, j - 1, l + 2), f * cp))
            out.append((UEAMonomial(i, j - 1, l - 2), -f * cm))
        return tuple(out)
    raise KeyError(g)


@lru_cache(maxsize=None)
def uea_mono_mul(x: UEAMonomial, y: UEAMonomial):
    cur = {x: ONE}
    for g in ("F",) * y.i + ("E",) * y.j:
        nxt = {}
        for mo, c in cur.items():
            for m2, c2 in _uea_times_gen(mo, g):
                _add_into(nxt, m2, c * c2)
        cur = nxt
    return tuple((UEAMonomial(mo.i, mo.j, mo.l + y.l), c) for mo, c in cur.items())


class UEAElement:
    """Finite combination of PBW monomials F^i E^j K^l."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def scalar(cls, c) -> "UEAElement":
        return cls({UEA_UNIT: QRational(c) if isinstance(c, int) else c})

    @classmethod
    def monomial(cls, mo: UEAMonomial, c=ONE) -> "UEAElement":
        return cls({mo: c})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, UEAElement):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return UEAElement(out)

    __radd__ = __add__

    def __neg__(self):
        return UEAElement({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, UEAElement):
            other = UEAElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "UEAElement":
        return UEAElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UEAElement):
            out = {}
            for m1, c1 in self.terms.items():
                for m2, c2 in other.terms.items():
                    c12 = c1 * c2
                    for mo, f in uea_mono_mul(m1, m2):
                        _add_into(out, mo, c12 * f)
            return UEAElement(out)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = UEAElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        return f"UEAElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        items = sorted(self.terms.items())
        parts = [format_term(c, str(mo) if mo != UEA_UNIT else "") for mo, c in items]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        return {"terms": [{"coeff": c.to_json(), "mono": mo.to_json()} for mo, c in sorted(self.terms.items())]}

    @classmethod
    def from_json(cls, data):
        return cls({UEAMonomial(t["mono"]["i"], t["mono"]["j"], t["mono"]["l"]): QRational.from_json(t["coeff"])
                    for t in data["terms"]})


E = UEAElement.monomial(UEAMonomial(0, 1, 0))
F = UEAElement.monomial(UEAMonomial(1, 0, 0))
K = UEAElement.monomial(UEAMonomial(0, 0, 1))
Kinv = UEAElement.monomial(UEAMonomial(0, 0, -1))
_UEA_GEN = {"E": E, "F": F, "K": K, "Kinv": Kinv}


def uea_generator(name: str) -> UEAElement:
    return _UEA_GEN[name]


def uea_normal_form(word) -> UEAElement:
    out = UEAElement.scalar(1)
    for g in word:
        out = out * _UEA_GEN[g]
    return out


UEA_RELATIONS = Rewriter({
    ("K", "E"): [(Q, ("E", "K"))],
    ("Kinv", "E"): [(qpow(-1), ("E", "Kinv"))],
    ("K", "F"): [(qpow(-1), ("F", "K"))],
    ("Kinv", "F"): [(Q, ("F", "Kinv"))],
    ("E", "F"): [(ONE, ("F", "E")), (ONE / _QMQI, ("K", "K")), (-ONE / _QMQI, ("Kinv", "Kinv"))],
    ("K", "Kinv"): [(ONE, ())],
    ("Kinv", "K"): [(ONE, ())],
})


def uea_word_to_monomial(word) -> UEAMonomial:
    return UEAMonomial(word.count("F"), word.count("E"), word.count("K") - word.count("Kinv"))


def uea_normal_form_rewriting(word, strategy="leftmost") -> UEAElement:
    reduced = UEA_RELATIONS.reduce({tuple(word): ONE}, strategy)
    return UEAElement({uea_word_to_monomial(w): c for w, c in reduced.items()})


# ---------------------------------------------------------------------------
# Hopf *-structure

class UEATensor:
    """Element of U (x) U: map (UEAMonomial, UEAMonomial) -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def pure(cls, x: UEAElement, y: UEAElement):
        return cls({(m1, m2): c1 * c2 for m1, c1 in x.terms.items() for m2, c2 in y.terms.items()})

    def __eq__(self, other):
        return isinstance(other, UEATensor) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return UEATensor(out)

    def __mul__(self, other):
        out = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                c12 = c1 * c2
                for mx, fx in uea_mono_mul(x1, x2):
                    for my, fy in uea_mono_mul(y1, y2):
                        _add_into(out, (mx, my), c12 * fx * fy)
        return UEATensor(out)

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(format_term(c, f"{m1} (x) {m2}") for (m1, m2), c in sorted(self.terms.items()))


_UEA_GEN_COPRODUCT = {
    "K": UEATensor.pure(K, K),
    "Kinv": UEATensor.pure(Kinv, Kinv),
    "E": UEATensor.pure(E, K) + UEATensor.pure(Kinv, E),
    "F": UEATensor.pure(F, K) + UEATensor.pure(Kinv, F),
}


@lru_cache(maxsize=None)
def _uea_coproduct_mono(x: UEAMonomial) -> UEATensor:
    out = UEATensor({(UEA_UNIT, UEA_UNIT): ONE})
    for g in x.word():
        out = out * _UEA_GEN_COPRODUCT[g]
    return out


def uea_coproduct(h: UEAElement) -> UEATensor:
    out = {}
    for mo, c in h.terms.items():
        for k, v in _uea_coproduct_mono(mo).terms.items():
            _add_into(out, k, c * v)
    return UEATensor(out)


def uea_counit(h: UEAElement):
    acc = ZERO
    for mo, c in h.terms.items():
        if mo.i == 0 and mo.j == 0:
            acc = acc + c
    return acc


_UEA_GEN_ANTIPODE = {"K": Kinv, "Kinv": K, "E": E.scale(-Q), "F": F.scale(-qpow(-1))}


def uea_antipode(h: UEAElement) -> UEAElement:
    out = UEAElement()
    for mo, c in h.terms.items():
        term = UEAElement.scalar(1)
        for g in mo.word():
            term = _UEA_GEN_ANTIPODE[g] * term
        out = out + term.scale(c)
    return out


_UEA_STAR = {"K": K, "Kinv": Kinv, "E": F, "F": E}


def uea_star(h: UEAElement) -> UEAElement:
    out = UEAElement()
    for mo, c in h.terms.items():
        term = UEAElement.scalar(1)
        for g in mo.word():
            term = _UEA_STAR[g] * term
        out = out + term.scale(c.conj() if hasattr(c, "conj") else c)
    return out


def uea_tensor_multiply(t: UEATensor) -> UEAElement:
    out = UEAElement()
    for (m1, m2), c in t.terms.items():
        out = out + UEAElement(dict(uea_mono_mul(m1, m2))).scale(c)
    return out


# ---------------------------------------------------------------------------
# pairing

# generator -> (row, col, scalar) with generator = scalar * u_{row col}
_ENTRY = {"a": (0, 0, ONE), "as": (1, 1, ONE), "c": (1, 0, ONE), "cs": (0, 1, -qpow(-1))}
# K acts diagonally on the fundamental representation: q^-1/2, q^1/2
_K_DIAG = (S.inverse(), S)


def _k_factor(idx, power):
    return _K_DIAG[idx] ** power if power else ONE


def _raise_lower(vec: dict, src: int, dst: int):
    """Apply E (src=0 -> dst=1) or F (src=1 -> dst=0) in the tensor power."""
    out = {}
    for idx, c in vec.items():
        n = len(idx)
        for t in range(n):
            if idx[t] != src:
                continue
            f = c
            for u in range(t):
                f = f * _K_DIAG[idx[u]].inverse()
            for u in range(t + 1, n):
                f = f * _K_DIAG[idx[u]]
            new = idx[:t] + (dst,) + idx[t + 1:]
            _add_into(out, new, f)
    return out


@lru_cache(maxsize=None)
def pairing_monomials(h: UEAMonomial, x: Monomial) -> QRational:
    word = x.word()
    rows = tuple(_ENTRY[g][0] for g in word)
    cols = tuple(_ENTRY[g][1] for g in word)
    scal = ONE
    for g in word:
        scal = scal * _ENTRY[g][2]
    # h = F^i E^j K^l applied to e_cols
    kf = ONE
    for idx in cols:
        kf = kf * _k_factor(idx, h.l)
    vec = {cols: kf}
    for _ in range(h.j):
        vec = _raise_lower(vec, 0, 1)
    for _ in range(h.i):
        vec = _raise_lower(vec, 1, 0)
    return scal * vec.get(rows, ZERO)


def pairing(h: UEAElement, x: AlgebraElement):
    acc = ZERO
    for hm, hc in h.terms.items():
        for xm, xc in x.terms.items():
            v = pairing_monomials(hm, xm)
            if v:
                acc = acc + hc * xc * v
    return acc


def pairing_tensor(t: UEATensor, x: TensorElement):
    """<h1 (x) h2, x1 (x) x2> = <h1, x1><h2, x2>."""
    acc = ZERO
    for (h1, h2), hc in t.terms.items():
        for (x1, x2), xc in x.terms.items():
            v1 = pairing_monomials(h1, x1)
            if v1:
                v2 = pairing_monomials(h2, x2)
                if v2:
                    acc = acc + hc * xc * v1 * v2
    return acc


@lru_cache(maxsize=None)
def _act_left_mono(hm: UEAMonomial, xm: Monomial):
    out = {}
    for (m1, m2), v in coproduct(AlgebraElement.monomial(xm)).terms.items():
        p = pairing_monomials(hm, m2)
        if p:
            _add_into(out, m1, v * p)
    return tuple(out.items())


@lru_cache(maxsize=None)
def _act_right_mono(hm: UEAMonomial, xm: Monomial):
    out = {}
    for (m1, m2), v in coproduct(AlgebraElement.monomial(xm)).terms.items():
        p = pairing_monomials(hm, m1)
        if p:
            _add_into(out, m2, v * p)
    return tuple(out.items())


def _act(table, h: UEAElement, x: AlgebraElement) -> AlgebraElement:
    out = {}
    for hm, hc in h.terms.items():
        for xm, xc in x.terms.items():
            f = hc * xc
            for mo, v in table(hm, xm):
                _add_into(out, mo, f * v)
    return AlgebraElement(out)


def act_left(h: UEAElement, x: AlgebraElement) -> AlgebraElement:
    """h |> x = x_(1) <h, x_(2)>."""
    return _act(_act_left_mono, h, x)


def act_right(x: AlgebraElement, h: UEAElement) -> AlgebraElement:
    """x <| h = <h, x_(1)> x_(2)."""
    return _act(_act_right_mono, h, x)


# ---------------------------------------------------------------------------
# quantum tangent space dual to (omega_-, omega_+, omega_z)

X_MINUS = (F * K).scale(S.inverse())
X_PLUS = (E * K).scale(S)
X_Z = (UEAElement.scalar(1) - K ** 4).scale((ONE - qpow(-2)).inverse())
TANGENT = {"wm": X_MINUS, "wp": X_PLUS, "wz": X_Z}


def tangent_vector(name: str) -> UEAElement:
    """'Xm' | 'Xp' | 'Xz' (or the form labels wm, wp, wz)."""
    key = {"Xm": "wm", "Xp": "wp", "Xz": "wz"}.get(name, name)
    return TANGENT[key]


def star_compatibility_defects():
    """
    <h*, x> - conj <h, S(x)*> for h in {K, Kinv, E, F} and x in the four
    generators.  Returns the nonzero defects (empty list when the standard
    convention holds).
    """
    from .quantum_group import antipode, gen, star
    out = []
    for hn in UEA_GENERATORS:
        h = _UEA_GEN[hn]
        for xn in ("a", "as", "c", "cs"):
            x = gen(xn)
            lhs = pairing(uea_star(h), x)
            rhs = pairing(h, star(antipode(x)))
            if lhs != rhs.conj():
                out.append((hn, xn, lhs, rhs))
    return out
