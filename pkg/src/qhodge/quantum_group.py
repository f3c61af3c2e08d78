"""
The coordinate Hopf *-algebra A(SU_q(2)) generated by a, c with

    u = [[a, -q c*], [c, a*]],   u u* = u* u = 1.

Relations (as normal-ordering rules towards a^k c^l c*^m / a*^k c^l c*^m):

    c a   -> q^-1 a c        c* a  -> q^-1 a c*       c* c -> c c*
    c a*  -> q a* c          c* a* -> q a* c*
    a* a  -> 1 - c c*        a a*  -> 1 - q^2 c c*

Elements are finite maps Monomial -> coefficient.  Coefficients are QRational
in the symbolic path, but any commutative scalar type with conj() (the
parameter ring of the Hodge module) is accepted.
"""

from __future__ import annotations

import hashlib
import json
import os
from collections import defaultdict
from functools import lru_cache
from typing import NamedTuple

from . import linalg
from .rewriting import Rewriter
from .scalar_field import ONE, Q, ZERO, QRational, as_qrational, qpow

GENERATORS = ("a", "as", "c", "cs")
STAR_OF = {"a": "as", "as": "a", "c": "cs", "cs": "c"}
CHARGE = {"a": -1, "c": -1, "as": 1, "cs": 1}


class Monomial(NamedTuple):
    """a^k c^l c*^m  (astar=False)  or  a*^k c^l c*^m  (astar=True, k >= 1)."""
    astar: bool
    k: int
    l: int
    m: int

    @property
    def degree(self) -> int:
        return self.k + self.l + self.m

    @property
    def charge(self) -> int:
        return (self.k if self.astar else -self.k) + self.m - self.l

    def word(self):
        return ("as" if self.astar else "a",) * self.k + ("c",) * self.l + ("cs",) * self.m

    def __str__(self):
        parts = []
        for name, e in (("as" if self.astar else "a", self.k), ("c", self.l), ("cs", self.m)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts) if parts else "1"

    def to_json(self):
        return {"branch": "astar" if self.astar else "a", "k": self.k, "l": self.l, "m": self.m}

    @classmethod
    def from_json(cls, d):
        return cls(d["branch"] == "astar", d["k"], d["l"], d["m"])


UNIT = Monomial(False, 0, 0, 0)


def _mono(astar, k, l, m):
    return Monomial(astar and k > 0, k, l, m)


@lru_cache(maxsize=None)
def _times_gen(x: Monomial, g: str):
    """x * g as a tuple of (Monomial, QRational)."""
    astar, k, l, m = x
    if g == "cs":
        return ((Monomial(astar, k, l, m + 1), ONE),)
    if g == "c":
        return ((Monomial(astar, k, l + 1, m), ONE),)
    if g == "a":
        f = qpow(-(l + m))
        if not astar:
            return ((Monomial(False, k + 1, l, m), f),)
        return ((_mono(True, k - 1, l, m), f), (_mono(True, k - 1, l + 1, m + 1), -f))
    if g == "as":
        f = qpow(l + m)
        if astar or k == 0:
            return ((Monomial(True, k + 1, l, m), f),)
        return ((Monomial(False, k - 1, l, m), f), (Monomial(False, k - 1, l + 1, m + 1), -f * Q * Q))
    raise KeyError(g)


@lru_cache(maxsize=None)
def mono_mul(x: Monomial, y: Monomial):
    """Normal form of x*y as a tuple of (Monomial, QRational)."""
    cur = {x: ONE}
    gen = "as" if y.astar else "a"
    for _ in range(y.k):
        nxt = defaultdict(lambda: ZERO)
        for mono, c in cur.items():
            for m2, c2 in _times_gen(mono, gen):
                nxt[m2] = nxt[m2] + c * c2
        cur = {mo: c for mo, c in nxt.items() if c}
    return tuple((Monomial(mo.astar, mo.k, mo.l + y.l, mo.m + y.m), c) for mo, c in cur.items())


def _add_into(acc: dict, key, c):
    v = acc.get(key)
    v = c if v is None else v + c
    if v:
        acc[key] = v
    else:
        acc.pop(key, None)


class AlgebraElement:
    """Finite linear combination of PBW monomials.  Treated as immutable."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for mo, c in terms.items():
                if c:
                    self.terms[mo] = c

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def scalar(cls, c) -> "AlgebraElement":
        if isinstance(c, int):
            c = QRational(c)
        return cls._raw({UNIT: c} if c else {})

    @classmethod
    def monomial(cls, mono: Monomial, c=ONE) -> "AlgebraElement":
        return cls._raw({mono: c} if c else {})

    @classmethod
    def generator(cls, name: str) -> "AlgebraElement":
        return cls.monomial({"a": Monomial(False, 1, 0, 0), "as": Monomial(True, 1, 0, 0),
                             "c": Monomial(False, 0, 1, 0), "cs": Monomial(False, 0, 0, 1)}[name])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            if isinstance(other, (int, QRational)):
                other = AlgebraElement.scalar(other)
            else:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other)
        out = dict(self.terms)
        for mo, c in other.terms.items():
            _add_into(out, mo, c)
        return AlgebraElement._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement._raw({mo: -c for mo, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            other = AlgebraElement.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "AlgebraElement":
        if not c:
            return AlgebraElement._raw({})
        out = {}
        for mo, v in self.terms.items():
            w = c * v
            if w:
                out[mo] = w
        return AlgebraElement._raw(out)

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        out = AlgebraElement.scalar(1)
        for _ in range(n):
            out = out * self
        return out

    @property
    def degree(self) -> int:
        return max((mo.degree for mo in self.terms), default=0)

    def coefficient(self, mono: Monomial = UNIT):
        return self.terms.get(mono, ZERO)

    def map_coefficients(self, fn) -> "AlgebraElement":
        return AlgebraElement({mo: fn(c) for mo, c in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0].degree, kv[0].astar, kv[0]))

    def __repr__(self):
        return f"AlgebraElement({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for mo, c in self.sorted_terms():
            parts.append(format_term(c, str(mo) if mo != UNIT else ""))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def to_json(self):
        return {"terms": [{"coeff": c.to_json(), "mono": mo.to_json()} for mo, c in self.sorted_terms()]}

    @classmethod
    def from_json(cls, data):
        return cls({Monomial.from_json(t["mono"]): QRational.from_json(t["coeff"]) for t in data["terms"]})


def format_term(c, body: str) -> str:
    """coefficient * body with the canonical printer conventions."""
    cs = str(c)
    simple = isinstance(c, QRational) and len(c.numerator.terms_q()) == 1 and c.is_laurent()
    if not body:
        return cs if simple or cs.startswith("(") else f"({cs})"
    if c == 1:
        return body
    if c == -1:
        return "-" + body
    if not simple:
        cs = f"({cs})"
    return f"{cs} * {body}"


def gen(name: str) -> AlgebraElement:
    return AlgebraElement.generator(name)


a, astar, c, cstar = (gen(n) for n in GENERATORS)
one = AlgebraElement.scalar(1)


def multiply(x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    out = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            c12 = c1 * c2
            for mo, f in mono_mul(m1, m2):
                _add_into(out, mo, c12 * f)
    return AlgebraElement._raw(out)


def normal_form(word) -> AlgebraElement:
    """Normal form of a word over {a, as, c, cs} (direct multiplication)."""
    out = one
    for g in word:
        out = multiply(out, gen(g))
    return out


RELATIONS = Rewriter({
    ("c", "a"): [(qpow(-1), ("a", "c"))],
    ("cs", "a"): [(qpow(-1), ("a", "cs"))],
    ("cs", "c"): [(ONE, ("c", "cs"))],
    ("c", "as"): [(Q, ("as", "c"))],
    ("cs", "as"): [(Q, ("as", "cs"))],
    ("as", "a"): [(ONE, ()), (-ONE, ("c", "cs"))],
    ("a", "as"): [(ONE, ()), (-Q * Q, ("c", "cs"))],
})


def word_to_monomial(word) -> Monomial:
    k = sum(1 for g in word if g in ("a", "as"))
    astar = any(g == "as" for g in word)
    return Monomial(astar, k, word.count("c"), word.count("cs"))


def normal_form_rewriting(word, strategy: str = "leftmost", rng=None) -> AlgebraElement:
    """Normal form by applying the relation rules to the word."""
    reduced = RELATIONS.reduce({tuple(word): ONE}, strategy, rng)
    return AlgebraElement({word_to_monomial(w): c for w, c in reduced.items()})


# ---------------------------------------------------------------------------
# star, Hopf structure

def _star_mono(x: Monomial) -> AlgebraElement:
    # (a^k c^l c*^m)* = c^m c*^l a*^k
    word = ("c",) * x.m + ("cs",) * x.l + (("a",) if x.astar else ("as",)) * x.k
    return normal_form(word)


def star(x: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement()
    for mo, c in x.terms.items():
        cc = c.conj() if hasattr(c, "conj") else c
        out = out + _star_mono(mo).scale(cc)
    return out


class TensorElement:
    """Finite map (Monomial, Monomial) -> coefficient: an element of A (x) A."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    def __eq__(self, other):
        return isinstance(other, TensorElement) and self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _add_into(out, k, v)
        return TensorElement(out)

    def __sub__(self, other):
        return self + TensorElement({k: -v for k, v in other.terms.items()})

    def __mul__(self, other):
        out = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                c12 = c1 * c2
                for mx, fx in mono_mul(x1, x2):
                    cx = c12 * fx
                    for my, fy in mono_mul(y1, y2):
                        _add_into(out, (mx, my), cx * fy)
        t = TensorElement.__new__(TensorElement)
        t.terms = out
        return t

    def scale(self, c) -> "TensorElement":
        return TensorElement({k: v * c for k, v in self.terms.items()})

    @classmethod
    def pure(cls, x: AlgebraElement, y: AlgebraElement) -> "TensorElement":
        return cls({(m1, m2): c1 * c2 for m1, c1 in x.terms.items() for m2, c2 in y.terms.items()})

    def apply(self, f, g) -> "TensorElement":
        """(f (x) g) for linear maps on AlgebraElements."""
        out = TensorElement()
        for (m1, m2), c in self.terms.items():
            out = out + TensorElement.pure(f(AlgebraElement.monomial(m1)).scale(c),
                                           g(AlgebraElement.monomial(m2)))
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(format_term(c, f"{m1} (x) {m2}") for (m1, m2), c in sorted(self.terms.items()))


_GEN_COPRODUCT = {
    "a": TensorElement.pure(a, a) - TensorElement.pure(cstar, c).scale(Q),
    "c": TensorElement.pure(c, a) + TensorElement.pure(astar, c),
    "as": TensorElement.pure(astar, astar) - TensorElement.pure(c, cstar).scale(Q),
    "cs": TensorElement.pure(a, cstar) + TensorElement.pure(cstar, astar),
}


@lru_cache(maxsize=None)
def _coproduct_mono(x: Monomial) -> TensorElement:
    if x == UNIT:
        return TensorElement({(UNIT, UNIT): ONE})
    word = x.word()
    head = word_to_monomial(word[:-1])
    return _coproduct_mono(head) * _GEN_COPRODUCT[word[-1]]


def coproduct(x: AlgebraElement) -> TensorElement:
    out = {}
    for mo, c in x.terms.items():
        for k, v in _coproduct_mono(mo).terms.items():
            _add_into(out, k, c * v)
    t = TensorElement.__new__(TensorElement)
    t.terms = out
    return t


def counit(x: AlgebraElement):
    acc = ZERO
    for mo, c in x.terms.items():
        if mo.l == 0 and mo.m == 0:
            acc = acc + c
    return acc


_GEN_ANTIPODE = {"a": astar, "as": a, "c": c.scale(-Q), "cs": cstar.scale(-qpow(-1))}


@lru_cache(maxsize=None)
def _antipode_mono(x: Monomial) -> AlgebraElement:
    out = one
    for g in x.word():
        out = multiply(_GEN_ANTIPODE[g], out)
    return out


def antipode(x: AlgebraElement) -> AlgebraElement:
    out = AlgebraElement()
    for mo, c in x.terms.items():
        out = out + _antipode_mono(mo).scale(c)
    return out


def tensor_multiply(t: TensorElement) -> AlgebraElement:
    """m : A (x) A -> A."""
    out = AlgebraElement()
    for (m1, m2), c in t.terms.items():
        out = out + AlgebraElement._raw(dict(mono_mul(m1, m2))).scale(c)
    return out


# ---------------------------------------------------------------------------
# U(1) grading: x in L_n iff (id (x) pi) Delta x = x (x) z^-n; n(a) = n(c) = -1

def charge(mono: Monomial) -> int:
    return mono.charge


def grade_decompose(x: AlgebraElement):
    parts = defaultdict(dict)
    for mo, c in x.terms.items():
        parts[mo.charge][mo] = c
    return [(n, AlgebraElement(parts[n])) for n in sorted(parts)]


def homogeneous_charge(x: AlgebraElement):
    """Charge of a nonzero homogeneous element, else None."""
    charges = {mo.charge for mo in x.terms}
    return charges.pop() if len(charges) == 1 else None


def coaction_u1(x: AlgebraElement):
    """
    delta_R = (id (x) pi) o Delta, with pi(a) = z, pi(a*) = z*, pi(c) = pi(c*) = 0.
    Returned as {power of z: AlgebraElement}.
    """
    out = defaultdict(AlgebraElement)
    for (m1, m2), v in coproduct(x).terms.items():
        if m2.l or m2.m:
            continue
        zpow = -m2.k if m2.astar else m2.k
        out[zpow] = out[zpow] + AlgebraElement.monomial(m1, v)
    return {p: e for p, e in out.items() if e}


def monomials_up_to(degree: int, charge_sector=None):
    out = []
    for d in range(degree + 1):
        for k in range(d + 1):
            for l in range(d - k + 1):
                m = d - k - l
                branches = (False, True) if k else (False,)
                for astar_ in branches:
                    mo = Monomial(astar_, k, l, m)
                    if charge_sector is None or mo.charge == charge_sector:
                        out.append(mo)
    return out


# ---------------------------------------------------------------------------
# Haar state

@lru_cache(maxsize=None)
def haar_cc(l: int) -> QRational:
    """h((c c*)^l) = (1 - q^2) / (1 - q^(2l+2)), as derived by solve_haar."""
    return (ONE - Q * Q) / (ONE - qpow(2 * l + 2))


def haar_monomial(mo: Monomial) -> QRational:
    if mo.k or mo.l != mo.m:
        return ZERO
    return haar_cc(mo.l)


def haar(x: AlgebraElement):
    acc = ZERO
    for mo, c in x.terms.items():
        h = haar_monomial(mo)
        if h:
            acc = acc + c * h
    return acc


def _invariance_rows(max_degree: int, index: dict):
    n = len(index)
    rows = set()
    for x in index:
        delta = _coproduct_mono(x)
        for side in (0, 1):
            eqs = defaultdict(dict)
            for (m1, m2), v in delta.terms.items():
                leg, hmono = (m1, m2) if side == 0 else (m2, m1)
                row = eqs[leg]
                row[index[hmono]] = row.get(index[hmono], ZERO) + v
            eqs[UNIT][index[x]] = eqs[UNIT].get(index[x], ZERO) - ONE
            for row in eqs.values():
                dense = [ZERO] * (n + 1)
                for j, v in row.items():
                    dense[j] = v
                if any(dense):
                    rows.add(tuple(dense))
    unit_row = [ZERO] * (n + 1)
    unit_row[index[UNIT]] = ONE
    unit_row[n] = ONE
    rows.add(tuple(unit_row))
    return [list(r) for r in rows]


def _cache_path(tag: str):
    root = os.environ.get("QHODGE_CACHE_DIR")
    if not root:
        return None
    key = hashlib.sha256(repr((tag, sorted(RELATIONS.rules.items(), key=str))).encode()).hexdigest()[:16]
    return os.path.join(root, f"{tag}-{key}.json")


@lru_cache(maxsize=None)
def solve_haar(max_degree: int):
    """
    Haar functional on monomials of degree <= max_degree from the invariance
    equations (id (x) h) Delta x = h(x) 1 = (h (x) id) Delta x and h(1) = 1.
    Raises ValueError unless the solution is unique.
    """
    path = _cache_path(f"haar{max_degree}")
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        return {Monomial.from_json(d["mono"]): QRational.from_json(d["value"]) for d in data}
    monos = monomials_up_to(max_degree)
    index = {mo: i for i, mo in enumerate(monos)}
    rows = _invariance_rows(max_degree, index)
    n = len(monos)
    rref, pivots = linalg.row_reduce(rows)
    if n in pivots:
        raise ValueError("Haar invariance system is inconsistent")
    if len(pivots) != n:
        raise ValueError(f"Haar invariance system has rank {len(pivots)} < {n}")
    values = {monos[p]: rref[i][n] for i, p in enumerate(pivots)}
    if path:
        os.makedirs(os.path.dirname(path), exist_ok=True)
        with open(path, "w") as fh:
            json.dump([{"mono": mo.to_json(), "value": v.to_json()} for mo, v in values.items()], fh)
    return values


def haar_invariance_defect(x: AlgebraElement):
    """((id (x) h) Delta x - h(x) 1, (h (x) id) Delta x - h(x) 1)."""
    left = AlgebraElement()
    right = AlgebraElement()
    for (m1, m2), v in coproduct(x).terms.items():
        h2 = haar_monomial(m2)
        if h2:
            left = left + AlgebraElement.monomial(m1, v * h2)
        h1 = haar_monomial(m1)
        if h1:
            right = right + AlgebraElement.monomial(m2, v * h1)
    hx = AlgebraElement.scalar(haar(x))
    return left - hx, right - hx


def random_monomial(rng, max_degree: int) -> Monomial:
    d = rng.randint(0, max_degree)
    k = rng.randint(0, d)
    l = rng.randint(0, d - k)
    return Monomial(bool(k) and rng.random() < 0.5, k, l, d - k - l)


def random_word(rng, max_length: int):
    return tuple(rng.choice(GENERATORS) for _ in range(rng.randint(0, max_length)))


def as_element(x) -> AlgebraElement:
    if isinstance(x, AlgebraElement):
        return x
    return AlgebraElement.scalar(as_qrational(x) if isinstance(x, int) else x)
