"""
Exact arithmetic in the field Q(q) of rational functions of the deformation
parameter.

Internally the variable is s = q^(1/2), so that the fractional powers
q^(+-1/2) of the pairing and of the tangent vectors stay polynomial.  A value
is stored as

    s^e * N(s) / D(s)

with N(0) != 0, D(0) != 0, gcd(N, D) = 1 and D monic.  This is a canonical
form: two values are equal iff their (e, N, D) triples are equal.

Polynomials are tuples of Fractions in ascending order with no trailing
zeros; () is the zero polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

Scalar = Union[int, Fraction, "QRational"]

_ZERO = Fraction(0)
_ONE = Fraction(1)


class PoleError(ZeroDivisionError):
    """Evaluation hit a zero of the denominator."""

    def __init__(self, value, q0):
        self.value = value
        self.q0 = q0
        super().__init__(f"pole at q = {q0}: denominator {value.denominator_q()} vanishes")


# ---------------------------------------------------------------------------
# dense univariate polynomial helpers (tuples of Fractions)

def _trim(p):
    n = len(p)
    while n and not p[n - 1]:
        n -= 1
    return tuple(p[:n])


def _padd(p, r):
    if len(p) < len(r):
        p, r = r, p
    out = list(p)
    for i, c in enumerate(r):
        out[i] += c
    return _trim(out)


def _psub(p, r):
    out = list(p) + [_ZERO] * (len(r) - len(p))
    for i, c in enumerate(r):
        out[i] -= c
    return _trim(out)


def _pmul(p, r):
    if not p or not r:
        return ()
    if len(p) == 1:
        c = p[0]
        return tuple(c * x for x in r)
    if len(r) == 1:
        c = r[0]
        return tuple(c * x for x in p)
    out = [_ZERO] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(r):
                out[i + j] += a * b
    return tuple(out)


def _pscale(p, c):
    if not c:
        return ()
    return tuple(c * x for x in p)


def _pdivmod(p, r):
    """Long division p = quo * r + rem."""
    if not r:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dr = len(r) - 1
    lead = r[-1]
    if len(p) - 1 < dr:
        return (), _trim(rem)
    quo = [_ZERO] * (len(p) - dr)
    for i in range(len(p) - 1 - dr, -1, -1):
        c = rem[i + dr] / lead
        if c:
            quo[i] = c
            for j, b in enumerate(r):
                rem[i + j] -= c * b
    return _trim(quo), _trim(rem[:dr])


def _pmonic(p):
    lead = p[-1]
    if lead == 1:
        return p
    return tuple(c / lead for c in p)


def _pgcd(p, r):
    """Monic gcd by the Euclidean algorithm over Q."""
    while r:
        p, r = r, _pdivmod(p, r)[1]
    return _pmonic(p) if p else ()


def _low_order(p):
    """Split p = s^k * p' with p'(0) != 0."""
    k = 0
    while k < len(p) and not p[k]:
        k += 1
    return k, p[k:]


def _peval(p, x):
    acc = _ZERO
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------

class QPolynomial:
    """
    Laurent polynomial in s = q^(1/2) with rational coefficients,
    value s^shift * (c_0 + c_1 s + ...).
    """

    __slots__ = ("shift", "coeffs")

    def __init__(self, coeffs: Iterable = (), shift: int = 0):
        k, c = _low_order(_trim(tuple(Fraction(x) for x in coeffs)))
        self.coeffs = c
        self.shift = shift + k if c else 0

    @classmethod
    def from_q(cls, terms: dict) -> "QPolynomial":
        """Build from {power of q: coefficient}; powers may be half-integers."""
        if not terms:
            return cls()
        s_terms = {}
        for pw, c in terms.items():
            sp = Fraction(pw) * 2
            if sp.denominator != 1:
                raise ValueError(f"power {pw} is not a multiple of 1/2")
            s_terms[int(sp)] = s_terms.get(int(sp), _ZERO) + Fraction(c)
        lo = min(s_terms)
        hi = max(s_terms)
        return cls([s_terms.get(i, _ZERO) for i in range(lo, hi + 1)], lo)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.shift == other.shift and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.shift, self.coeffs))

    def __add__(self, other):
        e = min(self.shift, other.shift)
        a = (_ZERO,) * (self.shift - e) + self.coeffs
        b = (_ZERO,) * (other.shift - e) + other.coeffs
        return QPolynomial(_padd(a, b), e)

    def __neg__(self):
        return QPolynomial(tuple(-c for c in self.coeffs), self.shift)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return QPolynomial(_pmul(self.coeffs, other.coeffs), self.shift + other.shift)

    def terms_q(self):
        """[(power of q, coefficient)] ascending, powers as Fractions."""
        return [(Fraction(self.shift + i, 2), c) for i, c in enumerate(self.coeffs) if c]

    def __repr__(self):
        return f"QPolynomial({_format_terms(self.terms_q())})"


def normalize(n: QPolynomial, d: QPolynomial) -> "QRational":
    """Reduced canonical form of n/d."""
    if not d:
        raise ZeroDivisionError("zero denominator")
    return QRational._make(n.shift - d.shift, n.coeffs, d.coeffs)


class QRational:
    """An element of Q(q^(1/2)) in reduced canonical form.  Immutable."""

    __slots__ = ("e", "num", "den", "_hash")

    def __init__(self, value=0):
        if isinstance(value, QRational):
            self.e, self.num, self.den = value.e, value.num, value.den
        else:
            f = Fraction(value)
            self.e = 0
            self.num = (f,) if f else ()
            self.den = (_ONE,)
        self._hash = None

    @classmethod
    def _raw(cls, e, num, den):
        obj = object.__new__(cls)
        obj.e = e if num else 0
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def _make(cls, e, num, den):
        """Canonicalize s^e * num / den (num, den trimmed tuples)."""
        num = _trim(num)
        den = _trim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return ZERO
        k, num = _low_order(num)
        j, den = _low_order(den)
        e += k - j
        if len(den) > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return cls._raw(e, num, den)

    @classmethod
    def monomial(cls, coeff, q_power) -> "QRational":
        """coeff * q^q_power (q_power may be a half-integer)."""
        sp = Fraction(q_power) * 2
        if sp.denominator != 1:
            raise ValueError("q-power must be a multiple of 1/2")
        c = Fraction(coeff)
        if not c:
            return ZERO
        return cls._raw(int(sp), (c,), (_ONE,))

    # -- structure ----------------------------------------------------------

    @property
    def numerator(self) -> QPolynomial:
        return QPolynomial(self.num, self.e)

    @property
    def denominator(self) -> QPolynomial:
        return QPolynomial(self.den, 0)

    def denominator_q(self):
        return _format_terms(self.denominator.terms_q())

    def is_laurent(self) -> bool:
        return len(self.den) == 1

    def is_integral_in_q(self) -> bool:
        """True iff the value only involves integer powers of q."""
        if self.e % 2:
            return False
        return all(not c for c in self.num[1::2]) and all(not c for c in self.den[1::2])

    def __bool__(self):
        return bool(self.num)

    def __eq__(self, other):
        if isinstance(other, QRational):
            return self.e == other.e and self.num == other.num and self.den == other.den
        if isinstance(other, (int, Fraction)):
            return self == QRational(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.e, self.num, self.den))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QRational):
            if isinstance(other, (int, Fraction)):
                other = QRational(other)
            else:
                return NotImplemented
        if not other.num:
            return self
        if not self.num:
            return other
        e = min(self.e, other.e)
        a = (_ZERO,) * (self.e - e) + self.num
        b = (_ZERO,) * (other.e - e) + other.num
        if self.den == other.den:
            if len(self.den) == 1:
                n = _padd(a, b)
                if not n:
                    return ZERO
                k, n = _low_order(n)
                return QRational._raw(e + k, n, self.den)
            return QRational._make(e, _padd(a, b), self.den)
        return QRational._make(e, _padd(_pmul(a, other.den), _pmul(b, self.den)),
                               _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return QRational._raw(self.e, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        if not isinstance(other, QRational):
            if isinstance(other, (int, Fraction)):
                other = QRational(other)
            else:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, QRational):
            if isinstance(other, (int, Fraction)):
                f = Fraction(other)
                if not f:
                    return ZERO
                return QRational._raw(self.e, tuple(c * f for c in self.num), self.den)
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        e = self.e + other.e
        if len(self.den) == 1 and len(other.den) == 1:
            return QRational._raw(e, _pmul(self.num, other.num), self.den)
        return QRational._make(e, _pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inverse(self) -> "QRational":
        if not self.num:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRational._make(-self.e, self.den, self.num)

    def __truediv__(self, other):
        if not isinstance(other, QRational):
            if isinstance(other, (int, Fraction)):
                other = QRational(other)
            else:
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return QRational(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conj(self) -> "QRational":
        # q is real
        return self

    # -- evaluation ---------------------------------------------------------

    def evaluate_at(self, q0) -> Fraction:
        return evaluate_at(self, q0)

    # -- printing / serialization -------------------------------------------

    def __repr__(self):
        return f"QRational({self})"

    def __str__(self):
        n = _format_terms(self.numerator.terms_q())
        if len(self.den) == 1:
            return n
        d = _format_terms(self.denominator.terms_q())
        if len(self.numerator.terms_q()) > 1:
            n = f"({n})"
        return f"{n}/({d})"

    def to_json(self) -> dict:
        return {"num": [[_json_power(p), str(c)] for p, c in self.numerator.terms_q()],
                "den": [[_json_power(p), str(c)] for p, c in self.denominator.terms_q()]}

    @classmethod
    def from_json(cls, data: dict) -> "QRational":
        def poly(terms):
            return QPolynomial.from_q({Fraction(p): Fraction(c) for p, c in terms})
        return normalize(poly(data["num"]), poly(data["den"]))


def _json_power(p: Fraction):
    return int(p) if p.denominator == 1 else str(p)


def _format_power(p: Fraction) -> str:
    if p == 0:
        return ""
    if p == 1:
        return "q"
    if p.denominator == 1:
        return f"q^{p.numerator}"
    return f"q^({p})"


def _format_terms(terms) -> str:
    if not terms:
        return "0"
    parts = []
    for p, c in terms:
        qp = _format_power(p)
        mag = abs(c)
        if not qp:
            body = str(mag)
        elif mag == 1:
            body = qp
        else:
            body = f"{mag}*{qp}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts)


ZERO = QRational._raw(0, (), (_ONE,))
ONE = QRational._raw(0, (_ONE,), (_ONE,))
#: s = q^(1/2), the internal variable
S = QRational._raw(1, (_ONE,), (_ONE,))
#: the deformation parameter q = s^2
Q = QRational._raw(2, (_ONE,), (_ONE,))


def qpow(n) -> QRational:
    """q^n for integer or half-integer n."""
    return QRational.monomial(1, n)


def as_qrational(x) -> QRational:
    if isinstance(x, QRational):
        return x
    return QRational(x)


def q_polynomial(*coeffs) -> QRational:
    """c_0 + c_1 q + c_2 q^2 + ..."""
    s_coeffs = []
    for c in coeffs:
        s_coeffs += [Fraction(c), _ZERO]
    return QRational._make(0, tuple(s_coeffs), (_ONE,))


def _rational_sqrt(x: Fraction):
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def evaluate_at(x: QRational, q0) -> Fraction:
    """
    Exact value of x at q = q0 (a rational).  Half-integer powers of q are
    only allowed when q0 is the square of a rational.
    """
    q0 = Fraction(q0)
    if x.is_integral_in_q():
        # evaluate as a function of q
        num_q = x.num[0::2]
        den_q = x.den[0::2]
        n = _peval(num_q, q0)
        d = _peval(den_q, q0)
        if not d:
            raise PoleError(x, q0)
        if x.e and not q0:
            if x.e < 0:
                raise PoleError(x, q0)
            return _ZERO
        return n / d * q0 ** (x.e // 2)
    s0 = _rational_sqrt(q0)
    if s0 is None:
        raise ValueError(f"{x} involves q^(1/2), which is irrational at q = {q0}")
    n = _peval(x.num, s0)
    d = _peval(x.den, s0)
    if not d or (x.e < 0 and not s0):
        raise PoleError(x, q0)
    if not s0:
        return _ZERO
    return n / d * s0 ** x.e


def sign_at(x: QRational, q0) -> int:
    v = evaluate_at(x, q0)
    return (v > 0) - (v < 0)


def parse_rational(text: str) -> Fraction:
    """'1/2', '3', '-2/5' -> Fraction; floats are rejected."""
    text = text.strip()
    if any(ch in text for ch in ".eE"):
        raise ValueError(f"exact rational expected, got {text!r}")
    return Fraction(text)


def qsum(values) -> QRational:
    return reduce(lambda a, b: a + b, values, ZERO)
