"""
Coefficient ring for Hodge data: Laurent polynomials in the contraction
parameters alpha, beta, gamma and the volume scales m (group) and mc (sphere),
with coefficients in Q(q^(1/2))[i], i^2 = -1.

Symbols are real under the star; conj() sends i -> -i.  Numeric values are
substituted with subs().
"""

from __future__ import annotations

from fractions import Fraction

from .scalar_field import ONE, ZERO, QRational, as_qrational, evaluate_at

SYMBOLS = ("alpha", "beta", "gamma", "m", "mc")
_NSYM = len(SYMBOLS)
_ZERO_EXP = (0,) * _NSYM


class ParamPoly:
    """Immutable; terms maps (exponents, i_power) -> QRational."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                if c:
                    self.terms[k] = c
        self._hash = None

    @classmethod
    def _raw(cls, terms):
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def symbol(cls, name: str) -> "ParamPoly":
        exp = [0] * _NSYM
        exp[SYMBOLS.index(name)] = 1
        return cls._raw({(tuple(exp), 0): ONE})

    @classmethod
    def const(cls, value) -> "ParamPoly":
        if isinstance(value, ParamPoly):
            return value
        value = as_qrational(value)
        return cls._raw({(_ZERO_EXP, 0): value} if value else {})

    @classmethod
    def gaussian(cls, re, im) -> "ParamPoly":
        """re + i*im with re, im in Q(q)."""
        return cls.const(re) + cls.const(im) * I

    # -- predicates ---------------------------------------------------------

    def __bool__(self):
        return bool(self.terms)

    def is_const(self) -> bool:
        return all(k[0] == _ZERO_EXP for k in self.terms)

    def is_real_const(self) -> bool:
        return all(k == (_ZERO_EXP, 0) for k in self.terms)

    def const_value(self) -> QRational:
        if not self.is_real_const():
            raise ValueError(f"{self} is not a real constant")
        return self.terms.get((_ZERO_EXP, 0), ZERO)

    def symbols(self):
        used = set()
        for exp, _ in self.terms:
            used.update(SYMBOLS[j] for j, e in enumerate(exp) if e)
        return used

    def __eq__(self, other):
        if not isinstance(other, ParamPoly):
            try:
                other = ParamPoly.const(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k)
            v = c if v is None else v + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return ParamPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return ParamPoly._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ParamPoly):
            other = ParamPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ParamPoly):
            c = as_qrational(other)
            if not c:
                return ParamPoly._raw({})
            return ParamPoly._raw({k: v * c for k, v in self.terms.items()})
        out = {}
        for (e1, i1), c1 in self.terms.items():
            for (e2, i2), c2 in other.terms.items():
                c = c1 * c2
                ip = i1 + i2
                if ip == 2:
                    c = -c
                    ip = 0
                key = (tuple(a + b for a, b in zip(e1, e2)), ip)
                v = out.get(key)
                v = c if v is None else v + c
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return ParamPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = ParamPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self) -> "ParamPoly":
        """Inverse of a monomial (times a Gaussian constant)."""
        exps = {k[0] for k in self.terms}
        if len(exps) != 1:
            raise ZeroDivisionError(f"{self} is not invertible in the parameter ring")
        exp = exps.pop()
        re = self.terms.get((exp, 0), ZERO)
        im = self.terms.get((exp, 1), ZERO)
        norm = re * re + im * im
        inv_exp = tuple(-e for e in exp)
        out = {}
        if re:
            out[(inv_exp, 0)] = re / norm
        if im:
            out[(inv_exp, 1)] = -im / norm
        return ParamPoly._raw(out)

    def __truediv__(self, other):
        if isinstance(other, ParamPoly):
            return self * other.inverse()
        return self * as_qrational(other).inverse()

    def __rtruediv__(self, other):
        return ParamPoly.const(other) * self.inverse()

    def conj(self) -> "ParamPoly":
        return ParamPoly._raw({k: (-c if k[1] else c) for k, c in self.terms.items()})

    # -- substitution -------------------------------------------------------

    def subs(self, values: dict) -> "ParamPoly":
        """Substitute symbols by scalars / ParamPolys."""
        out = ParamPoly._raw({})
        for (exp, ip), c in self.terms.items():
            term = ParamPoly._raw({(_ZERO_EXP, ip): c})
            rest = list(exp)
            for j, name in enumerate(SYMBOLS):
                if exp[j] and name in values:
                    term = term * ParamPoly.const(values[name]) ** exp[j]
                    rest[j] = 0
            term = term * ParamPoly._raw({(tuple(rest), 0): ONE})
            out = out + term
        return out

    def reduce_square(self, name: str, square) -> "ParamPoly":
        """Rewrite even powers of `name` using name^2 = square."""
        j = SYMBOLS.index(name)
        sq = ParamPoly.const(square)
        out = ParamPoly._raw({})
        for (exp, ip), c in self.terms.items():
            e = exp[j]
            half, odd = divmod(e, 2)
            rest = list(exp)
            rest[j] = odd
            term = ParamPoly._raw({(tuple(rest), ip): c}) * sq ** half
            out = out + term
        return out

    def at_q(self, q0) -> "ParamPoly":
        """Evaluate the Q(q) coefficients at q = q0 (symbols stay)."""
        return ParamPoly({k: QRational(evaluate_at(c, q0)) for k, c in self.terms.items()})

    def evaluate(self, q0):
        """Numeric value of a constant: Fraction, or (re, im) if complex."""
        if not self.is_const():
            raise ValueError(f"{self} still contains symbols {sorted(self.symbols())}")
        re = evaluate_at(self.terms.get((_ZERO_EXP, 0), ZERO), q0)
        im = evaluate_at(self.terms.get((_ZERO_EXP, 1), ZERO), q0)
        return re if not im else (re, im)

    def __complex__(self):
        raise TypeError("use evaluate(q0)")

    # -- printing -----------------------------------------------------------

    def __repr__(self):
        return f"ParamPoly({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (exp, ip), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])):
            mono = []
            if ip:
                mono.append("i")
            for name, e in zip(SYMBOLS, exp):
                if e == 1:
                    mono.append(name)
                elif e:
                    mono.append(f"{name}^{e}")
            cs = str(c)
            if c == 1 and mono:
                body = "*".join(mono)
            elif c == -1 and mono:
                body = "-" + "*".join(mono)
            else:
                if len(c.numerator.terms_q()) > 1 and mono:
                    cs = f"({cs})"
                body = "*".join([cs] + mono)
            parts.append(body)
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self):
        return [{"coeff": c.to_json(), "exp": dict(zip(SYMBOLS, exp)), "i": ip}
                for (exp, ip), c in sorted(self.terms.items())]


I = ParamPoly._raw({(_ZERO_EXP, 1): ONE})
ALPHA = ParamPoly.symbol("alpha")
BETA = ParamPoly.symbol("beta")
GAMMA = ParamPoly.symbol("gamma")
M = ParamPoly.symbol("m")
MC = ParamPoly.symbol("mc")


def conj(x):
    """Complex conjugate of a scalar (Fraction/int/QRational/ParamPoly)."""
    if isinstance(x, (int, Fraction)):
        return x
    return x.conj()


def is_zero(x) -> bool:
    return not x
