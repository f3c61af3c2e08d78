"""
Expression language for the CLI.

    expr   := term (('+' | '-') term)*
    term   := '-' term | factor (op factor)*        op: * / ^ ∧ wedge ⊗ tensor (x)
    factor := atom ('^' INT)? '†'*
    atom   := NUMBER ('/' NUMBER)? | 'q' ('^' INT | '^(' INT '/' INT ')')? | SYMBOL | '(' expr ')'

'^' after a factor is a power when an integer follows and a wedge otherwise.
Symbols: a as c cs (coordinate algebra), E F K Kinv Xm Xp Xz (enveloping
algebra), wm wp wz theta (invariant forms).  '†' is the star.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .calculus import KForm, star as form_star, wedge as form_wedge
from .enveloping import (E, F, K, Kinv, UEAElement, UEATensor, X_MINUS, X_PLUS, X_Z,
                         uea_star)
from .quantum_group import AlgebraElement, TensorElement, gen, star as algebra_star
from .scalar_field import QRational, qpow

ALGEBRA_SYMBOLS = ("a", "as", "c", "cs")
UEA_SYMBOLS = {"E": E, "F": F, "K": K, "Kinv": Kinv, "Xm": X_MINUS, "Xp": X_PLUS, "Xz": X_Z}
FORM_SYMBOLS = ("wm", "wp", "wz", "theta")
SYMBOLS = ALGEBRA_SYMBOLS + tuple(UEA_SYMBOLS) + FORM_SYMBOLS


class ParseError(ValueError):
    def __init__(self, msg, pos=None, expected=None):
        self.pos = pos
        self.expected = expected
        where = f" at position {pos}" if pos is not None else ""
        exp = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"{msg}{where}{exp}")


class ExprTypeError(TypeError):
    pass


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<tensor>\(x\)|⊗|\btensor\b)
  | (?P<wedge>∧|\bwedge\b)
  | (?P<num>\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()†])
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    pos: int


def tokenize(text: str):
    out = []
    pos = 0
    while pos < len(text):
        mo = _TOKEN.match(text, pos)
        if not mo:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mo.lastgroup
        if kind != "ws":
            out.append(Token(kind, mo.group(), pos))
        pos = mo.end()
    out.append(Token("end", "", pos))
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k=1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def eat(self, text=None, kind=None):
        t = self.tok
        if (text is not None and t.text != text) or (kind is not None and t.kind != kind):
            raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos,
                             [text or kind])
        self.i += 1
        return t

    def parse(self):
        node = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.pos, ["operator", "end of input"])
        return node

    def expr(self):
        node = self.term()
        while self.tok.text in ("+", "-"):
            op = self.eat().text
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        if self.tok.text == "-":
            self.eat()
            return ("neg", self.term())
        node = self.factor()
        while True:
            t = self.tok
            if t.text == "*":
                self.eat()
                node = ("mul", node, self.factor())
            elif t.text == "/":
                self.eat()
                node = ("div", node, self.factor())
            elif t.text == "^" or t.kind == "wedge":
                self.eat()
                node = ("wedge", node, self.factor())
            elif t.kind == "tensor":
                self.eat()
                node = ("tensor", node, self.factor())
            else:
                return node

    def _int_follows(self):
        t, t2 = self.peek(1), self.peek(2)
        return t.kind == "num" or (t.text == "-" and t2.kind == "num")

    def _read_int(self):
        sign = 1
        if self.tok.text == "-":
            self.eat()
            sign = -1
        return sign * int(self.eat(kind="num").text)

    def factor(self):
        node = self.atom()
        if self.tok.text == "^" and self._int_follows() and node[0] != "q":
            self.eat()
            n = self._read_int()
            if n < 0:
                raise ParseError("negative powers are only allowed on q", self.tok.pos)
            node = ("pow", node, n)
        while self.tok.text == "†":
            self.eat()
            node = ("star", node)
        return node

    def atom(self):
        t = self.tok
        if t.kind == "num":
            self.eat()
            value = Fraction(int(t.text))
            after_div = self.i >= 2 and self.toks[self.i - 2].text == "/"
            if self.tok.text == "/" and self.peek().kind == "num" and not after_div:
                self.eat()
                value = value / int(self.eat(kind="num").text)
            return ("num", value)
        if t.kind == "name":
            self.eat()
            if t.text == "q":
                if self.tok.text == "^":
                    if self._int_follows():
                        self.eat()
                        return ("q", Fraction(self._read_int()))
                    if self.peek().text == "(" and (self.peek(2).kind == "num" or self.peek(2).text == "-"):
                        self.eat()
                        self.eat("(")
                        n = self._read_int()
                        self.eat("/")
                        d = int(self.eat(kind="num").text)
                        self.eat(")")
                        return ("q", Fraction(n, d))
                return ("q", Fraction(1))
            if t.text not in SYMBOLS:
                raise ParseError(f"unknown symbol {t.text!r}", t.pos, ["a", "as", "c", "cs", "E", "F", "K",
                                                                       "Kinv", "wm", "wp", "wz"])
            return ("sym", t.text)
        if t.text == "(":
            self.eat()
            node = self.expr()
            self.eat(")")
            return node
        raise ParseError(f"unexpected {t.text or 'end of input'!r}", t.pos,
                         ["number", "q", "symbol", "("])


def parse(text: str):
    """Text -> AST (nested tuples)."""
    return _Parser(text).parse()


# ---------------------------------------------------------------------------
# canonical printer

_PREC = {"add": 1, "sub": 1, "neg": 1, "mul": 2, "div": 2, "wedge": 2, "tensor": 2,
         "pow": 3, "star": 3, "num": 4, "q": 4, "sym": 4}


def _fmt_num(v: Fraction) -> str:
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def to_text(node, min_prec: int = 0) -> str:
    kind = node[0]
    if kind == "num":
        s = _fmt_num(node[1])
        # a fraction literal is one token pair; keep it atomic where it matters
        return s if node[1].denominator == 1 or min_prec <= 2 else f"({s})"
    elif kind == "q":
        p = node[1]
        s = "q" if p == 1 else (f"q^{p.numerator}" if p.denominator == 1 else f"q^({p.numerator}/{p.denominator})")
    elif kind == "sym":
        s = node[1]
    elif kind in ("add", "sub"):
        op = " + " if kind == "add" else " - "
        s = to_text(node[1], 1) + op + to_text(node[2], 2)
    elif kind == "neg":
        s = "-" + to_text(node[1], 2)
    elif kind in ("mul", "div", "wedge", "tensor"):
        right = node[2]
        if kind == "wedge":
            op = " wedge " if right[0] == "num" else " ^ "
        else:
            op = {"mul": " * ", "div": " / ", "tensor": " (x) "}[kind]
        s = to_text(node[1], 2) + op + to_text(right, 3)
    elif kind == "pow":
        s = to_text(node[1], 4) + f"^{node[2]}"
    elif kind == "star":
        s = to_text(node[1], 3) + "†"
    else:
        raise ValueError(kind)
    return f"({s})" if _PREC[kind] < min_prec else s


# ---------------------------------------------------------------------------
# evaluation

def _kind(v) -> str:
    if isinstance(v, QRational):
        return "scalar"
    if isinstance(v, AlgebraElement):
        return "algebra"
    if isinstance(v, UEAElement):
        return "uea"
    if isinstance(v, KForm):
        return "form"
    if isinstance(v, (TensorElement, UEATensor)):
        return "tensor"
    raise ExprTypeError(type(v).__name__)


def _promote(v, target: str):
    k = _kind(v)
    if k == target:
        return v
    if k == "scalar":
        if target == "algebra":
            return AlgebraElement.scalar(v)
        if target == "uea":
            return UEAElement.scalar(v)
        if target == "form":
            return KForm.function(AlgebraElement.scalar(v))
    if k == "algebra" and target == "form":
        return KForm.function(v)
    raise ExprTypeError(f"cannot combine {k} with {target}")


def _add(x, y, sign=1):
    kx, ky = _kind(x), _kind(y)
    order = ["scalar", "algebra", "uea", "form", "tensor"]
    if {kx, ky} == {"algebra", "uea"}:
        raise ExprTypeError("cannot add coordinate and enveloping algebra elements")
    target = kx if order.index(kx) >= order.index(ky) else ky
    if target == "form":
        x, y = _as_form(x), _as_form(y)
        if x.degree != y.degree and x and y:
            raise ExprTypeError(f"cannot add forms of degree {x.degree} and {y.degree}")
        return x + y if sign > 0 else x - y
    x, y = _promote(x, target), _promote(y, target)
    return x + y if sign > 0 else x - y


def _as_form(v) -> KForm:
    return v if isinstance(v, KForm) else _promote(v, "form")


def _mul(x, y):
    kx, ky = _kind(x), _kind(y)
    if kx == "scalar" and ky == "scalar":
        return x * y
    if kx == "scalar":
        return y.left_mul(x) if ky == "form" else y.scale(x)
    if ky == "scalar":
        return x.left_mul(y) if kx == "form" else x.scale(y)
    if kx == ky == "algebra":
        return x * y
    if kx == ky == "uea":
        return x * y
    if kx == "algebra" and ky == "form":
        return y.left_mul(x)
    if kx == ky == "tensor" and type(x) is type(y):
        return x * y
    raise ExprTypeError(f"product of {kx} and {ky} is not defined (coefficients go on the left; "
                        "use ^ for wedge)")


def _wedge(x, y):
    kx, ky = _kind(x), _kind(y)
    if "uea" in (kx, ky) or "tensor" in (kx, ky):
        raise ExprTypeError(f"wedge of {kx} and {ky} is not defined")
    if kx != "form" and ky != "form":
        return _mul(x, y)
    if kx != "form":
        return _mul(x, y)
    return form_wedge(x, _as_form(y))


def _tensor(x, y):
    kx, ky = _kind(x), _kind(y)
    if kx in ("algebra", "scalar") and ky in ("algebra", "scalar") and "algebra" in (kx, ky):
        return TensorElement.pure(_promote(x, "algebra"), _promote(y, "algebra"))
    if kx in ("uea", "scalar") and ky in ("uea", "scalar") and "uea" in (kx, ky):
        return UEATensor.pure(_promote(x, "uea"), _promote(y, "uea"))
    raise ExprTypeError(f"tensor of {kx} and {ky} is not defined")


def _star(x):
    k = _kind(x)
    if k == "scalar":
        return x.conj()
    if k == "algebra":
        return algebra_star(x)
    if k == "uea":
        return uea_star(x)
    if k == "form":
        return form_star(x)
    raise ExprTypeError("star of a tensor is not supported")


def evaluate(node):
    kind = node[0]
    if kind == "num":
        return QRational(node[1])
    if kind == "q":
        return qpow(node[1])
    if kind == "sym":
        name = node[1]
        if name in ALGEBRA_SYMBOLS:
            return gen(name)
        if name in UEA_SYMBOLS:
            return UEA_SYMBOLS[name]
        if name == "theta":
            return KForm.basis(3, 0)
        return KForm.basis(1, name)
    if kind == "add":
        return _add(evaluate(node[1]), evaluate(node[2]))
    if kind == "sub":
        return _add(evaluate(node[1]), evaluate(node[2]), -1)
    if kind == "neg":
        v = evaluate(node[1])
        return -v
    if kind == "mul":
        return _mul(evaluate(node[1]), evaluate(node[2]))
    if kind == "div":
        den = evaluate(node[2])
        if _kind(den) != "scalar":
            raise ExprTypeError("only division by scalars is supported")
        return _mul(evaluate(node[1]), den.inverse())
    if kind == "wedge":
        return _wedge(evaluate(node[1]), evaluate(node[2]))
    if kind == "tensor":
        return _tensor(evaluate(node[1]), evaluate(node[2]))
    if kind == "pow":
        base = evaluate(node[1])
        if _kind(base) == "form":
            raise ExprTypeError("powers of forms are not defined; use ^ between forms for wedge")
        if _kind(base) == "tensor":
            raise ExprTypeError("powers of tensors are not supported")
        return base ** node[2]
    if kind == "star":
        return _star(evaluate(node[1]))
    raise ValueError(kind)


def evaluate_text(text: str):
    return evaluate(parse(text))


def format_value(v) -> str:
    return str(v)


def value_to_json(v):
    k = _kind(v)
    if k == "scalar":
        return {"type": "scalar", "value": v.to_json()}
    if k == "tensor":
        return {"type": "tensor", "value": str(v)}
    return {"type": k, "value": v.to_json()}
