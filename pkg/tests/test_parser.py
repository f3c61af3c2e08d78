import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhodge import calculus as cal
from qhodge import quantum_group as qg
from qhodge.parser import ExprTypeError, ParseError, evaluate_text, parse, to_text, tokenize
from qhodge.scalar_field import ONE, Q, QRational, qpow

atoms = st.sampled_from(["a", "as", "c", "cs", "q", "q^-2", "q^(1/2)", "2", "1/3", "wm", "wz"])


def _expr(children):
    binop = st.tuples(children, st.sampled_from([" + ", " - ", " * "]), children).map(lambda t: f"({t[0]}{t[1]}{t[2]})")
    return st.one_of(binop, children.map(lambda s: f"(-{s})"), children.map(lambda s: f"({s})†"))


exprs = st.recursive(atoms, _expr, max_leaves=6)


def _safe(text):
    try:
        return evaluate_text(text)
    except ExprTypeError:
        return None


@settings(max_examples=80, deadline=None)
@given(exprs)
def test_print_parse_round_trip(text):
    ast = parse(text)
    printed = to_text(ast)
    assert parse(printed) == ast
    assert to_text(parse(printed)) == printed
    assert _safe(printed) == _safe(text)


def test_examples():
    assert evaluate_text("as*a + cs*c") == ONE
    assert evaluate_text("c*a") == qg.a * qg.c * qpow(-1)
    assert not evaluate_text("wm ∧ wm")
    assert evaluate_text("wp ^ wm") == cal.wedge(cal.omega("wm"), cal.omega("wp")).left_mul(-Q * Q)
    assert evaluate_text("wm wedge wp") == evaluate_text("wm ^ wp")
    assert evaluate_text("c^2") == qg.c * qg.c
    assert evaluate_text("q^(1/2)") ** 2 == Q
    assert evaluate_text("a†") == qg.astar
    assert evaluate_text("1/2 + 1/2") == ONE
    assert evaluate_text("(1 + q)/(1 - q^2)") == ONE / (ONE - Q)


def test_tensors():
    t = evaluate_text("a (x) c")
    assert t == evaluate_text("a ⊗ c") == evaluate_text("a tensor c")
    assert t == qg.TensorElement.pure(qg.a, qg.c)


@pytest.mark.parametrize("text", ["wm * a", "wm ^ E", "E * a", "Xm * wz"])
def test_type_errors(text):
    with pytest.raises(ExprTypeError):
        evaluate_text(text)


@pytest.mark.parametrize("text", ["a +", "(a", "a $ c", "0.5", "foo", "q^", ""])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        evaluate_text(text)


def test_tokenize_positions():
    toks = tokenize("a * cs")
    assert [t.text for t in toks][:3] == ["a", "*", "cs"]
