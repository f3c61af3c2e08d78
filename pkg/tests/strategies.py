from fractions import Fraction

from hypothesis import strategies as st

from qhodge import quantum_group as qg
from qhodge.scalar_field import ONE, QRational, qpow

small = st.integers(-4, 4)


@st.composite
def laurent(draw, max_terms=3, half=False):
    out = QRational(0)
    for _ in range(draw(st.integers(0, max_terms))):
        p = Fraction(draw(st.integers(-8, 8)), 2 if half else 1)
        out = out + QRational.monomial(draw(small), p)
    return out


@st.composite
def qrationals(draw, half=False):
    num = draw(laurent(half=half))
    den = draw(laurent(half=half))
    if not den:
        den = ONE
    return num / den


nonzero_qrationals = qrationals().filter(bool)


@st.composite
def monomials(draw, max_degree=3):
    astar = draw(st.booleans())
    k = draw(st.integers(1 if astar else 0, max_degree))
    l = draw(st.integers(0, max_degree - k if max_degree >= k else 0))
    m = draw(st.integers(0, max(0, max_degree - k - l)))
    return qg.Monomial(astar, k, l, m)


@st.composite
def elements(draw, max_degree=2, max_terms=3):
    x = qg.AlgebraElement()
    for _ in range(draw(st.integers(1, max_terms))):
        c = qpow(draw(st.integers(-2, 2))) * draw(st.integers(-3, 3))
        x = x + qg.AlgebraElement.monomial(draw(monomials(max_degree))).scale(c)
    return x
