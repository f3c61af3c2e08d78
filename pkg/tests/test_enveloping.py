from hypothesis import given, settings
from hypothesis import strategies as st

from qhodge import enveloping as env
from qhodge import quantum_group as qg
from qhodge.scalar_field import Q, qpow

from strategies import elements

E, F, K, Kinv = env.E, env.F, env.K, env.Kinv
GENS = [E, F, K, Kinv, env.X_MINUS, env.X_PLUS, env.X_Z]


def test_relations():
    assert K * Kinv == env.UEAElement.scalar(1)
    assert not env.UEA_RELATIONS.check_overlaps()
    assert K * E == (E * K).scale(Q)


def test_star_compatibility():
    assert not env.star_compatibility_defects()


@settings(max_examples=30)
@given(st.sampled_from(GENS), st.sampled_from(GENS), elements())
def test_left_action_is_module(h, k, x):
    assert env.act_left(h * k, x) == env.act_left(h, env.act_left(k, x))


@settings(max_examples=30)
@given(st.sampled_from(GENS), st.sampled_from(GENS), elements())
def test_right_action_is_module(h, k, x):
    assert env.act_right(x, h * k) == env.act_right(env.act_right(x, h), k)


@settings(max_examples=30)
@given(st.sampled_from(GENS), st.sampled_from(GENS), elements())
def test_left_and_right_commute(h, k, x):
    assert env.act_left(h, env.act_right(x, k)) == env.act_right(env.act_left(h, x), k)


@settings(max_examples=20)
@given(st.sampled_from(GENS), st.sampled_from(GENS), elements(max_degree=2, max_terms=2))
def test_pairing_dual_to_coproduct(h, k, x):
    lhs = env.pairing(h * k, x)
    rhs = env.pairing_tensor(env.UEATensor.pure(h, k), qg.coproduct(x))
    assert lhs == rhs


def test_tangent_vectors_on_generators():
    assert env.act_left(env.X_Z, qg.a) == qg.a
    assert env.act_left(env.X_Z, qg.c) == qg.c
    assert env.act_right(qg.c, E) == qg.a
    assert env.act_left(env.X_Z, qg.one) == qg.AlgebraElement()


def test_json_round_trip():
    h = E * F + K.scale(qpow(3))
    assert env.UEAElement.from_json(h.to_json()) == h
