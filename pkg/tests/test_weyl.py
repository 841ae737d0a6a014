import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from goldie.weyl import (
    WeylAlgebra,
    WeylError,
    WeylMonomial,
    build_a_alpha,
    commutator,
    format_element,
    parse_element,
    weight_of,
)

A21 = WeylAlgebra(3, 2)


def el(text, A=A21):
    return parse_element(text, A)


def test_defining_relation():
    assert el("d1 x1") == el("x1 d1 + 1")
    assert el("d1 x1^2") == el("x1^2 d1 + 2 x1")
    assert el("d1 x2") == el("x2 d1")


def test_inverted_variable_rule():
    assert el("d3 x3^-1") == el("x3^-1 d3 - x3^-2")
    # two orderings of x3 (d3 x3^-1) x3 must agree
    lhs = el("x3") * (el("d3 x3^-1") * el("x3"))
    rhs = el("x3") * (el("x3^-1 d3 - x3^-2") * el("x3"))
    assert lhs == rhs == el("x3 d3")


def test_negative_exponents_rejected():
    with pytest.raises(WeylError):
        el("x1^-1")
    with pytest.raises(WeylError):
        A21.normalize([("d", 0, -1)])


def test_a_alpha_example():
    m = build_a_alpha((-4, 5, -6), r=2)
    assert m.a == (0, 5, -6) and m.b == (4, 0, 0)
    assert weight_of(m) == (-4, 5, -6)
    assert format_element(A21.monomial(m)) == "x2^5 x3^-6 d1^4"
    assert build_a_alpha((0, 0, 0), 2).a == (0, 0, 0)
    assert build_a_alpha((3,), 1) == WeylMonomial(F(1), (3,), (0,))


def test_weights_read_off():
    assert weight_of(WeylMonomial(F(1), (1, 0, 0), (1, 0, 0))) == (0, 0, 0)
    assert weight_of(WeylMonomial(F(1), (2, 0, 0), (0, 1, 0))) == (2, -1, 0)


def test_commutator_examples():
    p1, p2 = A21.pi(0), A21.pi(1)
    assert commutator(p1, el("d1^2")) == -2 * el("d1^2")
    assert commutator(p1, p2).is_zero()
    a = A21.monomial(build_a_alpha((-4, 5, -6), 2))
    assert commutator(p2, a) == 5 * a


@pytest.mark.parametrize("alpha", list(itertools.product(range(-2, 3), repeat=3)))
def test_torus_action_on_a_alpha(alpha):
    a = A21.monomial(A21.a_alpha(alpha))
    for i in range(3):
        assert commutator(A21.pi(i), a) == alpha[i] * a


def _letter(n, r):
    return st.tuples(st.sampled_from("xd"), st.integers(0, n - 1), st.integers(-2, 3)).filter(
        lambda t: t[2] >= 0 or (t[0] == "x" and t[1] >= r)
    )


words = st.lists(_letter(3, 2), max_size=6)


@settings(max_examples=500)
@given(words)
def test_normalize_idempotent(word):
    e = A21.normalize(word)
    assert e.renormalize() == e


@given(words, words)
def test_product_is_associative_with_words(w1, w2):
    assert A21.normalize(w1) * A21.normalize(w2) == A21.normalize(list(w1) + list(w2))


@given(words, words)
def test_grading(w1, w2):
    e1, e2 = A21.normalize(w1), A21.normalize(w2)
    if e1.is_zero() or e2.is_zero():
        return
    # a word normalizes to a homogeneous element
    (u,) = e1.weights()
    (v,) = e2.weights()
    assert (e1 * e2).weights() <= {tuple(a + b for a, b in zip(u, v))}


@pytest.mark.parametrize("e", [1, 2, 5])
def test_inverse_cancels(e):
    assert el(f"x3^{e} x3^-{e}") == A21.one()
    assert el(f"x3^-{e} x3^{e}") == A21.one()


def test_parse_roundtrip():
    e = el("2 d1 x1^2 - 3 x2 + 1/2 x3^-6")
    assert parse_element(format_element(e), A21) == e
