import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girardlab import Poly, PolyParseError, avar, parse_poly, poly_prod, poly_sum, xvar, yvar

X11 = Poly.variable(xvar(1, 1))
X21 = Poly.variable(xvar(2, 1))
Y2 = Poly.variable(yvar(2))
Y3 = Poly.variable(yvar(3))
A11 = Poly.variable(avar(1, 1))


def test_zero_and_one():
    assert Poly.zero().is_zero
    assert (Poly.one() - 1).is_zero
    assert Poly.const(0) == Poly.zero()
    assert str(Poly.zero()) == "0"


def test_addition_merges_and_cancels():
    assert (X11 + Y2) + Y2 == X11 + 2 * Y2
    assert X11 - X11 == Poly.zero()
    assert X11 + Poly.zero() == X11


def test_multiplication():
    assert X11 * Poly.one() == X11
    assert X11 * Poly.zero() == Poly.zero()
    product = (X11 + Y2) * (X21 + Y3)
    assert product.term_count() == 4
    assert product == X11 * X21 + X11 * Y3 + Y2 * X21 + Y2 * Y3


def test_distinct_superscripts_are_distinct_variables():
    assert Poly.variable(xvar(1, 1)) != Poly.variable(xvar(1, 2))
    assert xvar(1, 2) != avar(1, 2)


def test_integer_coercion():
    assert 2 * X11 + 1 == Poly.const(1) + X11 + X11
    assert (3 - Y2) == Poly.const(3) - Y2


def test_pow():
    assert X11**0 == Poly.one()
    assert X11**3 == X11 * X11 * X11
    with pytest.raises(ValueError):
        X11 ** (-1)


def test_evaluate():
    p = 3 * X11 * Y2 - Y3
    value = p.evaluate({xvar(1, 1): 2, yvar(2): 5, yvar(3): 4})
    assert value == 3 * 2 * 5 - 4


def test_evaluate_missing_variable_names_it():
    with pytest.raises(ValueError, match=r"y\[3\]"):
        (X11 + Y3).evaluate({xvar(1, 1): 1})


def test_variable_index_validation():
    with pytest.raises(ValueError):
        xvar(0, 1)
    with pytest.raises(ValueError):
        yvar(0)
    with pytest.raises(ValueError):
        avar(1, 0)


def test_canonical_text_example():
    p = 3 * X11 * Y2 - Y3
    assert str(p) == "3*x[1]^(1)*y[2] - y[3]"
    assert parse_poly("3*x[1]^(1)*y[2] - y[3]") == p


def test_text_covers_all_families_and_powers():
    p = A11 * A11 - 2 * Y2**3 + 5
    text = str(p)
    assert text == "-2*y[2]^3 + a[1]^(1)^2 + 5"
    assert parse_poly(text) == p


def test_leading_negative_term():
    p = -X11 * Y2 + 1
    text = str(p)
    assert text.startswith("-")
    assert parse_poly(text) == p


def test_parse_rejects_garbage():
    for bad in ["", "x[1]", "y[2]^(3)", "x[0]^(1)", "1 +", "x[1]^(1)^0", "q[1]"]:
        with pytest.raises(PolyParseError):
            parse_poly(bad)


def test_parse_zero():
    assert parse_poly("0") == Poly.zero()


def test_term_order_is_degree_then_variable_order():
    p = Y3 + X11 * X21 + X11 + A11
    # degree-2 term first, then degree-1 terms in variable order x < y < a
    assert str(p) == "x[1]^(1)*x[2]^(1) + x[1]^(1) + y[3] + a[1]^(1)"


VAR_POOL = [xvar(1, 1), xvar(2, 1), xvar(1, 2), yvar(2), yvar(5), avar(1, 1), avar(2, 3)]

monomials = st.lists(
    st.tuples(st.sampled_from(VAR_POOL), st.integers(min_value=1, max_value=3)),
    max_size=3,
)
polys = st.lists(
    st.tuples(monomials, st.integers(min_value=-5, max_value=5)), max_size=5
).map(
    lambda terms: poly_sum(
        Poly.const(c) * poly_prod(Poly.variable(v) ** e for v, e in mono)
        for mono, c in terms
    )
)


@settings(max_examples=200)
@given(polys, polys, polys)
def test_ring_axioms(p, q, s):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + s == p + (q + s)
    assert (p * q) * s == p * (q * s)
    assert p * (q + s) == p * q + p * s
    assert p + (-p) == Poly.zero()
    assert p * Poly.one() == p
    assert p * Poly.zero() == Poly.zero()


@settings(max_examples=200)
@given(polys, polys, st.integers(min_value=0, max_value=10**6))
def test_evaluation_is_a_ring_homomorphism(p, q, seed):
    rng = random.Random(seed)
    assignment = {v: rng.randint(-4, 4) for v in VAR_POOL}
    assert (p + q).evaluate(assignment) == p.evaluate(assignment) + q.evaluate(
        assignment
    )
    assert (p * q).evaluate(assignment) == p.evaluate(assignment) * q.evaluate(
        assignment
    )


@settings(max_examples=200)
@given(polys)
def test_text_round_trip_is_bit_exact(p):
    text = str(p)
    again = parse_poly(text)
    assert again == p
    assert str(again) == text
