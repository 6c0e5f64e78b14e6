import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clusterchar import laurent
from clusterchar.errors import DimensionError, InputError, LaurentDivisionError
from clusterchar.laurent import (
    from_dict,
    laurent_add,
    laurent_divexact,
    laurent_mul,
    laurent_parse,
    laurent_render,
    monomial,
    one,
    variable,
    zero,
)


def x(i, n=2):
    return variable(n, i)


def test_add_cancellation():
    p = x(0)
    assert laurent_add(p, -p) == zero(2)
    assert laurent_add(p, -p).terms == ()


def test_add_merges_distinct_variables():
    p = laurent_add(x(0), one(2))
    q = x(1)
    assert laurent_add(p, q) == from_dict(2, {(1, 0): 1, (0, 1): 1, (0, 0): 1})


def test_add_negative_exponents():
    p = monomial(1, (-1,), 2)
    q = monomial(1, (-1,), 3)
    assert laurent_add(p, q) == monomial(1, (-1,), 5)


def test_mul_inverse_monomials():
    assert laurent_mul(monomial(1, (-1,)), monomial(1, (1,))) == one(1)


def test_mul_difference_of_squares():
    p = laurent_add(x(0), x(1))
    q = laurent_add(x(0), -x(1))
    assert laurent_mul(p, q) == from_dict(2, {(2, 0): 1, (0, 2): -1})


def test_mul_adds_exponents():
    m = monomial(2, (-1, 1))
    assert laurent_mul(m, m) == monomial(2, (-2, 2))


def test_var_count_mismatch():
    with pytest.raises(DimensionError):
        laurent_add(one(2), one(3))
    with pytest.raises(DimensionError):
        laurent_mul(one(2), one(3))


def test_render_zero():
    assert laurent_render(zero(3)) == "0"


def test_render_term_order():
    # x4*x2 + x4 + x3*x1 in four variables, descending-lex exponent order
    p = from_dict(4, {(0, 1, 0, 1): 1, (0, 0, 0, 1): 1, (1, 0, 1, 0): 1})
    assert laurent_render(p) == "x1*x3 + x2*x4 + x4"


def test_render_negative_exponent():
    assert laurent_render(monomial(1, (-1,))) == "x1^-1"


def test_render_coefficients():
    p = from_dict(2, {(1, 0): -1, (0, 0): 7, (0, 1): 3})
    assert laurent_render(p) == "-x1 + 3*x2 + 7"


def test_render_custom_names():
    p = from_dict(2, {(1, 1): 1})
    assert laurent_render(p, names=("x0", "x3")) == "x0*x3"


def test_parse_accepts_spaces_signs_parens():
    assert laurent_parse("- x1 + (3)*x2^2", 2) == from_dict(2, {(1, 0): -1, (0, 2): 3})
    assert laurent_parse("(-3)*x1*x2 + 1", 2) == from_dict(2, {(1, 1): -3, (0, 0): 1})
    assert laurent_parse("x1^-1", 1) == monomial(1, (-1,))
    assert laurent_parse("0", 4) == zero(4)


def test_parse_rejects_junk():
    with pytest.raises(InputError):
        laurent_parse("x9", 2)
    with pytest.raises(InputError):
        laurent_parse("x1 + + x2", 2)
    with pytest.raises(InputError):
        laurent_parse("", 2)


def test_divexact_recovers_factor():
    p = laurent_add(one(2), x(1))  # 1 + x2
    q = monomial(2, (-1, 0))  # x1^-1
    prod = laurent_mul(p, q)
    assert laurent_divexact(prod, q) == p
    assert laurent_divexact(prod, p) == q


def test_divexact_rejects_inexact():
    p = laurent_add(one(2), x(0))
    with pytest.raises(LaurentDivisionError):
        laurent_divexact(p, laurent_add(one(2), x(1)))
    with pytest.raises(LaurentDivisionError):
        laurent_divexact(one(1), monomial(1, (0,), 2))
    with pytest.raises(LaurentDivisionError):
        laurent_divexact(one(1), zero(1))


def test_fraction_parts():
    p = from_dict(2, {(-1, 0): 1, (0, 1): 1})
    num, den = laurent.fraction_parts(p)
    assert den == (1, 0)
    assert num == from_dict(2, {(0, 0): 1, (1, 1): 1})
    assert laurent.render_fraction(p) == "(x1*x2 + 1) / (x1)"
    assert laurent.render_fraction(one(2)) == "1"


@st.composite
def poly_triples(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    exps = st.tuples(*[st.integers(-3, 3)] * n)
    polys = st.dictionaries(exps, st.integers(-6, 6), max_size=4).map(
        lambda d: from_dict(n, d)
    )
    return draw(polys), draw(polys), draw(polys)


@given(poly_triples())
@settings(max_examples=150, deadline=None)
def test_ring_axioms(triple):
    p, q, r = triple
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@st.composite
def poly_and_monomial(draw):
    n = draw(st.integers(min_value=1, max_value=3))
    exps = st.tuples(*[st.integers(-3, 3)] * n)
    p = draw(
        st.dictionaries(exps, st.integers(-6, 6), max_size=4).map(
            lambda d: from_dict(n, d)
        )
    )
    e = draw(exps)
    return p, monomial(n, e)


@given(poly_and_monomial())
@settings(max_examples=100, deadline=None)
def test_monomial_multiplication_invertible(pm):
    p, m = pm
    inv = m ** (-1)
    assert (p * m) * inv == p


@given(poly_triples())
@settings(max_examples=150, deadline=None)
def test_render_parse_round_trip(triple):
    p, _, _ = triple
    assert laurent_parse(laurent_render(p), p.var_count) == p


@given(poly_triples())
@settings(max_examples=50, deadline=None)
def test_divexact_of_product(triple):
    p, q, _ = triple
    if q.is_zero():
        return
    assert laurent_divexact(p * q, q) == p
