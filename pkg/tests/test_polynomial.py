import pytest
from hypothesis import given
from hypothesis import strategies as st

from boolean_schubert.polynomial import Polynomial, RootPolynomial, WeightPolynomial

NV = 3

terms = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * NV), st.integers(-5, 5), max_size=5
)
polys = terms.map(lambda d: Polynomial(NV, d))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero(NV)


@given(polys)
def test_json_round_trip(p):
    assert Polynomial.from_json(NV, p.to_json()) == p


@given(polys, st.integers(0, NV - 1))
def test_divide_by_variable_inverts_multiplication(p, i):
    x = Polynomial.variable(NV, i + 1)
    assert (p * x).divide_by_variable(i + 1) == p


def test_divide_by_variable_rejects_remainder():
    with pytest.raises(ArithmeticError):
        (Polynomial.one(2) + Polynomial.variable(2, 1)).divide_by_variable(1)


def test_zero_terms_dropped_and_hash():
    p = Polynomial(2, {(1, 0): 2, (0, 1): 0})
    assert len(p) == 1
    assert hash(p) == hash(Polynomial.variable(2, 1, 2))
    assert not Polynomial.zero(2)


def test_constants_and_degree():
    p = Polynomial.linear([1, 2]) ** 2
    assert p.degree() == 2 and p.is_homogeneous(2)
    assert p.constant_term() == 0
    assert (p + 3).constant_term() == 3
    assert not (p + 3).is_homogeneous()
    assert Polynomial.constant(2, 0).to_json() == []


def test_substitute():
    # x1 -> x1 + x2, x2 -> -x2
    p = Polynomial.variable(2, 1) * Polynomial.variable(2, 2)
    images = [Polynomial.linear([1, 1]), Polynomial.linear([0, -1])]
    assert p.substitute(images) == -(Polynomial.variable(2, 1) * Polynomial.variable(2, 2)) - Polynomial.variable(2, 2) ** 2


def test_string_form():
    w = WeightPolynomial(4, {(0, 1, 0, 0): 2, (0, 0, 1, 0): 2, (0, 0, 0, 1): 1})
    assert str(w) == "2*t2 + 2*t3 + t4"
    assert str(WeightPolynomial.zero(2)) == "0"


def test_weight_and_root_are_distinct_rings():
    w = WeightPolynomial.variable(2, 1)
    r = RootPolynomial.variable(2, 1)
    assert w != r
    assert w.to_root() == r and r.to_weight() == w


def test_json_is_sorted_and_explicit():
    p = Polynomial(2, {(0, 1): 1, (1, 0): 3})
    assert p.to_json() == [
        {"exponents": [0, 1], "coeff": 1},
        {"exponents": [1, 0], "coeff": 3},
    ]
