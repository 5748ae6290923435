import sympy
from hypothesis import given, strategies as st

from hgg.polynomial import IntPolynomial, poly_gcd

x = sympy.Symbol("x")
coeff_lists = st.lists(st.integers(-20, 20), min_size=0, max_size=8)


def to_sympy(p: IntPolynomial):
    return sympy.Poly(list(reversed(p.coeffs)) or [0], x)


def test_trailing_zeros_stripped():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.coeffs == (1, 2)
    assert p.degree == 1
    assert IntPolynomial([]).degree == -1


def test_str():
    assert str(IntPolynomial([1, -2, -1, 4, -1, -2, 1])) == \
        "x^6 - 2*x^5 - x^4 + 4*x^3 - x^2 - 2*x + 1"


@given(coeff_lists, coeff_lists)
def test_ring_ops_match_sympy(a, b):
    p, q = IntPolynomial(a), IntPolynomial(b)
    assert to_sympy(p * q) == to_sympy(p) * to_sympy(q)
    assert to_sympy(p + q) == to_sympy(p) + to_sympy(q)
    assert to_sympy(p - q) == to_sympy(p) - to_sympy(q)


@given(coeff_lists, st.lists(st.integers(-5, 5), min_size=1, max_size=4))
def test_divmod_monic(a, b):
    divisor = IntPolynomial(b + [1])
    p = IntPolynomial(a)
    quo, rem = p.divmod_monic(divisor)
    assert quo * divisor + rem == p
    assert rem.degree < divisor.degree


@given(coeff_lists, st.integers(-6, 6))
def test_evaluation(a, t):
    p = IntPolynomial(a)
    assert p(t) == to_sympy(p).eval(t)


def test_reciprocal_and_gcd():
    f = IntPolynomial([1, 1, 2, 1, 2, 1, 1])
    assert f.reciprocal() == f
    g = IntPolynomial([-1, 0, 1])  # (x - 1)(x + 1)
    h = IntPolynomial([1, 2, 1])   # (x + 1)^2
    assert poly_gcd(g, h) == [1, 1]


def test_coeff_list_round_trip():
    p = IntPolynomial([1, -3, 3, -2, 3, -3, 1])
    assert IntPolynomial.parse_coeff_list(p.coeff_list()) == p
