from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from focalis.algebra import (
    I,
    ONE,
    ZERO,
    GaussianRational,
    Polynomial,
    RationalFunction,
    divides,
    exquo,
    gcd,
    parse_expression,
    parse_tuple,
    poly_sqrt,
    resultant,
    squarefree_factors,
    squarefree_part,
)
from focalis.algebra.gaussian import sqrt
from focalis.algebra.linalg import det, nullspace, rank, rref, solve
from focalis.errors import NotDivisibleError, ParseError

from conftest import poly, to_sympy

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gaussians = st.builds(GaussianRational, fractions, fractions)


@st.composite
def polys(draw, variables=("x", "y"), max_terms=4, max_deg=3):
    n = draw(st.integers(1, max_terms))
    terms = {}
    for _ in range(n):
        exps = tuple(draw(st.integers(0, max_deg)) for _ in variables)
        terms[exps] = draw(gaussians)
    return Polynomial(variables, terms)


# --- Q(i) -----------------------------------------------------------------


def test_i_squared():
    assert I * I == -1
    assert str(I) == "i"


def test_gaussian_division():
    z = GaussianRational(3, 4)
    assert z * z.inverse() == ONE
    assert (1 / z) == GaussianRational(Fraction(3, 25), Fraction(-4, 25))


def test_gaussian_equality_with_builtin_numbers():
    assert GaussianRational(2) == 2
    assert GaussianRational(Fraction(1, 2)) == Fraction(1, 2)
    assert hash(GaussianRational(5)) == hash(5)


def test_gaussian_is_immutable():
    z = GaussianRational(1)
    with pytest.raises(AttributeError):
        z.re = 2


def test_gaussian_parse():
    assert GaussianRational.parse("1 + 2*i") == GaussianRational(1, 2)
    assert GaussianRational.parse("-1/2") == Fraction(-1, 2)


def test_sqrt_exact_and_missing():
    assert sqrt(-4) == 2 * I
    assert sqrt(GaussianRational(3, 4)) ** 2 == GaussianRational(3, 4)
    assert sqrt(2) is None


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_conjugate_norm(a):
    assert a * a.conjugate() == a.norm()


# --- polynomials -------------------------------------------------------------


def test_canonical_string_is_graded_lex():
    p = poly("x + y^2 + 3")
    assert str(p) == "3 + x + y^2"


def test_parse_round_trip_examples():
    for text in ["-3*t*(2*l + 2*i*t + 3*t^3)", "(1 - t^2)/(1 + t^2)", "1/3*i*t^3 - i*t"]:
        p = parse_expression(text)
        assert parse_expression(str(p)) == p


def test_parse_tuple():
    c = parse_tuple("(t, i*t + t^3)", ("t",))
    assert len(c) == 2
    assert str(c[1]) == "i*t + t^3"


def test_parse_errors_carry_column():
    with pytest.raises(ParseError) as e:
        parse_expression("x + $")
    assert e.value.column == 5
    with pytest.raises(ParseError):
        parse_expression("x^y")


def test_uppercase_names_are_rejected():
    with pytest.raises(ParseError):
        parse_expression("R + x")


@given(polys(), polys())
def test_matches_sympy_product(p, q_):
    assert sp.expand(to_sympy(p * q_) - to_sympy(p) * to_sympy(q_)) == 0


@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert (a * b) * c == a * (b * c)
    assert a - a == a.zero()


@given(polys())
def test_derivative_matches_sympy(p):
    x = sp.Symbol("x")
    assert sp.expand(to_sympy(p.diff("x")) - sp.diff(to_sympy(p), x)) == 0


def test_subs_and_evaluate():
    p = poly("x^2 + i*y")
    assert p.evaluate({"x": 2, "y": 1}) == GaussianRational(4, 1)
    assert str(p.subs({"y": poly("x")})) == "i*x + x^2"


def test_exquo_and_divides():
    p = poly("(x - y)*(x + 2*y)")
    assert exquo(p, poly("x - y")) == poly("x + 2*y")
    assert divides(poly("x - y"), p)
    with pytest.raises(NotDivisibleError):
        exquo(p, poly("x + y"))


def test_poly_sqrt():
    assert poly_sqrt(poly("x^2 + 2*i*x - 1")) in (poly("x + i"), poly("-x - i"))
    assert poly_sqrt(poly("x^2 + 1")) is None


# --- gcd, squarefree, resultant (sympy oracle) ------------------------------------


@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2))
def test_gcd_contains_common_factor(a, b, c):
    if not a or not b or not c:
        return
    g = gcd(a * c, b * c)
    assert divides(c, g)
    assert divides(g, a * c) and divides(g, b * c)


@given(polys(max_terms=3, max_deg=2), polys(max_terms=3, max_deg=2), polys(max_terms=2, max_deg=2))
def test_gcd_agrees_with_sympy(a, b, c):
    if not a or not b or not c:
        return
    x, y = sp.symbols("x y")
    g = gcd(a * c, b * c)
    expected = sp.gcd(to_sympy(a * c), to_sympy(b * c), x, y, extension=sp.I)
    assert sp.simplify(to_sympy(g) / expected).is_number


def test_gcd_with_univariate_operand():
    p = poly("(s^2 + 1)*(s*w + w^2 + 3)")
    assert gcd(p, poly("(s^2 + 1)*(s - 2)")) == poly("s^2 + 1")
    assert gcd(p, poly("s - 2")) == poly("1")


def test_gcd_matches_sympy():
    a = poly("(x^2 + y^2 - 1)*(x - i*y)^2")
    b = poly("(x - i*y)*(x + 3)")
    g = gcd(a, b)
    x, y = sp.symbols("x y")
    expected = sp.gcd(to_sympy(a), to_sympy(b), x, y, extension=sp.I)
    assert sp.simplify(to_sympy(g) / expected).is_number


def test_squarefree_part_and_factors():
    p = poly("(x - 1)^3*(x + 2)^2*(x^2 + 1)")
    assert squarefree_part(p) == poly("(x - 1)*(x + 2)*(x^2 + 1)").to_integer_primitive()[1]
    mults = sorted(k for _, k in squarefree_factors(p))
    assert mults == [1, 2, 3]


def test_resultant_matches_sylvester_oracle():
    p = poly("x^2 + y^2 - 1")
    q_ = poly("x - y*t")
    R = resultant(p, q_, "x")
    x = sp.Symbol("x")
    expected = sp.resultant(to_sympy(p), to_sympy(q_), x)
    assert sp.expand(to_sympy(R) - expected) == 0


def test_resultant_multiplicativity():
    p, r, q_ = poly("x^2 + y"), poly("x - 3"), poly("x^3 - y*x + 1")
    assert resultant(p * r, q_, "x") == resultant(p, q_, "x") * resultant(r, q_, "x")


# --- rational functions ------------------------------------------------------------


def test_rational_function_reduces():
    f = RationalFunction(poly("x^2 - 1"), poly("x - 1"))
    assert f.is_polynomial()
    assert f.as_polynomial() == poly("x + 1")


def test_rational_derivative_matches_sympy():
    f = parse_expression("2*t/(1 + t^2)")
    t = sp.Symbol("t")
    assert sp.simplify(to_sympy(f.diff("t")) - sp.diff(2 * t / (1 + t**2), t)) == 0


# --- linear algebra -----------------------------------------------------------------


def test_rref_and_nullspace():
    m = [[1, 2, 3], [2, 4, 6], [0, 1, I]]
    assert rank(m) == 2
    for v in nullspace(m):
        for row in m:
            assert sum((GaussianRational(a) * b for a, b in zip(row, v)), ZERO) == 0


def test_solve_inconsistent_and_consistent():
    x, kernel = solve([[1, 1], [1, 1]], [1, 2])
    assert x is None
    x, kernel = solve([[1, 1], [1, -1]], [2, 0])
    assert x == [1, 1] and kernel == []


def test_det_polynomial_matches_sympy():
    m = [[poly("x"), poly("1")], [poly("y"), poly("x + y")]]
    assert det(m) == poly("x^2 + x*y - y")


def test_rref_pivots():
    rows, pivots = rref([[0, 1], [1, 0]])
    assert pivots == [0, 1]
