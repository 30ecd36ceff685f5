"""Small helpers shared by the geometric modules."""

from .algebra.gaussian import coerce, sqrt as qi_sqrt
from .algebra.poly import Polynomial
from .algebra.rational import RationalFunction, as_rational


def rat(x):
    r = as_rational(x)
    if r is NotImplemented:
        raise TypeError(f"not an expression: {x!r}")
    return r


def simp(x):
    """Rational functions with constant denominator become polynomials; constants become scalars."""
    if isinstance(x, RationalFunction):
        x = x.simplify()
    if isinstance(x, Polynomial) and x.is_constant():
        return x.constant_value()
    return x


def is_const(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.is_constant()
    return True


def const(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.constant_value()
    return coerce(x)


def subs_any(x, mapping):
    """Substitute only the names ``x`` actually has; constants collapse to scalars."""
    if not isinstance(x, (Polynomial, RationalFunction)):
        return coerce(x)
    mapping = {k: v for k, v in mapping.items() if k in x.variables}
    if mapping:
        x = x.subs(mapping)
    return simp(x) if isinstance(x, (Polynomial, RationalFunction)) else coerce(x)


def normalized(p):
    """Integer-primitive representative with positive grlex lead."""
    if isinstance(p, RationalFunction):
        p = p.numerator
    if not isinstance(p, Polynomial):
        p = Polynomial.constant(coerce(p))
    if not p:
        return p
    return p.to_integer_primitive()[1]


def poly_in(x, ring):
    """Polynomial view of ``x`` whose variables start with ``ring``."""
    if isinstance(x, RationalFunction):
        x = x.as_polynomial()
    if isinstance(x, Polynomial):
        return x.with_variables(tuple(ring) + tuple(v for v in x.variables if v not in ring))
    return Polynomial.constant(coerce(x), tuple(ring))


def solve_univariate_low(p, var):
    """Roots in Q(i) of a polynomial of degree 1 or 2 in ``var`` with scalar coefficients."""
    cs = [const(c) for c in p.coeff_list(var)]
    if len(cs) == 2:
        return [-cs[0] / cs[1]]
    if len(cs) == 3:
        c, b, a = cs
        root = qi_sqrt(b * b - a * c * 4)
        if root is None:
            return []
        return [(-b + root) / (a * 2), (-b - root) / (a * 2)]
    return []


SAMPLE_GRID = [0, 1, -1, 2, -2, 3, -3, "1/2", "-1/2", 4, -4, "3/5", "4/5", 5, -5, "1/3", "5/3", "-3/5",
               6, -6, "5/4", "12/13", 7, -7, "3/4", "-4/5", "13/5", 8, "2/3", -8]


def sample_values():
    from fractions import Fraction

    return [Fraction(v) for v in SAMPLE_GRID]


def points_on_hypersurface(F, coords, count):
    """Exact points of ``F = 0``: all but one coordinate on a grid, the last solved (degree <= 2)."""
    from itertools import product

    coords = tuple(coords)
    grid = sample_values()
    found = []
    for solve_var in reversed(coords):
        if F.degree(solve_var) not in (1, 2):
            continue
        others = [c for c in coords if c != solve_var]
        for vals in product(grid[:12], repeat=len(others)):
            g = F.subs(dict(zip(others, vals))) if others else F
            if not isinstance(g, Polynomial) or g.degree(solve_var) not in (1, 2):
                continue
            for root in solve_univariate_low(g.with_variables((solve_var,)), solve_var):
                pt = dict(zip(others, vals))
                pt[solve_var] = root
                point = tuple(coerce(pt[c]) for c in coords)
                if point not in found:
                    found.append(point)
                if len(found) >= count:
                    return found
        if found:
            break
    return found
