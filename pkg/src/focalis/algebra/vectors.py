"""Helpers for vectors whose entries are polynomials or rational functions."""

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from .gaussian import ONE, GaussianRational, coerce
from .gcd import gcd, lcm
from .poly import Polynomial, exquo
from .rational import RationalFunction, as_rational


def common_ring(items):
    """Merged variable tuple of all polynomial-like items, in first-seen order."""
    variables = ()
    for x in items:
        if isinstance(x, RationalFunction):
            x = x.numerator
        if isinstance(x, Polynomial):
            for v in x.variables:
                if v not in variables:
                    variables = variables + (v,)
    return variables


def as_poly(x, variables=()):
    """Scalars and polynomials to a Polynomial in ``variables``."""
    if isinstance(x, RationalFunction):
        x = x.as_polynomial()
    if isinstance(x, Polynomial):
        return x.with_variables(_merge(x.variables, variables))
    c = coerce(x)
    if c is NotImplemented:
        raise TypeError(f"not a polynomial: {x!r}")
    return Polynomial.constant(c, variables)


def _merge(a, b):
    return tuple(b) + tuple(v for v in a if v not in b)


def clear_denominators(vec):
    """Multiply a rational vector by the lcm of its denominators; returns polynomials."""
    rats = [as_rational(x) for x in vec]
    variables = common_ring(rats + [r.denominator for r in rats])
    den = Polynomial.constant(ONE, variables)
    for r in rats:
        if not r.denominator.is_constant():
            den = lcm(den, r.denominator.with_variables(variables))
    out = []
    for r in rats:
        n = r.numerator.with_variables(variables) * exquo(den, r.denominator.with_variables(variables))
        out.append(n)
    return out


def primitive_vector(vec):
    """Content-free polynomial representative of the line spanned by ``vec``.

    Denominators are cleared, the polynomial gcd of the entries divided out,
    and coefficients scaled to coprime Gaussian integers with the first
    nonzero entry's grlex leading coefficient positive.
    """
    polys = clear_denominators(vec)
    nonzero = [p for p in polys if p]
    if not nonzero:
        return polys
    g = nonzero[0]
    for p in nonzero[1:]:
        if g.is_constant():
            break
        g = gcd(g, p)
    if not g.is_constant():
        polys = [exquo(p, g) if p else p for p in polys]
    return integer_normalize(polys)


def integer_normalize(polys):
    """Scale a polynomial vector to coprime Gaussian-integer coefficients with positive lead."""
    den = 1
    for p in polys:
        for c in p.terms.values():
            den = ilcm(den, c.re.denominator, c.im.denominator)
    g = 0
    for p in polys:
        for c in p.terms.values():
            g = igcd(g, int(c.re * den), int(c.im * den))
    if not g:
        return list(polys)
    factor = Fraction(den, g)
    first = next(p for p in polys if p)
    lead = first.leading_coefficient() * factor
    if lead.re < 0 or (lead.re == 0 and lead.im < 0):
        factor = -factor
    scale = GaussianRational(factor)
    return [p * scale for p in polys]


def is_zero_vector(vec):
    return all(not x for x in vec)


def are_parallel(u, v):
    """True iff all 2x2 minors of [u; v] vanish identically."""
    if len(u) != len(v):
        raise ValueError("vectors of different length")
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            if u[a] * v[b] - u[b] * v[a]:
                return False
    return True


def minors_2x2(u, v):
    out = []
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            out.append(u[a] * v[b] - u[b] * v[a])
    return out
