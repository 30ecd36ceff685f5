"""Polynomial gcd, content, pseudo-remainders and squarefree decomposition.

Everything works over Q(i), so scalars are units. Multivariate gcds use the
recursive primitive remainder sequence: pick a main variable, split off the
content (gcd of coefficients, computed recursively), and run Euclid on the
primitive parts with pseudo-division.
"""

from dataclasses import dataclass, field

from ..errors import AlgebraError
from .poly import Polynomial, exquo


def _main_variable(*polys):
    """First variable (in the first polynomial's order) of positive degree in any input."""
    seen = []
    for p in polys:
        for v in p.variables:
            if v not in seen:
                seen.append(v)
    for v in seen:
        if any(p.degree(v) > 0 for p in polys):
            return v
    return None


def normalize(p):
    """Canonical associate: grlex-monic. Zero stays zero."""
    return p.monic() if p else p


def prem(a, b, var):
    """Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b in ``var``."""
    a, b = a._unify(b)
    db = b.degree(var)
    if db < 0:
        raise AlgebraError("pseudo-division by zero")
    da = a.degree(var)
    if da < db:
        return a
    lb = b.leading_coefficient(var)
    x = Polynomial.var(var, a.variables)
    r = a
    e = da - db + 1
    while r and r.degree(var) >= db:
        dr = r.degree(var)
        t = r.leading_coefficient(var) * x ** (dr - db)
        r = lb * r - t * b
        e -= 1
    if e:
        r = lb ** e * r
    return r


def _univariate_rem(a, b, var):
    """Remainder over the field Q(i), for polynomials in ``var`` only."""
    db = b.degree(var)
    inv = b.leading_coefficient().inverse()
    x = Polynomial.var(var, a.variables)
    r = a
    while r and r.degree(var) >= db:
        dr = r.degree(var)
        r = r - (r.leading_coefficient() * inv) * x ** (dr - db) * b
    return r


def content(p, var):
    """gcd of the coefficients of ``p`` viewed as a polynomial in ``var``."""
    cs = list(p.coeffs(var).values())
    if not cs:
        return p
    g = cs[0]
    for c in cs[1:]:
        if g.is_constant():
            break
        g = gcd(g, c)
    if g.is_constant():
        return p.one()
    return normalize(g)


def primitive_part(p, var):
    if not p:
        return p
    return exquo(p, content(p, var))


def _split_other(p, var):
    """Coefficients of ``p`` with respect to every variable except ``var``."""
    k = p.variables.index(var)
    out = {}
    for e, c in p.terms.items():
        key = e[:k] + e[k + 1:]
        ne = (0,) * k + (e[k],) + (0,) * (len(e) - k - 1)
        out.setdefault(key, {})[ne] = c
    return [Polynomial._make(p.variables, t) for t in out.values()]


def _gcd_with_univariate(u, p, var):
    # u lives in var alone; its gcd with p divides every coefficient of p over the rest
    g = normalize(u)
    for c in sorted(_split_other(p, var), key=lambda c: c.degree(var)):
        g = gcd(g, c)
        if g.is_constant():
            return g.one()
    return g


_PROBES = ((3, 7, 11, 13, 17, 19, 23, 29), (-5, 2, -9, 4, 31, -6, 8, 37))


def _image(p, var, point):
    """``p`` with every variable except ``var`` set to ``point`` (a name -> int map)."""
    k = p.variables.index(var)
    terms = {}
    for e, c in p.terms.items():
        v = c
        for name, a in zip(p.variables, e):
            if a and name != var:
                v = v * point[name] ** a
        ne = (0,) * k + (e[k],) + (0,) * (len(e) - k - 1)
        terms[ne] = terms.get(ne, 0) + v
    return Polynomial._make(p.variables, {e: c for e, c in terms.items() if c})


def _coprime_in(p, q, var):
    """True when an image at a good point shows that gcd(p, q) is free of ``var``."""
    others = [v for v in p.variables if v != var]
    for values in _PROBES:
        point = {v: values[j % len(values)] + j for j, v in enumerate(others)}
        a, b = _image(p, var, point), _image(q, var, point)
        if a.degree(var) != p.degree(var) or b.degree(var) != q.degree(var):
            continue
        return gcd(a, b).degree(var) <= 0
    return False


def gcd(p, q):
    """Greatest common divisor, normalized to be grlex-monic."""
    if not isinstance(p, Polynomial) or not isinstance(q, Polynomial):
        raise TypeError("gcd expects polynomials")
    p, q = p._unify(q)
    if not p:
        return normalize(q)
    if not q:
        return normalize(p)
    if p.is_constant() or q.is_constant():
        return p.one()
    var = _main_variable(p, q)
    if var is None:
        return p.one()
    if p.degree(var) == 0:
        return gcd(p, content(q, var))
    if q.degree(var) == 0:
        return gcd(q, content(p, var))
    fp, fq = set(p.free_variables()), set(q.free_variables())
    free = fp | fq
    if free != {var}:
        if len(fq) == 1:
            return _gcd_with_univariate(q, p, next(iter(fq)))
        if len(fp) == 1:
            return _gcd_with_univariate(p, q, next(iter(fp)))
    if free == {var}:
        a, b = p, q
        if a.degree(var) < b.degree(var):
            a, b = b, a
        b = b.monic()
        while b:
            r = _univariate_rem(a, b, var)
            a, b = b, (r.monic() if r else r)
        return normalize(a)
    cp, cq = content(p, var), content(q, var)
    c = gcd(cp, cq)
    if _coprime_in(p, q, var):
        return normalize(c)
    a, b = exquo(p, cp), exquo(q, cq)
    if a.degree(var) < b.degree(var):
        a, b = b, a
    while b:
        r = prem(a, b, var)
        a = b
        if not r:
            break
        if r.degree(var) == 0:
            a = p.one()
            break
        b = primitive_part(r, var)
    if a.degree(var) > 0:
        a = primitive_part(a, var)
    else:
        a = a.one()
    return normalize(c * a)


def lcm(p, q):
    if not p or not q:
        return p.zero()
    return normalize(exquo(p * q, gcd(p, q)))


def gcd_list(polys):
    polys = [p for p in polys]
    if not polys:
        raise AlgebraError("gcd of an empty list")
    g = polys[0]
    for p in polys[1:]:
        g = gcd(g, p)
    return normalize(g)


@dataclass(frozen=True)
class SquarefreeResult:
    """Decomposition of ``p`` with respect to one variable.

    ``p == unit * content * prod(f ** k for f, k in factors)`` where the
    factors are pairwise coprime and squarefree in ``var``.
    """

    content: Polynomial
    squarefree: Polynomial
    distinct_root_count: int
    factors: list = field(default_factory=list)


def yun(p, var):
    """Yun's algorithm on a primitive (in ``var``) polynomial. Returns [(f, k), ...]."""
    if p.degree(var) <= 0:
        return []
    dp = p.diff(var)
    a = gcd(p, dp)
    b = exquo(p, a)
    c = exquo(dp, a)
    d = c - b.diff(var)
    out = []
    k = 1
    while b.degree(var) > 0:
        a = gcd(b, d)
        b = exquo(b, a)
        c = exquo(d, a)
        d = c - b.diff(var)
        if a.degree(var) > 0:
            out.append((normalize(a), k))
        k += 1
    return out


def squarefree_and_content(p, var):
    """Split ``p`` into content in ``var`` and squarefree part in ``var``.

    For a univariate ``p`` the distinct complex root count is the degree of
    the squarefree part.
    """
    if not p:
        raise AlgebraError("squarefree decomposition of the zero polynomial")
    if var not in p.variables or p.degree(var) == 0:
        return SquarefreeResult(normalize(p), p.one(), 0, [])
    cont = content(p, var)
    prim = exquo(p, cont)
    factors = yun(prim, var)
    sqf = p.one()
    for f, _ in factors:
        sqf = sqf * f
    sqf = normalize(sqf)
    return SquarefreeResult(cont, sqf, sqf.degree(var), factors)


def squarefree_part(p):
    """Squarefree part with respect to every variable (radical of the principal ideal)."""
    if not p:
        raise AlgebraError("squarefree part of the zero polynomial")
    result = p.one()
    rest = normalize(p)
    for v in p.variables:
        if rest.degree(v) <= 0:
            continue
        dec = squarefree_and_content(rest, v)
        result = result * dec.squarefree
        rest = dec.content
    return normalize(result)


def is_squarefree(p, var):
    return gcd(p, p.diff(var)).degree(var) <= 0


def squarefree_factors(p):
    """Coprime squarefree pieces with multiplicities, across all variables.

    Returns ``[(f, k), ...]`` with ``p == unit * prod(f ** k)``; each ``f`` is
    grlex-monic and non-constant.
    """
    if not p:
        raise AlgebraError("squarefree factors of the zero polynomial")
    out = []
    rest = p
    for v in p.variables:
        if rest.degree(v) <= 0:
            continue
        cont = content(rest, v)
        out.extend(yun(exquo(rest, cont), v))
        rest = cont
    return out
