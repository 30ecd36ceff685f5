"""Resultants via the subresultant remainder sequence.

Sign convention: the value equals the determinant of the Sylvester matrix
of ``(p, q)`` with ``p``'s coefficients in the first ``deg q`` rows, so
``Res(p*r, q) == Res(p, q) * Res(r, q)`` holds exactly, and
``Res(q, p) == (-1)**(deg p * deg q) * Res(p, q)``.
"""

from ..errors import AlgebraError
from .gcd import prem
from .poly import Polynomial, exquo


def resultant(p, q, var):
    """Eliminate ``var`` from ``p`` and ``q``."""
    if not isinstance(p, Polynomial) or not isinstance(q, Polynomial):
        raise TypeError("resultant expects polynomials")
    if not p or not q:
        raise AlgebraError("resultant of a zero polynomial")
    p, q = p._unify(q)
    if var not in p.variables:
        p = p.with_variables(p.variables + (var,))
        q = q.with_variables(p.variables)
    dp, dq = p.degree(var), q.degree(var)
    if dp == 0:
        return p ** dq
    if dq == 0:
        return q ** dp
    sign = 1
    a, b = p, q
    if dp < dq:
        a, b = q, p
        if dp % 2 and dq % 2:
            sign = -1
    g = a.one()
    h = a.one()
    while True:
        da, db = a.degree(var), b.degree(var)
        delta = da - db
        if da % 2 and db % 2:
            sign = -sign
        r = prem(a, b, var)
        if not r:
            return a.zero()
        a = b
        b = exquo(r, g * h ** delta)
        g = a.leading_coefficient(var)
        if delta == 0:
            pass
        elif delta == 1:
            h = g
        else:
            h = exquo(g ** delta, h ** (delta - 1))
        if b.degree(var) == 0:
            da = a.degree(var)
            if da == 1:
                h = b
            else:
                h = exquo(b ** da, h ** (da - 1))
            return h * sign
    # unreachable


def discriminant(p, var):
    """Res(p, p') / lc(p), up to the usual sign."""
    d = p.degree(var)
    if d < 1:
        raise AlgebraError("discriminant needs positive degree")
    r = resultant(p, p.diff(var), var)
    sign = -1 if (d * (d - 1) // 2) % 2 else 1
    return exquo(r, p.leading_coefficient(var)) * sign


def sylvester_matrix(p, q, var):
    """Sylvester matrix as nested lists of coefficient polynomials (used for cross-checks)."""
    p, q = p._unify(q)
    m, n = p.degree(var), q.degree(var)
    pc = list(reversed(p.coeff_list(var)))
    qc = list(reversed(q.coeff_list(var)))
    zero = p.zero()
    size = m + n
    rows = []
    for k in range(n):
        rows.append([zero] * k + pc + [zero] * (size - k - len(pc)))
    for k in range(m):
        rows.append([zero] * k + qc + [zero] * (size - k - len(qc)))
    return rows
