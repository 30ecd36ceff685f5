"""Dense exact linear algebra over Q(i) or over rational function fields.

Matrices are lists of rows. Entries may be ints, Fractions,
GaussianRationals, Polynomials or RationalFunctions; elimination promotes
polynomial entries to rational functions when a division is needed.
"""

from ..errors import AlgebraError
from .gaussian import ONE, ZERO, coerce
from .poly import Polynomial, exquo
from .rational import RationalFunction, as_rational


def to_field(x):
    """Promote to a field element: GaussianRational or RationalFunction."""
    if isinstance(x, RationalFunction):
        return x.simplify() if x.is_constant() else x
    if isinstance(x, Polynomial):
        if x.is_constant():
            return x.constant_value()
        return RationalFunction(x, _reduced=True)
    c = coerce(x)
    if c is NotImplemented:
        raise TypeError(f"not a field element: {x!r}")
    return c


def _clean(x):
    """Collapse constant rational functions to scalars."""
    if isinstance(x, RationalFunction) and x.is_constant():
        return x.constant_value()
    return x


def shape(m):
    return len(m), (len(m[0]) if m else 0)


def transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    rows, inner = shape(a)
    if inner != len(b):
        raise AlgebraError("matrix dimensions do not match")
    cols = len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            s = ZERO
            for k in range(inner):
                if a[i][k] and b[k][j]:
                    s = s + a[i][k] * b[k][j]
            row.append(s)
        out.append(row)
    return out


def mat_vec(a, v):
    return [row[0] for row in mat_mul(a, [[x] for x in v])]


def rref(m):
    """Reduced row echelon form. Returns (rows, pivot_columns)."""
    rows = [[to_field(x) for x in row] for row in m]
    nrows, ncols = shape(rows)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((k for k in range(r, nrows) if rows[k][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [_clean(x * inv) if x else x for x in rows[r]]
        for k in range(nrows):
            if k != r and rows[k][c]:
                f = rows[k][c]
                rows[k] = [_clean(a - f * b) if b else a for a, b in zip(rows[k], rows[r])]
        pivots.append(c)
        r += 1
    return rows, pivots


def rank(m):
    return len(rref(m)[1])


def nullspace(m, ncols=None):
    """Basis of {v : m v = 0}, one vector per free column (RREF-canonical)."""
    if not m:
        n = ncols or 0
        return [[ONE if i == j else ZERO for i in range(n)] for j in range(n)]
    rows, pivots = rref(m)
    n = len(rows[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for r, pc in enumerate(pivots):
            if rows[r][f]:
                v[pc] = _clean(-rows[r][f])
        basis.append(v)
    return basis


def solve(a, b):
    """One solution x of a x = b (None if inconsistent) plus a nullspace basis."""
    nrows, ncols = shape(a)
    if len(b) != nrows:
        raise AlgebraError("right-hand side has the wrong length")
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    rows, pivots = rref(aug)
    if ncols in pivots:
        return None, nullspace(a, ncols)
    x = [ZERO] * ncols
    for r, pc in enumerate(pivots):
        x[pc] = rows[r][ncols]
    return x, nullspace(a, ncols)


def det(m):
    """Determinant. Polynomial matrices use fraction-free Bareiss elimination."""
    n, c = shape(m)
    if n != c:
        raise AlgebraError("determinant of a non-square matrix")
    if n == 0:
        return ONE
    if all(isinstance(x, Polynomial) for row in m for x in row):
        return _det_bareiss(m)
    if any(isinstance(x, (Polynomial, RationalFunction)) for row in m for x in row):
        return _det_rational(m)
    return _det_scalar(m)


def _det_scalar(m):
    rows = [[coerce(x) for x in row] for row in m]
    n = len(rows)
    result = ONE
    for c in range(n):
        p = next((k for k in range(c, n) if rows[k][c]), None)
        if p is None:
            return ZERO
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        inv = piv.inverse()
        for k in range(c + 1, n):
            if rows[k][c]:
                f = rows[k][c] * inv
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[c])]
    return result


def _det_bareiss(m):
    rows = [list(row) for row in m]
    n = len(rows)
    variables = ()
    for row in rows:
        for x in row:
            for v in x.variables:
                if v not in variables:
                    variables = variables + (v,)
    rows = [[x.with_variables(variables) for x in row] for row in rows]
    sign = 1
    prev = Polynomial.constant(ONE, variables)
    for k in range(n - 1):
        if not rows[k][k]:
            p = next((r for r in range(k + 1, n) if rows[r][k]), None)
            if p is None:
                return Polynomial._make(variables, {})
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = exquo(rows[i][j] * rows[k][k] - rows[i][k] * rows[k][j], prev)
        prev = rows[k][k]
    return rows[n - 1][n - 1] * sign


def _det_rational(m):
    rows = [[as_rational(x) if not isinstance(x, RationalFunction) else x for x in row] for row in m]
    n = len(rows)
    result = as_rational(ONE)
    for c in range(n):
        p = next((k for k in range(c, n) if rows[k][c]), None)
        if p is None:
            return as_rational(ZERO)
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        piv = rows[c][c]
        result = result * piv
        for k in range(c + 1, n):
            if rows[k][c]:
                f = rows[k][c] / piv
                rows[k] = [a - f * b for a, b in zip(rows[k], rows[c])]
    return result.simplify()


def cofactor(m, i, j):
    minor = [row[:j] + row[j + 1:] for k, row in enumerate(m) if k != i]
    d = det(minor)
    return -d if (i + j) % 2 else d


def inverse(m):
    n, c = shape(m)
    if n != c:
        raise AlgebraError("inverse of a non-square matrix")
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(m)]
    rows, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise AlgebraError("matrix is singular")
    return [row[n:] for row in rows]


def identity(n):
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
