"""Complexified Euclidean structure: the quadratic form at infinity and normals.

The form is given by a symmetric non-degenerate Gram matrix over Q(i); the
default is the identity, i.e. the standard Euclidean coordinates.
"""

from .algebra.gaussian import ONE, ZERO, GaussianRational, coerce
from .algebra.linalg import cofactor, det, identity, inverse, mat_vec, nullspace, rank, rref
from .algebra.poly import Polynomial
from .algebra.rational import RationalFunction
from .algebra.vectors import primitive_vector
from .errors import DegenerateError, PreconditionError, UnsupportedError


class QuadraticSpace:
    """C^m with a symmetric bilinear form ``<u, v> = u^T G v``."""

    def __init__(self, gram=None, dimension=None):
        if gram is None:
            if dimension is None:
                raise ValueError("need a Gram matrix or a dimension")
            gram = identity(dimension)
        gram = [[_scalar(x) for x in row] for row in gram]
        m = len(gram)
        if any(len(row) != m for row in gram):
            raise PreconditionError("Gram matrix must be square", "GRAM_NOT_SYMMETRIC")
        if dimension is not None and dimension != m:
            raise PreconditionError(f"Gram matrix is {m}x{m}, expected {dimension}")
        for i in range(m):
            for j in range(i + 1, m):
                if gram[i][j] != gram[j][i]:
                    raise PreconditionError(
                        f"Gram matrix is not symmetric at ({i + 1}, {j + 1})", "GRAM_NOT_SYMMETRIC"
                    )
        if not det(gram):
            raise PreconditionError("Gram matrix is degenerate", "GRAM_DEGENERATE")
        self.gram = gram
        self.dimension = m
        self.is_identity = gram == identity(m)

    @classmethod
    def standard(cls, m):
        return cls(dimension=m)

    def dot(self, u, v):
        """Bilinear pairing. Entries may be scalars, polynomials or rational functions."""
        if len(u) != self.dimension or len(v) != self.dimension:
            raise PreconditionError(
                f"vectors of length {len(u)} and {len(v)} in a space of dimension {self.dimension}"
            )
        total = ZERO
        if self.is_identity:
            for a, b in zip(u, v):
                if a and b:
                    total = a * b + total
            return total
        for i, a in enumerate(u):
            if not a:
                continue
            for j, b in enumerate(v):
                g = self.gram[i][j]
                if g and b:
                    total = a * b * g + total
        return total

    def norm2(self, u):
        return self.dot(u, u)

    def is_isotropic(self, v):
        return not self.dot(v, v)

    def lower(self, v):
        """Covector G v."""
        return mat_vec(self.gram, list(v))

    def raise_index(self, w):
        """Vector G^{-1} w."""
        if self.is_identity:
            return list(w)
        return mat_vec(self._inverse(), list(w))

    def _inverse(self):
        if not hasattr(self, "_inv"):
            self._inv = inverse(self.gram)
        return self._inv

    def span(self, vectors):
        return LinearSubspace(self, vectors)

    def __eq__(self, other):
        return isinstance(other, QuadraticSpace) and self.gram == other.gram

    def __hash__(self):
        return hash(self.dimension)

    def __repr__(self):
        if self.is_identity:
            return f"QuadraticSpace.standard({self.dimension})"
        return f"QuadraticSpace({[[str(x) for x in row] for row in self.gram]})"


class LinearSubspace:
    """Span of independent vectors over Q(i), kept in canonical echelon form."""

    def __init__(self, ambient, basis):
        basis = [[_scalar(x) for x in v] for v in basis]
        for v in basis:
            if len(v) != ambient.dimension:
                raise PreconditionError("basis vector has the wrong length")
        if basis and rank(basis) != len(basis):
            raise PreconditionError("basis vectors are linearly dependent")
        self.ambient = ambient
        self.basis = basis
        self._echelon = None

    @property
    def dimension(self):
        return len(self.basis)

    def echelon(self):
        if self._echelon is None:
            if not self.basis:
                self._echelon = []
            else:
                rows, pivots = rref(self.basis)
                self._echelon = [tuple(r) for r in rows[: len(pivots)]]
        return self._echelon

    def contains(self, v):
        if not self.basis:
            return all(not x for x in v)
        return rank(self.basis + [list(v)]) == len(self.basis)

    def __eq__(self, other):
        if not isinstance(other, LinearSubspace):
            return NotImplemented
        return self.ambient == other.ambient and self.echelon() == other.echelon()

    def __hash__(self):
        return hash(tuple(self.echelon()))

    def __repr__(self):
        rows = [[str(x) for x in r] for r in self.echelon()]
        return f"LinearSubspace({rows})"


def _scalar(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        if x.is_constant():
            return x.constant_value()
        raise PreconditionError(f"expected a constant, got {x}")
    c = coerce(x)
    if c is NotImplemented:
        raise PreconditionError(f"expected a Q(i) scalar, got {x!r}")
    return c


def dot(u, v, Q=None):
    Q = Q or QuadraticSpace.standard(len(u))
    return Q.dot(u, v)


def is_isotropic(v, Q=None):
    Q = Q or QuadraticSpace.standard(len(v))
    return Q.is_isotropic(v)


def is_totally_isotropic(L):
    Q = L.ambient
    for a in range(len(L.basis)):
        for b in range(a, len(L.basis)):
            if Q.dot(L.basis[a], L.basis[b]):
                return False
    return True


def orthogonal_complement(L):
    """Ann(L) = {w : <v, w> = 0 for all v in L}."""
    Q = L.ambient
    if not L.basis:
        return LinearSubspace(Q, identity(Q.dimension))
    rows = [Q.lower(v) for v in L.basis]  # (G v)^T w = <v, w>
    return LinearSubspace(Q, nullspace(rows, Q.dimension))


def normal_field(X, Q=None):
    """Content-free polynomial normal vector of a codimension-one parametrization.

    The raw normal is ``G^{-1} w`` where ``w_j`` is the cofactor of the first
    row of the matrix with rows ``(e, dX/dp_1, ..., dX/dp_{m-1})``. For a plane
    curve with the identity form this is ``(y', -x')``.
    """
    m = X.ambient_dim
    Q = Q or QuadraticSpace.standard(m)
    if X.flavor != "affine":
        raise UnsupportedError("normal_field needs an affine parametrization")
    if m != Q.dimension:
        raise PreconditionError(f"variety lives in dimension {m}, form in {Q.dimension}")
    if X.dim != m - 1:
        raise UnsupportedError(
            f"normal_field needs codimension one (got {X.dim} parameters in dimension {m})"
        )
    tangents = X.tangent_vectors()
    placeholder = [ONE] * m
    mat = [placeholder] + [list(t) for t in tangents]
    w = [cofactor(mat, 0, j) for j in range(m)]
    if all(not x for x in w):
        raise DegenerateError(f"tangent vectors of {X} are generically dependent")
    n = Q.raise_index(w)
    return primitive_vector(n)


__all__ = [
    "QuadraticSpace",
    "LinearSubspace",
    "GaussianRational",
    "dot",
    "is_isotropic",
    "is_totally_isotropic",
    "orthogonal_complement",
    "normal_field",
]
