"""Parametrized and implicit varieties shared by the geometric modules."""

from .algebra.gaussian import coerce
from .algebra.gcd import squarefree_part
from .algebra.linalg import rank
from .algebra.parse import parse_expression, parse_tuple
from .algebra.poly import Polynomial
from .algebra.rational import RationalFunction, as_rational
from .algebra.vectors import common_ring
from .errors import DegenerateError, PreconditionError


def _as_coord(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x
    c = coerce(x)
    if c is NotImplemented:
        raise TypeError(f"bad coordinate {x!r}")
    return Polynomial.constant(c)


class ParametricVariety:
    """Coordinates given as rational functions of 0, 1 or 2 parameters.

    ``flavor`` is ``"affine"`` (``m`` coordinates) or ``"homogeneous"``
    (``m + 1`` coordinates, the first being the affine-chart coordinate).
    Names other than the parameters are treated as symbolic constants.
    """

    def __init__(self, coords, params, flavor="affine"):
        if flavor not in ("affine", "homogeneous"):
            raise ValueError(f"unknown flavor {flavor!r}")
        self.params = tuple(params)
        coords = [_as_coord(c) for c in coords]
        ring = self.params + tuple(v for v in common_ring(coords) if v not in self.params)
        self.coords = tuple(_simplify(c.with_variables(ring)) for c in coords)
        self.flavor = flavor
        self.ring = ring

    @classmethod
    def parse(cls, text, params, flavor="affine"):
        return cls(parse_tuple(text, params), params, flavor)

    @property
    def ambient_dim(self):
        return len(self.coords) - (1 if self.flavor == "homogeneous" else 0)

    @property
    def dim(self):
        return len(self.params)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, k):
        return self.coords[k]

    def tangent_vectors(self):
        """``[dX/dp for p in params]`` as lists of rational functions/polynomials."""
        return [[_simplify(_diff(c, p)) for c in self.coords] for p in self.params]

    def jacobian(self):
        """Rows indexed by coordinates, columns by parameters."""
        tv = self.tangent_vectors()
        return [[tv[j][i] for j in range(self.dim)] for i in range(len(self.coords))]

    def generic_rank(self):
        if not self.params:
            return 0
        return rank(self.tangent_vectors())

    def check_immersed(self):
        if self.generic_rank() < self.dim:
            raise DegenerateError(
                f"Jacobian of {self} has generic rank below {self.dim}"
            )

    def at(self, values):
        """Point at parameter values (sequence matching ``params`` or mapping)."""
        if not isinstance(values, dict):
            values = list(values)
            if len(values) != len(self.params):
                raise PreconditionError(
                    f"expected {len(self.params)} parameter values, got {len(values)}"
                )
            values = dict(zip(self.params, values))
        return tuple(_simplify(_subs(c, values)) for c in self.coords)

    def substitute(self, mapping, params=None):
        """New variety after substituting parameters by expressions."""
        coords = [_subs(c, mapping) for c in self.coords]
        return ParametricVariety(coords, params if params is not None else self.params, self.flavor)

    def affine(self):
        """Affine coordinates of a homogeneous variety (divide by the chart coordinate)."""
        if self.flavor == "affine":
            return self
        x0 = self.coords[0]
        return ParametricVariety([as_rational(c) / x0 for c in self.coords[1:]], self.params)

    def __eq__(self, other):
        if not isinstance(other, ParametricVariety):
            return NotImplemented
        return (
            self.params == other.params
            and self.flavor == other.flavor
            and all(as_rational(a) == as_rational(b) for a, b in zip(self.coords, other.coords))
            and len(self.coords) == len(other.coords)
        )

    def __hash__(self):
        return hash((self.params, self.flavor, len(self.coords)))

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords) + ")"

    def __repr__(self):
        return f"ParametricVariety({self}, params={self.params}, flavor={self.flavor!r})"


class ImplicitHypersurface:
    """Zero set of one squarefree polynomial in the ambient coordinates."""

    def __init__(self, F, coords=None):
        if isinstance(F, str):
            F = parse_expression(F, coords)
        if isinstance(F, RationalFunction):
            F = F.numerator
        if not F:
            raise PreconditionError("implicit equation is identically zero")
        self.coords = tuple(coords) if coords is not None else F.variables
        F = F.with_variables(self.coords + tuple(v for v in F.variables if v not in self.coords))
        self.F = squarefree_part(F).with_variables(F.variables)

    @property
    def ambient_dim(self):
        return len(self.coords)

    def gradient(self):
        return [self.F.diff(v) for v in self.coords]

    def at(self, point):
        return self.F.subs(dict(zip(self.coords, point)))

    def __str__(self):
        return str(self.F)

    def __repr__(self):
        return f"ImplicitHypersurface({self.F!s}, coords={self.coords})"


def _diff(c, var):
    return c.diff(var)


def _subs(c, mapping):
    mapping = {k: v for k, v in mapping.items() if k in c.variables}
    if not mapping:
        return c
    return c.subs(mapping)


def _simplify(c):
    if isinstance(c, RationalFunction):
        return c.simplify()
    return c
