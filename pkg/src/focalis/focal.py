"""Forward focal loci.

The endpoint map sends ``(p, l)`` to ``x(p) + l * n(p)`` where ``n`` is a
normal vector. Its Jacobian determinant is the ramification polynomial; the
images of its components are the focal loci. Components of the ramification
polynomial that do not involve ``l`` are vertical: their images are whole
normal lines and belong to the large but not the strict focal locus.

The coordinate ``l`` lives in an affine chart of the fiber; the section at
``l = infinity`` is not represented.
"""

import random
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra.gaussian import ONE, ZERO, coerce
from .algebra.gcd import content, gcd, normalize, squarefree_factors, squarefree_part
from .algebra.linalg import det, nullspace, rref
from .algebra.poly import Polynomial, exquo, poly_sqrt
from .algebra.rational import RationalFunction, as_rational
from .algebra.resultant import resultant
from .algebra.vectors import clear_denominators, integer_normalize, primitive_vector
from .euclid import QuadraticSpace, normal_field
from .errors import (
    ConsistencyError,
    DegenerateError,
    PreconditionError,
    RetryExhaustedError,
    UnsupportedError,
)
from .variety import ImplicitHypersurface, ParametricVariety

LAMBDA = "l"


def ambient_names(m):
    """Default names of the ambient coordinates."""
    if m == 2:
        return ("x", "y")
    if m == 3:
        return ("x", "y", "z")
    return tuple(f"x{k}" for k in range(1, m + 1))


def _rat(x):
    r = as_rational(x)
    if r is NotImplemented:
        raise TypeError(f"not an expression: {x!r}")
    return r


def _simp(x):
    return x.simplify() if isinstance(x, RationalFunction) else x


def _poly_in(x, ring):
    """Polynomial (or scalar promoted) in the given ring."""
    if isinstance(x, RationalFunction):
        x = x.as_polynomial()
    if isinstance(x, Polynomial):
        return x.with_variables(ring + tuple(v for v in x.variables if v not in ring))
    return Polynomial.constant(x, ring)


def _is_const(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.is_constant()
    return True


def _const(x):
    if isinstance(x, (Polynomial, RationalFunction)):
        return x.constant_value()
    return coerce(x)


def _normalized(p):
    """Integer-primitive representative with positive grlex lead."""
    if isinstance(p, RationalFunction):
        p = p.numerator
    if not p:
        return p
    return p.to_integer_primitive()[1]


def factored_str(unit, factors):
    """Render ``unit * f1 * f2 ...`` with multi-term factors parenthesized."""
    parts = []
    for f in factors:
        s = str(f)
        if len(f.terms) > 1:
            s = f"({s})"
        parts.append(s)
    unit = coerce(unit)
    if not parts:
        return str(unit)
    body = "*".join(parts)
    if unit == 1:
        return body
    if unit == -1:
        return "-" + body
    if unit.re and unit.im:
        return f"({unit})*{body}"
    return f"{unit}*{body}"


# --- endpoint map -------------------------------------------------------------

@dataclass(frozen=True)
class EndpointMap:
    """``eps(vars) = base + l * normal`` with ``vars = params + (l,)``."""

    variables: tuple
    base: tuple
    normal: tuple
    coords: tuple

    def at(self, values):
        if not isinstance(values, dict):
            values = dict(zip(self.variables, values))
        return tuple(_simp(_rat(c).subs({k: v for k, v in values.items() if k in _rat(c).variables})) for c in self.coords)

    def jacobian_rows(self):
        return [[_simp(_rat(c).diff(v)) for c in self.coords] for v in self.variables]


def endpoint_map(X, Q=None, normal=None, lam=LAMBDA):
    """Symbolic endpoint map of a parametrization or an implicit hypersurface."""
    if isinstance(X, ImplicitHypersurface):
        m = X.ambient_dim
        Q = Q or QuadraticSpace.standard(m)
        if lam in X.coords:
            raise PreconditionError(f"coordinate name {lam!r} is reserved for the normal coordinate")
        n = Q.raise_index(X.gradient()) if normal is None else list(normal)
        base = [Polynomial.var(v, X.F.variables) for v in X.coords]
        variables = X.coords + (lam,)
    else:
        m = X.ambient_dim
        Q = Q or QuadraticSpace.standard(m)
        if lam in X.params:
            raise PreconditionError(f"parameter name {lam!r} is reserved for the normal coordinate")
        n = normal_field(X, Q) if normal is None else list(normal)
        base = list(X.coords)
        variables = X.params + (lam,)
    if len(n) != m:
        raise PreconditionError(f"normal vector has {len(n)} entries, expected {m}")
    if all(not c for c in n):
        raise DegenerateError("normal vector vanishes identically")
    L = Polynomial.var(lam, variables)
    coords = tuple(_simp(_rat(b) + _rat(c) * L) for b, c in zip(base, n))
    return EndpointMap(tuple(variables), tuple(base), tuple(n), coords)


# --- ramification -------------------------------------------------------------

@dataclass
class Ramification:
    """``raw == unit * content * primitive`` with content free of ``l``."""

    raw: Polynomial
    unit: object
    content: Polynomial
    primitive: Polynomial
    variables: tuple
    lam: str = LAMBDA
    denominator: Polynomial = None

    @property
    def degenerate(self):
        return not self.raw

    def factors(self):
        out = []
        if not self.content.is_constant():
            out.append(self.content)
        if not self.primitive.is_constant():
            out.append(self.primitive)
        return out

    def __str__(self):
        if self.degenerate:
            return "0"
        return factored_str(self.unit, self.factors())

    def equals_up_to_unit(self, other):
        """True iff ``other`` (a Polynomial, Ramification or string) is a nonzero multiple of ``raw`` in Q(i)."""
        if isinstance(other, Ramification):
            other = other.raw
        elif isinstance(other, str):
            from .algebra.parse import parse_expression

            other = parse_expression(other)
        if not other or not self.raw:
            return not other and not self.raw
        a, b = self.raw._unify(other)
        ka, kb = a.leading_exponent(), b.leading_exponent()
        if ka != kb:
            return False
        return a * b.terms[kb] == b * a.terms[ka]


def ramification_poly(X, Q=None, normal=None, lam=LAMBDA):
    """Jacobian determinant of the endpoint map, split into unit, content and primitive part."""
    if not isinstance(X, ParametricVariety):
        raise UnsupportedError("ramification_poly needs a parametrization")
    if X.dim < 1:
        raise DegenerateError("constant parametrization")
    eps = endpoint_map(X, Q, normal, lam)
    rows = eps.jacobian_rows()
    J = det(rows)
    J = _rat(J)
    ring = X.params + (lam,) + tuple(v for v in J.variables if v not in X.params and v != lam)
    raw = J.numerator.with_variables(ring)
    den = J.denominator.with_variables(ring)
    if not raw:
        zero = Polynomial._make(ring, {})
        return Ramification(zero, ONE, zero.one(), zero, ring, lam, den)
    cont = content(raw, lam)
    cont = cont.to_integer_primitive()[1]
    prim = exquo(raw, cont)
    unit, prim = prim.to_integer_primitive()
    return Ramification(raw, unit, cont, prim, ring, lam, den)


# --- focal output -------------------------------------------------------------

@dataclass
class FocalComponent:
    kind: str
    vertical: bool
    factor: Polynomial = None
    multiplicity: int = 1
    parametrization: ParametricVariety = None
    equations: list = None
    lam: object = None
    isotropic: bool = None
    notes: list = field(default_factory=list)

    @property
    def multiplicity_note(self):
        if self.factor is None:
            return ""
        return f"factor {self.factor} with multiplicity {self.multiplicity}"


@dataclass
class FocalOutput:
    ramification: Ramification
    components: list
    coords: tuple
    degenerate: bool = False
    notes: list = field(default_factory=list)

    @property
    def strict(self):
        return [c for c in self.components if not c.vertical]

    @property
    def large(self):
        return list(self.components)

    def branches(self):
        return [c for c in self.components if c.kind == "branch"]

    def verticals(self):
        return [c for c in self.components if c.vertical]


def affine_span_equations(point, directions, coords):
    """Linear equations (RREF-canonical) of ``point + span(directions)``."""
    m = len(point)
    directions = [list(v) for v in directions if any(x for x in v)]
    if directions:
        covectors = nullspace(directions, m)
    else:
        covectors = [[ONE if i == j else ZERO for i in range(m)] for j in range(m)]
    if covectors:
        rows, piv = rref(covectors)
        covectors = rows[: len(piv)]
    ring = tuple(coords)
    X = [Polynomial.var(c, ring) for c in coords]
    eqs = []
    for w in covectors:
        expr = _rat(ZERO)
        for wi, xi, pi in zip(w, X, point):
            if wi:
                expr = expr + _rat(wi) * (_rat(xi) - _rat(pi))
        eqs.append(_normalized(expr.numerator))
    return eqs


def _branch_lambdas(f, lam):
    """Solve a ramification factor for ``l``: list of rational functions, or None if not rational."""
    d = f.degree(lam)
    cs = f.coeff_list(lam)
    if d == 1:
        return [_simp(-_rat(cs[0]) / _rat(cs[1]))]
    if d == 2:
        c, b, a = cs
        disc = b * b - a * c * 4
        root = poly_sqrt(disc)
        if root is None:
            return None
        if not root:
            return [_simp(-_rat(b) / _rat(a * 2))]
        return [_simp((-_rat(b) + _rat(root)) / _rat(a * 2)), _simp((-_rat(b) - _rat(root)) / _rat(a * 2))]
    return None


def _coords_denominator(X):
    den = Polynomial.constant(ONE, X.ring)
    for c in X.coords:
        if isinstance(c, RationalFunction):
            den = den * c.denominator.with_variables(X.ring)
    return den


def focal_locus(X, Q=None, normal=None, lam=LAMBDA, coords=None):
    """Focal components of a codimension-one parametrization (plane curve or surface in 3-space)."""
    m = X.ambient_dim
    Q = Q or QuadraticSpace.standard(m)
    coords = tuple(coords) if coords else ambient_names(m)
    clash = set(coords) & (set(X.params) | {lam})
    if clash:
        raise PreconditionError(f"names {sorted(clash)} used both as parameters and coordinates")
    n = normal_field(X, Q) if normal is None else list(normal)
    ram = ramification_poly(X, Q, n, lam)
    if ram.degenerate:
        return FocalOutput(
            ram, [], coords, degenerate=True,
            notes=["ramification vanishes identically: the endpoint map is not dominant"],
        )
    components = []
    notes = []
    # l-dependent factors: strict focal branches
    if not ram.primitive.is_constant():
        for f, k in squarefree_factors(ram.primitive):
            if f.degree(lam) <= 0:
                continue
            lams = _branch_lambdas(f, lam)
            if lams is None:
                components.append(
                    FocalComponent(
                        "branch", False, _normalized(f), k,
                        notes=["branch is not rational in the parameters; only its equation is reported"],
                    )
                )
                continue
            for lv in lams:
                check = f.subs({lam: lv}) if lam in f.variables else f
                if _rat(check):
                    raise ConsistencyError(f"branch l = {lv} does not annihilate {f}")
                center = [_simp(_rat(x) + _rat(lv) * _rat(c)) for x, c in zip(X.coords, n)]
                par = ParametricVariety(center, X.params)
                comp = FocalComponent("branch", False, _normalized(f), k, par, lam=lv)
                if all(_is_const(c) for c in center):
                    comp.kind = "point"
                    comp.equations = affine_span_equations([_const(c) for c in center], [], coords)
                components.append(comp)
    else:
        notes.append("no l-dependent ramification factor: strict focal locus is empty")
    # l-free factors: vertical components
    den = _coords_denominator(X)
    if not ram.content.is_constant():
        for f, k in squarefree_factors(ram.content):
            if not gcd(f, den.with_variables(f.variables + tuple(v for v in den.variables if v not in f.variables))).is_constant():
                notes.append(f"factor {_normalized(f)} meets the poles of the parametrization; skipped")
                continue
            components.append(_vertical_component(X, n, f, k, lam, coords))
    if not components:
        notes.append("focal locus is empty in the affine chart")
    return FocalOutput(ram, components, coords, degenerate=not any(not c.vertical for c in components), notes=notes)


def _vertical_component(X, n, f, k, lam, coords):
    """Image of the normal lines over a factor of the ramification content."""
    comp = FocalComponent("vertical", True, _normalized(f), k)
    solvable = [p for p in X.params if f.degree(p) == 1]
    if X.dim == 1 and solvable:
        t = solvable[0]
        cs = f.coeff_list(t)
        t0 = _simp(-_rat(cs[0]) / _rat(cs[1]))
        point = [_simp(_rat(c).subs({t: t0})) for c in X.coords]
        direction = [_simp(_rat(c).subs({t: t0})) if t in _rat(c).variables else c for c in n]
        L = Polynomial.var(lam, (lam,))
        comp.parametrization = ParametricVariety(
            [_rat(p) + _rat(v) * L for p, v in zip(point, direction)], (lam,)
        )
        comp.equations = affine_span_equations(point, [direction], coords)
        comp.isotropic = QuadraticSpace.standard(len(n)).dot(direction, direction) == 0
        comp.notes.append(f"normal line over {t} = {t0}")
        return comp
    if X.dim == 1 and X.ambient_dim == 2:
        t = X.params[0]
        ring = (t,) + tuple(coords)
        Xv = [Polynomial.var(c, ring) for c in coords]
        xs = clear_denominators([_rat(c) for c in X.coords])
        num = [_rat(c) for c in X.coords]
        # det[X - x(t), n(t)] with x(t) = num/den
        a = (_rat(Xv[0]) - num[0]) * _rat(n[1]) - (_rat(Xv[1]) - num[1]) * _rat(n[0])
        eq = resultant(f.with_variables(ring), a.numerator.with_variables(ring), t)
        del xs
        comp.equations = [_normalized(squarefree_part(eq))] if eq else None
        comp.notes.append(f"union of {f.degree(t)} normal lines")
        return comp
    if X.dim == 2 and solvable:
        p = solvable[0]
        other = [q for q in X.params if q != p][0]
        cs = f.coeff_list(p)
        p0 = _simp(-_rat(cs[0]) / _rat(cs[1]))
        point = [_rat(c).subs({p: p0}) if p in _rat(c).variables else _rat(c) for c in X.coords]
        direction = [_rat(c).subs({p: p0}) if p in _rat(c).variables else _rat(c) for c in n]
        L = Polynomial.var(lam, (other, lam))
        comp.parametrization = ParametricVariety(
            [_simp(a + b * L) for a, b in zip(point, direction)], (other, lam)
        )
        comp.notes.append(f"normal lines over {p} = {p0}")
        return comp
    comp.notes.append("vertical factor not solvable for a parameter; image not computed")
    return comp


def evolute(X, Q=None, normal=None, lam=LAMBDA):
    """Evolute of a plane curve: strict branches plus vertical normal lines."""
    if X.ambient_dim != 2 or X.dim != 1:
        raise PreconditionError("evolute needs a plane curve with one parameter")
    return focal_locus(X, Q, normal, lam)


# --- surfaces of revolution ------------------------------------------------------

def _rotation_circle(u):
    U = Polynomial.var(u, (u,))
    den = U * U + 1
    return _rat(1 - U * U) / _rat(den), _rat(U * 2) / _rat(den)


def rotation_surface_focal(profile, Q=None, rot_param="u"):
    """Focal sheets of the surface swept by rotating ``(r(s), z(s))`` about the z-axis.

    The rotation circle is parametrized by ``((1 - u^2), 2u) / (1 + u^2)``;
    the point at ``u = infinity`` is not covered by the chart.
    """
    if profile.ambient_dim != 2 or profile.dim != 1:
        raise PreconditionError("profile must be a plane curve (r(s), z(s))")
    if Q is not None and not Q.is_identity:
        raise UnsupportedError("rotation sheets are computed for the standard form only")
    r, z = profile.coords
    if not r:
        raise PreconditionError("profile radius r(s) vanishes identically")
    s = profile.params[0]
    u = rot_param if rot_param != s else "v"
    coords = ("x", "y", "z")
    cu, su = _rotation_circle(u)
    n = normal_field(profile)
    components = []
    notes = [f"rotation chart {u} != infinity; the point at {u} = infinity is omitted"]
    # axis sheet: where normal lines meet the axis
    nr, nz = n
    if not nr:
        notes.append("normal lines are parallel to the axis: no axis sheet")
    else:
        h = _simp(_rat(z) - _rat(r) * _rat(nz) / _rat(nr))
        if _is_const(h):
            comp = FocalComponent("axis-point", False)
            comp.equations = affine_span_equations([ZERO, ZERO, _const(h)], [], coords)
            comp.parametrization = ParametricVariety([0, 0, _const(h)], ())
        else:
            comp = FocalComponent("axis", False)
            comp.equations = affine_span_equations([ZERO, ZERO, ZERO], [[ZERO, ZERO, ONE]], coords)
            comp.parametrization = ParametricVariety([0, 0, h], (s,))
        comp.notes.append("normal lines meet the rotation axis")
        components.append(comp)
    # rotated evolute
    plane = focal_locus(profile, None, n, coords=("rho", "z"))
    ring = ("x", "y", "z")
    X, Y, Zc = (Polynomial.var(c, ring) for c in ring)
    for comp in plane.components:
        if comp.parametrization is None:
            notes.append(f"plane focal component {comp.factor} has no parametrization; not rotated")
            continue
        if comp.vertical:
            er, ez = comp.parametrization.coords
            par = ParametricVariety(
                [_rat(er) * cu, _rat(er) * su, ez], comp.parametrization.params + (u,)
            )
            components.append(
                FocalComponent("rotated-vertical", True, comp.factor, comp.multiplicity, par,
                               notes=["rotation of a vertical normal line"])
            )
            continue
        er, ez = comp.parametrization.coords
        if _is_const(er) and _is_const(ez):
            er, ez = _const(er), _const(ez)
            if not er:
                out = FocalComponent("point", False, comp.factor, comp.multiplicity)
                out.equations = affine_span_equations([ZERO, ZERO, ez], [], coords)
                out.parametrization = ParametricVariety([0, 0, ez], ())
            else:
                out = FocalComponent("circle", False, comp.factor, comp.multiplicity)
                out.equations = [_normalized(Zc - ez), _normalized(X * X + Y * Y - er * er)]
                out.parametrization = ParametricVariety([cu * er, su * er, ez], (u,))
                out.notes.append(f"missing chart point ({-er}, 0, {ez})")
            components.append(out)
            continue
        out = FocalComponent("surface", False, comp.factor, comp.multiplicity)
        out.parametrization = ParametricVariety([_rat(er) * cu, _rat(er) * su, ez], (s, u))
        try:
            E = implicitize_image(comp.parametrization, ("rho", "z")).polynomial
            rho = Polynomial.var("rho", ("rho",) + ring)
            R = resultant(E.with_variables(("rho",) + ring), rho * rho - X * X - Y * Y, "rho")
            out.equations = [_normalized(squarefree_part(R).trim())]
        except (UnsupportedError, ConsistencyError) as exc:
            out.notes.append(f"implicit equation not computed: {exc}")
        components.append(out)
    ram = plane.ramification
    return FocalOutput(ram, components, coords, degenerate=not components, notes=notes + plane.notes)


# --- implicitization ------------------------------------------------------------

@dataclass
class Implicitization:
    equations: list
    codimension: int
    polynomial: Polynomial = None
    notes: list = field(default_factory=list)

    @property
    def is_hypersurface(self):
        return self.codimension == 1


_SAMPLE_VALUES = [Fraction(v) for v in (0, 1, -1, 2, -2, 3, -3, Fraction(1, 2), Fraction(-1, 2), 4, -4,
                                       5, -5, Fraction(1, 3), Fraction(-1, 3), 6, -6, 7, -7, Fraction(3, 2),
                                       Fraction(-3, 2), 8, -8, 9, -9, 10, -10, Fraction(2, 3), 11, -11, 12)]


def sample_points(X, count):
    """Up to ``count`` exact image points at fixed rational parameter values (poles skipped)."""
    out = []
    if X.dim == 0:
        return [tuple(_const(c) for c in X.coords)]
    if X.dim == 1:
        values = ([v] for v in _SAMPLE_VALUES)
    else:
        base = _SAMPLE_VALUES[1:13]
        order = sorted(((i, j) for i in range(12) for j in range(12)), key=lambda ij: (ij[0] + ij[1], ij[0]))
        values = ([base[i], base[(j + 5) % 12]] for i, j in order)
    for vals in values:
        try:
            pt = X.at(vals)
        except ZeroDivisionError:
            continue
        if not all(_is_const(c) for c in pt):
            raise UnsupportedError("sampling needs numeric coordinates (symbolic constants present)")
        out.append(tuple(_const(c) for c in pt))
        if len(out) >= count:
            break
    return out


def _vanishes_on(poly, coords, points):
    for p in points:
        val = poly.subs({c: v for c, v in zip(coords, p) if c in poly.variables})
        if isinstance(val, Polynomial):
            val = val.constant_value() if val.is_constant() else val
        if val:
            return False
    return True


def _filter_candidates(candidates, X, coords):
    kept = []
    for f in candidates:
        need = max(f.total_degree() + 1, 3)
        pts = sample_points(X, need * (2 if X.dim == 2 else 1))
        if _vanishes_on(f, coords, pts):
            kept.append(f)
    return kept


def _coordinate_equations(X, coords):
    ring = X.params + tuple(coords) + tuple(v for v in X.ring if v not in X.params)
    eqs = []
    for c, name in zip(X.coords, coords):
        r = _rat(c)
        eqs.append((r.denominator.with_variables(ring) * Polynomial.var(name, ring) - r.numerator.with_variables(ring)))
    return eqs, ring


def _split(pieces, splitters):
    out = []
    for p in pieces:
        stack = [p]
        for s in splitters:
            nxt = []
            for q in stack:
                g = gcd(q, s) if s else q.one()
                if not g.is_constant() and g.total_degree() < q.total_degree():
                    nxt.extend([normalize(g), normalize(exquo(q, g))])
                else:
                    nxt.append(q)
            stack = nxt
        out.extend(stack)
    return out


def _eliminate_candidates(R, X, coords, spurious):
    if not R:
        return []
    pieces = [f for f, _ in squarefree_factors(R)] if not R.is_constant() else []
    pieces = _split(pieces, spurious)
    return _filter_candidates(pieces, X, coords)


def implicitize_image(X, coords=None):
    """Equations of the image of a parametrization, by resultant elimination.

    One-parameter images in the plane give one equation; space curves give
    a list of hypersurfaces cutting the curve (codimension > 1 flagged).
    Candidate factors are kept only if they vanish at sampled image points.
    """
    m = len(X.coords)
    coords = tuple(coords) if coords else ambient_names(m)
    if len(coords) != m:
        raise PreconditionError(f"need {m} coordinate names, got {len(coords)}")
    if set(coords) & set(X.params):
        raise PreconditionError("coordinate names clash with parameter names")
    eqs, ring = _coordinate_equations(X, coords)
    params = X.params
    notes = []
    if X.dim == 0:
        return Implicitization([_normalized(e) for e in eqs], m, None)
    free = [e for e in eqs if all(e.degree(p) <= 0 for p in params)]
    moving = [e for e in eqs if any(e.degree(p) > 0 for p in params)]
    equations = [_normalized(e).trim() for e in free]
    rank = X.generic_rank()
    codim = m - rank
    if X.dim == 1:
        t = params[0]
        if len(moving) >= 2:
            moving.sort(key=lambda e: (e.degree(t), len(e.terms)))
            pivot = moving[0]
            spurious = [e.leading_coefficient(t) for e in moving]
            spurious = [s for s in spurious if not s.is_constant()]
            for other in moving[1:]:
                R = resultant(pivot, other, t)
                kept = _eliminate_candidates(R, X, coords, spurious)
                if not kept:
                    raise ConsistencyError("no eliminant factor vanishes on the sampled image points")
                for f in kept:
                    f = _normalized(f).trim()
                    if f not in equations:
                        equations.append(f)
    elif X.dim == 2:
        s, t = params
        if moving:
            E1, sp1 = eliminate_parameters(moving, (s, t))
            E2, sp2 = eliminate_parameters(moving, (t, s))
            spurious = [x for x in sp1 + sp2 if x and not x.is_constant()]
            spurious += [e.leading_coefficient(p) for e in moving for p in params if e.degree(p) > 0]
            spurious = [x for x in spurious if not x.is_constant()]
            if len(E1) == 1 and len(E2) == 1:
                targets = [gcd(E1[0], E2[0])]
            else:
                targets = E1 if len(E1) <= len(E2) else E2
            targets = [g for g in targets if g and not g.is_constant()]
            if not targets and not equations:
                raise ConsistencyError("elimination of two parameters failed")
            for G in targets:
                kept = _eliminate_candidates(G, X, coords, spurious)
                if not kept:
                    raise ConsistencyError("no eliminant factor vanishes on the sampled image points")
                poly = normalize(kept[0])
                for f in kept[1:]:
                    poly = poly * f
                poly = _normalized(poly).trim()
                if poly not in equations:
                    equations.append(poly)
                if len(kept) > 1:
                    notes.append("eliminant kept several candidate factors; it may not be irreducible")
    else:
        raise UnsupportedError("implicitization supports at most two parameters")
    equations = [e for e in equations if not e.is_constant()]
    if not equations:
        raise ConsistencyError("image is not cut out by any eliminant (image not a hypersurface)")
    hyper = [e for e in equations if any(e.degree(c) > 0 for c in coords)]
    poly = None
    if codim == 1:
        poly = hyper[0] if hyper else None
    else:
        nonlinear = [e for e in hyper if e.total_degree() > 1]
        poly = nonlinear[0] if nonlinear else hyper[0]
        notes.append(f"image has codimension {codim}; equations form a system")
    return Implicitization(equations, codim, poly, notes)


def eliminate_parameters(eqs, params):
    """Project ``{eqs = 0}`` away from ``params`` by successive resultants.

    A parameter occurring in a single equation is dropped together with that
    equation (its projection is dense). Returns (equations, spurious) where
    ``spurious`` collects pivot leading coefficients, which may contribute
    extraneous factors.
    """
    spurious = []
    eqs = list(eqs)
    for p in params:
        with_p = [e for e in eqs if e.degree(p) > 0]
        free = [e for e in eqs if e.degree(p) <= 0]
        if len(with_p) <= 1:
            eqs = free
            continue
        with_p.sort(key=lambda e: (e.degree(p), len(e.terms), str(e)))
        pivot = with_p[0]
        lc = pivot.leading_coefficient(p)
        if not lc.is_constant():
            spurious.append(lc)
        new = []
        for other in with_p[1:]:
            R = resultant(pivot, other, p)
            if R:
                new.append(squarefree_part(R))
        eqs = free + new
    return [e for e in eqs if e and not e.is_constant()], spurious


# --- image degree --------------------------------------------------------------

@dataclass
class ImageDegree:
    raw_intersections: int
    seed: int
    attempts: int
    map_degree_note: str


def _random_coeff(rng):
    v = 0
    while not v:
        v = rng.randint(-50, 50)
    return v


def image_degree(X, seed=0, max_failures=3):
    """Count intersections of the image with a seeded random line or hyperplane.

    For a parametrization the count is the number of distinct parameter
    solutions, i.e. deg(image) * deg(map). For a polynomial it is the number
    of distinct intersection points with a random line.
    """
    rng = random.Random(seed)
    failures = 0
    attempts = 0
    while failures < max_failures:
        attempts += 1
        if isinstance(X, (Polynomial, ImplicitHypersurface)):
            result = _degree_of_hypersurface(X, rng)
            note = "distinct points on a random line"
        elif X.dim == 1:
            result = _degree_of_curve_image(X, rng)
            note = "distinct parameter solutions = deg(image) * deg(map)"
        elif X.dim == 2:
            F = implicitize_image(X).polynomial
            result = _degree_of_hypersurface(F, rng)
            note = "distinct points of the implicitized image on a random line"
        else:
            raise UnsupportedError("image_degree supports one or two parameters")
        if result is not None:
            return ImageDegree(result, seed, attempts, note)
        failures += 1
    raise RetryExhaustedError(f"no transversal section after {max_failures} attempts (seed {seed})")


def _degree_of_curve_image(X, rng):
    t = X.params[0]
    rats = [_rat(c) for c in X.coords]
    ring = (t,) + tuple(v for v in X.ring if v != t)
    den = Polynomial.constant(ONE, ring)
    for r in rats:
        den = den * exquo(r.denominator.with_variables(ring), gcd(den, r.denominator.with_variables(ring)))
    terms = [exquo(den, r.denominator.with_variables(ring)) * r.numerator.with_variables(ring) for r in rats]
    if any(v != t for p in terms + [den] for v in p.free_variables()):
        raise UnsupportedError("image_degree needs numeric coordinates")
    generic = max(p.degree(t) for p in terms + [den])
    N = den * _random_coeff(rng)
    for p in terms:
        N = N + p * _random_coeff(rng)
    if N.degree(t) != generic:
        return None
    if not gcd(N, den).is_constant():
        return None
    sqf = squarefree_part(N)
    if sqf.degree(t) != N.degree(t):
        return None
    return N.degree(t)


def _degree_of_hypersurface(F, rng):
    if isinstance(F, ImplicitHypersurface):
        coords, F = F.coords, F.F
    else:
        coords = F.free_variables()
    t = "t_" if "t" in coords else "t"
    T = Polynomial.var(t, (t,))
    mapping = {c: T * _random_coeff(rng) + _random_coeff(rng) for c in coords}
    G = F.subs(mapping)
    if not isinstance(G, Polynomial):
        return None
    if G.degree(t) != F.total_degree():
        return None
    sqf = squarefree_part(G)
    if sqf.degree(t) != G.degree(t):
        return None
    return G.degree(t)


# --- sphere fibers --------------------------------------------------------------

def fiber_sphere_check(X, O, witness, Q=None, at_infinity=False):
    """Check that ``witness`` lies on a sphere centred at ``O`` tangent to X along it.

    Finite ``O``: <x - O, x - O> is constant along the witness and x - O is
    proportional to the normal of X. ``O`` at infinity: <O, x> is constant and
    the normal of X is proportional to ``O``.
    """
    if not isinstance(X, ImplicitHypersurface):
        raise PreconditionError("fiber_sphere_check needs an implicit hypersurface")
    m = X.ambient_dim
    Q = Q or QuadraticSpace.standard(m)
    if len(witness.coords) != m or len(O) != m:
        raise PreconditionError("dimension mismatch between X, O and witness")
    if witness.dim < 1:
        raise PreconditionError("witness must be positive dimensional")
    point = {c: w for c, w in zip(X.coords, witness.coords)}
    Fw = X.F.subs(point)
    if _rat(Fw):
        raise PreconditionError("witness does not lie on X")
    grad = [_simp(_rat(g.subs(point)) if g.variables else _rat(g)) for g in X.gradient()]
    normal = Q.raise_index(grad)
    if all(not _rat(g) for g in normal):
        raise PreconditionError("X is singular along the witness")
    O = [_rat(o) for o in O]
    xs = [_rat(c) for c in witness.coords]
    if at_infinity:
        value = _rat(Q.dot(O, xs))
        if not _constant_in(value, witness.params):
            return False
        return _parallel(normal, O)
    v = [a - b for a, b in zip(xs, O)]
    value = _rat(Q.dot(v, v))
    if not _constant_in(value, witness.params):
        return False
    return _parallel(normal, v)


def _constant_in(value, params):
    return all(not value.diff(p) for p in params)


def _parallel(u, v):
    for a in range(len(u)):
        for b in range(a + 1, len(u)):
            if _rat(u[a]) * _rat(v[b]) - _rat(u[b]) * _rat(v[a]):
                return False
    return True


__all__ = [
    "EndpointMap",
    "FocalComponent",
    "FocalOutput",
    "ImageDegree",
    "Implicitization",
    "Ramification",
    "affine_span_equations",
    "ambient_names",
    "endpoint_map",
    "eliminate_parameters",
    "evolute",
    "factored_str",
    "fiber_sphere_check",
    "focal_locus",
    "image_degree",
    "implicitize_image",
    "ramification_poly",
    "rotation_surface_focal",
    "sample_points",
]
