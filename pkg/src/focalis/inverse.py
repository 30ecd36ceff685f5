"""Inverse focal constructions.

Given a candidate focal variety ``Sigma`` parametrized by ``O(s)`` and a
radius-squared function ``r(s)``, rebuild the variety whose normal spheres
are centred on ``Sigma``:

* standard mode: ``<x - O, x - O> = r`` together with
  ``dr/ds_j + 2 <x - O, dO/ds_j> = 0``;
* asymptotic mode (``Sigma`` at infinity, homogeneous lift ``O = (0, O')``):
  ``<x, O'> = r x0`` and ``<x, dO'/ds_j> = dr/ds_j x0``;
* isotropic projective mode: ``<O', x> = r`` and ``<dO'/ds_j, x> = dr/ds_j / 2``
  inside the hyperplane at infinity.
"""

from dataclasses import dataclass, field
from itertools import product

from ._util import (
    const,
    is_const,
    normalized,
    poly_in,
    rat,
    sample_values,
    simp,
    solve_univariate_low,
    subs_any,
)
from .algebra.gaussian import ZERO, coerce
from .algebra.gcd import gcd, normalize, squarefree_factors, squarefree_part
from .algebra.linalg import rank, rref, solve
from .algebra.parse import parse_expression
from .algebra.poly import Polynomial, exquo
from .algebra.rational import RationalFunction
from .algebra.resultant import resultant
from .errors import ConsistencyError, PreconditionError, UnsupportedError
from .euclid import QuadraticSpace, normal_field
from .focal import ambient_names, eliminate_parameters
from .variety import ParametricVariety

MODES = ("standard", "asymptotic", "isotropic_projective")

_FIBER_NAMES = ("w1", "w2", "w3", "w4", "w5", "w6")


def _parse_r(r, params):
    if isinstance(r, (list, tuple)):
        if len(r) == 1:
            r = r[0]
        else:
            raise UnsupportedError("multivalued r (several branches) is not supported", "MULTIVALUED_R")
    if isinstance(r, str):
        text = r.replace(" ", "")
        if "sqrt" in text or "^(1/" in text or "^(-1/" in text:
            raise UnsupportedError("multivalued r (fractional power) is not supported", "MULTIVALUED_R")
        return parse_expression(r, params)
    return r


class SigmaData:
    """A focal candidate ``Sigma`` (via ``O``) with its radius-squared section ``r``."""

    def __init__(self, O, r, mode="standard"):
        if mode not in MODES:
            raise PreconditionError(f"unknown mode {mode!r}; expected one of {MODES}")
        if not isinstance(O, ParametricVariety):
            raise PreconditionError("O must be a ParametricVariety")
        if mode == "standard" and O.flavor != "affine":
            raise PreconditionError("standard mode needs affine O")
        if mode != "standard":
            if O.flavor != "homogeneous":
                raise PreconditionError(f"{mode} mode needs a homogeneous lift of O")
            if O.coords[0]:
                raise PreconditionError(
                    "affine-chart coordinate of O must vanish identically (Sigma at infinity)"
                )
        if O.dim > 2:
            raise UnsupportedError("Sigma of dimension above 2 is not supported")
        self.O = O
        self.r = rat(_parse_r(r, O.params))
        self.mode = mode
        stray = set(self.r.free_variables()) & set(ambient_names(O.ambient_dim))
        if stray:
            raise PreconditionError(f"r uses coordinate names {sorted(stray)}")

    @classmethod
    def parse(cls, O, r, params, mode="standard"):
        flavor = "affine" if mode == "standard" else "homogeneous"
        return cls(ParametricVariety.parse(O, params, flavor), r, mode)

    @property
    def params(self):
        return self.O.params

    @property
    def dim(self):
        return self.O.dim

    def vector(self):
        """Coordinates of ``O`` in V (affine) or V' (homogeneous lift without the chart slot)."""
        return list(self.O.coords if self.mode == "standard" else self.O.coords[1:])

    def tangent(self):
        v = self.vector()
        return [[simp(rat(c).diff(p)) for c in v] for p in self.params]

    def constants(self):
        names = set()
        for c in list(self.O.coords) + [self.r]:
            if isinstance(c, (Polynomial, RationalFunction)):
                names |= set(c.free_variables())
        return tuple(sorted(names - set(self.params)))

    def rescale(self, mu):
        """Rescale a homogeneous lift: ``O -> mu O`` and ``r -> mu r``."""
        if self.mode == "standard":
            raise PreconditionError("rescaling applies to homogeneous lifts only")
        mu = rat(mu)
        O = ParametricVariety([rat(c) * mu for c in self.O.coords], self.params, "homogeneous")
        return SigmaData(O, self.r * mu, self.mode)

    def __repr__(self):
        return f"SigmaData(O={self.O}, r={self.r}, mode={self.mode!r})"


@dataclass
class ConstructionResult:
    mode: str
    coords: tuple
    params: tuple
    system: list
    eliminant: Polynomial = None
    equations: list = field(default_factory=list)
    codimension: int = None
    fibers_are_affine_spaces: bool = False
    admissible: bool = True
    reason: str = ""
    forced_R: object = None
    samples: list = field(default_factory=list)
    specialization: dict = field(default_factory=dict)
    parametrization: ParametricVariety = None
    notes: list = field(default_factory=list)

    @property
    def is_hypersurface(self):
        return self.eliminant is not None


# --- shared pieces --------------------------------------------------------------

def _check_names(S, coords):
    clash = set(coords) & (set(S.params) | set(S.constants()))
    if clash:
        raise PreconditionError(f"names {sorted(clash)} used both as parameters/constants and coordinates")


def _check_rank(vectors, expected, message):
    if expected and rank(vectors) < expected:
        raise PreconditionError(message)


def _specialization(S):
    """Values for symbolic constants, used only by sampling (squares keep sphere points rational)."""
    values = [25, 169, 289, 841, 1369]
    return {c: values[k % len(values)] for k, c in enumerate(S.constants())}


def _fiber(A, b, names):
    """Solve ``A x = b`` over the parameter field; return (x0, basis) or None."""
    x0, basis = solve(A, b)
    if x0 is None:
        return None
    return [simp(rat(v)) for v in x0], [[simp(rat(v)) for v in vec] for vec in basis]


def _fiber_point(x0, basis, tnames):
    pt = []
    for k, base in enumerate(x0):
        e = rat(base)
        for name, vec in zip(tnames, basis):
            if vec[k]:
                e = e + rat(vec[k]) * rat(Polynomial.var(name, (name,)))
        pt.append(e)
    return pt


def _fresh(n, taken):
    out = []
    for name in _FIBER_NAMES:
        if name not in taken:
            out.append(name)
        if len(out) == n:
            return tuple(out)
    raise PreconditionError("ran out of fiber coordinate names")


_eliminate = eliminate_parameters


def _split_by(pieces, splitters):
    out = []
    for q in pieces:
        stack = [q]
        for s in splitters:
            nxt = []
            for f in stack:
                g = gcd(f, s.with_variables(f.variables + tuple(v for v in s.variables if v not in f.variables)))
                if not g.is_constant() and g.total_degree() < f.total_degree():
                    nxt.extend([normalize(g), normalize(exquo(f, g))])
                else:
                    nxt.append(f)
            stack = nxt
        out.extend(stack)
    return out


def _vanishes(poly, point, spec):
    vals = dict(spec)
    vals.update(point)
    return not subs_any(poly, vals)


def _filter_equation(E, coords, samples, spec, spurious, notes):
    """Keep the squarefree factors of ``E`` that vanish at every sampled solution."""
    pieces = [f for f, _ in squarefree_factors(E)] if not E.is_constant() else []
    pieces = _split_by(pieces, spurious)
    if not samples:
        notes.append("no exact samples available; eliminant factors were not filtered")
        kept = pieces
    else:
        kept = [f for f in pieces if all(_vanishes(f, dict(zip(coords, x)), spec) for _, x in samples)]
    if not kept:
        return None
    out = kept[0]
    for f in kept[1:]:
        out = out * f
    return normalized(out).trim()


def _canonical_system(eqs, coords):
    """Linear equations in echelon form first, then the others by (degree, text)."""
    lin = [e for e in eqs if e.total_degree() == 1]
    other = [e for e in eqs if e.total_degree() > 1]
    out = []
    if lin:
        ring = tuple(coords)
        rows = []
        for e in lin:
            p = poly_in(e, ring)
            row = [p.coeffs(c).get(1, Polynomial.constant(ZERO, p.variables)) for c in ring]
            row = [const(x) if is_const(x) else x for x in row]
            cst = p
            for c in ring:
                cst = cst.subs({c: 0}) if c in cst.variables else cst
            row.append(cst)
            rows.append(row)
        try:
            ech, piv = rref(rows)
            X = [Polynomial.var(c, ring) for c in ring]
            for r in ech[: len(piv)]:
                e = rat(r[-1])
                for coef, xv in zip(r[:-1], X):
                    if coef:
                        e = e + rat(coef) * rat(xv)
                out.append(normalized(e))
        except TypeError:
            out.extend(normalized(e) for e in lin)
    for e in sorted(other, key=lambda e: (e.total_degree(), str(e))):
        if e not in out:
            out.append(e)
    return out


def _finish(result, eqs, spurious, coords):
    """Filter eliminated equations and decide hypersurface versus system."""
    final = []
    for E in eqs:
        if not E or E.is_constant():
            continue
        F = _filter_equation(E, coords, result.samples, result.specialization, spurious, result.notes)
        if F is None:
            raise ConsistencyError(f"eliminant {E} has no factor vanishing on the sampled solutions")
        if not F.is_constant() and F not in final:
            final.append(F)
    if not final:
        result.notes.append("elimination produced no equation: the construction fills the ambient space")
        result.codimension = 0
        return result
    final = _canonical_system(final, coords)
    result.equations = final
    if len(final) == 1:
        result.eliminant = final[0]
        result.codimension = 1
    else:
        result.codimension = len(final)
        result.notes.append(f"output has codimension {len(final)}; returned as an equation system")
    return result


# --- standard mode -------------------------------------------------------------

def inverse_construction(S, Q=None, coords=None, eliminate=True, samples=6):
    """Inverse construction to focal degeneracy (standard mode)."""
    if S.mode != "standard":
        raise PreconditionError("inverse_construction needs a standard-mode SigmaData")
    O = S.vector()
    m = len(O)
    Q = Q or QuadraticSpace.standard(m)
    coords = tuple(coords) if coords else ambient_names(m)
    _check_names(S, coords)
    a = S.dim
    T = S.tangent()
    _check_rank(T, a, "O is constant in some parameter: Sigma does not have the declared dimension")
    ring = S.params + coords + S.constants()
    X = [rat(Polynomial.var(c, ring)) for c in coords]
    d = [x - rat(o) for x, o in zip(X, O)]
    sphere = rat(Q.dot(d, d)) - S.r
    linear = [S.r.diff(p) + rat(Q.dot(d, t)) * 2 for p, t in zip(S.params, T)]
    system = [normalized(e.numerator.with_variables(ring)) for e in [sphere] + linear]
    result = ConstructionResult("standard", coords, S.params, system)
    result.specialization = _specialization(S)

    # fiber over a generic s: A x = b with A rows 2 G dO/ds_j
    A = [[simp(rat(v) * 2) for v in Q.lower(t)] for t in T]
    b = [simp(rat(Q.dot(O, t)) * 2 - S.r.diff(p)) for p, t in zip(S.params, T)]
    if a:
        fib = _fiber(A, b, coords)
        if fib is None:
            raise PreconditionError("linear fiber equations are inconsistent at generic s")
        x0, basis = fib
    else:
        x0, basis = [rat(o) for o in O], [[1 if i == j else 0 for i in range(m)] for j in range(m)]
    tnames = _fresh(len(basis), set(ring))
    pt = _fiber_point(x0, basis, tnames)
    dd = [p - rat(o) for p, o in zip(pt, O)]
    q = rat(Q.dot(dd, dd)) - S.r
    depends = any(q.numerator.degree(t) > 0 for t in tnames if t in q.variables)
    if not q:
        result.fibers_are_affine_spaces = True
        result.reason = "sphere equation is implied by the linear equations: fibers are affine spaces"
        result.forced_R = simp(S.r)
    elif not depends:
        result.admissible = False
        result.forced_R = simp(q + S.r)
        result.reason = (
            f"fiber direction is totally isotropic and <x - O, x - O> = {result.forced_R} on the fiber, "
            f"which differs from r = {simp(S.r)}"
        )
    else:
        result.reason = "sphere meets the fiber in a proper quadric"
    _standard_samples(result, S, Q, samples)
    if not eliminate:
        return result
    if not result.admissible:
        result.notes.append("inadmissible datum: the construction does not dominate Sigma")
        return result

    # reduce the sphere modulo the linear equations, then eliminate s
    eqs = []
    if a:
        aug = [list(row) + [rhs] for row, rhs in zip(A, b)]
        ech, piv = rref(aug)
        sub = {}
        for row, pc in zip(ech, piv):
            if pc == m:
                raise PreconditionError("linear fiber equations are inconsistent at generic s")
            e = rat(X[pc]) - rat(row[m])
            rhs = rat(row[m])
            for k in range(m):
                if k != pc and row[k]:
                    e = e + rat(row[k]) * X[k]
                    rhs = rhs - rat(row[k]) * X[k]
            sub[coords[pc]] = rhs
            eqs.append(normalized(e.numerator.with_variables(ring)))
        red = sphere.subs({k: v for k, v in sub.items() if k in sphere.variables})
        red = rat(red)
        if red:
            eqs.append(normalized(red.numerator.with_variables(ring)))
    else:
        eqs.append(system[0])
    eqs, spurious = _eliminate(eqs, S.params)
    return _finish(result, eqs, spurious, coords)


def _param_points(S, count):
    grid = sample_values()
    if S.dim == 0:
        return [()]
    if S.dim == 1:
        return [(v,) for v in grid]
    return [pair for pair in product(grid[:10], repeat=2)]


def _standard_samples(result, S, Q, count):
    """Exact solutions ``(s, x)`` of the system at generic parameter values."""
    spec = result.specialization
    O = S.vector()
    m = len(O)
    grid = sample_values()
    tries = 0
    for svals in _param_points(S, count):
        if len(result.samples) >= count or tries > 200:
            break
        tries += 1
        vals = dict(zip(S.params, svals))
        vals.update(spec)
        try:
            Os = [subs_any(o, vals) for o in O]
            Ts = [[subs_any(c, vals) for c in t] for t in S.tangent()]
            r0 = subs_any(S.r, vals)
            dr = [subs_any(S.r.diff(p), vals) for p in S.params]
        except ZeroDivisionError:
            continue
        if not all(is_const(v) for v in Os + [r0] + dr) or any(not is_const(c) for t in Ts for c in t):
            continue
        if S.dim and rank(Ts) < S.dim:
            continue
        A = [[v * 2 for v in Q.lower(t)] for t in Ts]
        b = [Q.dot(Os, t) * 2 - drj for t, drj in zip(Ts, dr)]
        if S.dim:
            x0, basis = solve(A, b)
            if x0 is None:
                continue
        else:
            x0, basis = list(Os), [[1 if i == j else 0 for i in range(m)] for j in range(m)]
        shift = 2 * len(result.samples)
        point = _sample_fiber(x0, basis, Os, r0, Q, grid[shift:] + grid[:shift])
        if point is not None:
            result.samples.append((tuple(coerce(v) for v in svals), point))


def _sample_fiber(x0, basis, Os, r0, Q, grid):
    k = len(basis)
    names = _FIBER_NAMES[:k]
    ring = tuple(names)
    T = [Polynomial.var(n, ring) for n in names]
    pt = []
    for i, base in enumerate(x0):
        e = Polynomial.constant(coerce(base), ring)
        for tv, vec in zip(T, basis):
            if vec[i]:
                e = e + tv * vec[i]
        pt.append(e)
    d = [p - o for p, o in zip(pt, Os)]
    q = Q.dot(d, d) - r0
    q = q if isinstance(q, Polynomial) else Polynomial.constant(coerce(q), ring)
    if not q:
        vals = [grid[(j * 3 + 1) % len(grid)] for j in range(k)]
        return tuple(subs_any(p, dict(zip(names, vals))) for p in pt)
    if q.is_constant():
        return None
    solve_var = next((n for n in reversed(names) if q.degree(n) in (1, 2)), None)
    if solve_var is None:
        return None
    others = [n for n in names if n != solve_var]
    for vals in product(grid if len(others) == 1 else grid[:10], repeat=len(others)):
        g = q.subs(dict(zip(others, vals))) if others else q
        g = g if isinstance(g, Polynomial) else Polynomial.constant(coerce(g), ring)
        if g.is_constant():
            continue
        g = g.with_variables((solve_var,)) if set(g.free_variables()) <= {solve_var} else None
        if g is None:
            continue
        roots = solve_univariate_low(g, solve_var)
        if roots:
            assign = dict(zip(others, vals))
            assign[solve_var] = roots[0]
            return tuple(subs_any(p, assign) for p in pt)
    return None


def admissibility_check(S, Q=None):
    """(admissible, reason): inadmissible exactly in the isotropic fiber case with ``R != r``."""
    res = inverse_construction(S, Q, eliminate=False, samples=0)
    return res.admissible, res.reason


@dataclass
class ConsistencyReport:
    ok: bool
    checked: int
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def forward_consistency(result, S, Q=None):
    """At sampled solutions, ``x - O(s)`` is normal to the output (lies in the span of the gradients)."""
    if result.mode != "standard":
        raise PreconditionError("forward_consistency applies to standard-mode results")
    if not result.equations:
        return ConsistencyReport(False, 0, ["no equations to check"])
    m = len(result.coords)
    Q = Q or QuadraticSpace.standard(m)
    notes = []
    checked = 0
    if not result.samples:
        return ConsistencyReport(False, 0, ["no sampled solutions (degenerate fibers)"])
    spec = result.specialization
    for svals, x in result.samples:
        vals = dict(zip(S.params, svals))
        vals.update(spec)
        point = dict(zip(result.coords, x))
        point.update(spec)
        for E in result.equations:
            if subs_any(E, point):
                return ConsistencyReport(False, checked, [f"sample {x} does not satisfy {E}"])
        grads = []
        for E in result.equations:
            g = [subs_any(E.diff(c) if c in E.variables else 0, point) for c in result.coords]
            grads.append(Q.raise_index(g))
        grads = [g for g in grads if any(v for v in g)]
        if len(grads) < len(result.equations):
            notes.append(f"singular point {x} skipped")
            continue
        Os = [subs_any(o, vals) for o in S.vector()]
        v = [xi - oi for xi, oi in zip(x, Os)]
        if rank(grads + [v]) != rank(grads):
            return ConsistencyReport(False, checked, [f"x - O(s) not normal at {x}"])
        checked += 1
    if not checked:
        return ConsistencyReport(False, 0, notes + ["every sample was singular"])
    return ConsistencyReport(True, checked, notes)


# --- asymptotic mode --------------------------------------------------------------

def homogeneous_names(m):
    return tuple(f"x{k}" for k in range(m + 1))


def asymptotic_inverse(S, Q=None, samples=6):
    """Asymptotic inverse construction; the output lives in homogeneous coordinates ``x0..xm``."""
    if S.mode != "asymptotic":
        raise PreconditionError("asymptotic_inverse needs an asymptotic-mode SigmaData")
    Op = S.vector()
    m = len(Op)
    Q = Q or QuadraticSpace.standard(m)
    names = homogeneous_names(m)
    _check_names(S, names)
    a = S.dim
    T = S.tangent()
    if rank([Op] + T) < a + 1:
        raise PreconditionError("O and its derivatives are generically dependent: Sigma is not immersed")
    ring = S.params + names + S.constants()
    x0 = rat(Polynomial.var(names[0], ring))
    X = [rat(Polynomial.var(c, ring)) for c in names[1:]]
    eqs_r = [rat(Q.dot(X, Op)) - S.r * x0] + [rat(Q.dot(X, t)) - S.r.diff(p) * x0 for p, t in zip(S.params, T)]
    system = [normalized(e.numerator.with_variables(ring)) for e in eqs_r]
    result = ConstructionResult("asymptotic", names, S.params, system, fibers_are_affine_spaces=True)
    result.specialization = _specialization(S)
    result.reason = "fibers are the affine spaces X'_s"

    # fiber parametrization in the chart x0 = 1
    A = [Q.lower(Op)] + [Q.lower(t) for t in T]
    b = [S.r] + [S.r.diff(p) for p in S.params]
    fib = _fiber(A, b, names)
    if fib is None:
        raise PreconditionError("equations of X'_s are inconsistent")
    base, basis = fib
    tnames = _fresh(len(basis), set(ring))
    pt = _fiber_point(base, basis, tnames)
    result.parametrization = ParametricVariety(pt, S.params + tnames)
    # samples in the chart x0 = 1
    grid = sample_values()
    for svals in _param_points(S, samples):
        if len(result.samples) >= samples:
            break
        vals = dict(zip(S.params, svals))
        vals.update(result.specialization)
        tv = {t: grid[(3 * k + 2) % len(grid)] for k, t in enumerate(tnames)}
        vals.update(tv)
        try:
            x = [subs_any(c, vals) for c in pt]
        except ZeroDivisionError:
            continue
        if all(is_const(c) for c in x):
            result.samples.append((tuple(coerce(v) for v in svals), (coerce(1),) + tuple(const(c) for c in x)))
    eqs, spurious = _eliminate(system, S.params)
    spurious.append(Polynomial.var(names[0], ring))
    return _finish(result, eqs, spurious, names)


def dual_variety_equations(S, Q=None):
    """Equations of the dual of Sigma in P-infinity (coordinates ``x1..xm``).

    The dual cone is parametrized by the kernel of ``x -> (<x, O>, <x, dO/ds_j>)``
    over the parameter field and then implicitized.
    """
    from .algebra.linalg import nullspace
    from .focal import implicitize_image

    Op = S.vector()
    m = len(Op)
    Q = Q or QuadraticSpace.standard(m)
    names = homogeneous_names(m)[1:]
    rows = [Q.lower(v) for v in [Op] + S.tangent()]
    ker = nullspace(rows, m)
    tnames = _fresh(len(ker), set(S.params) | set(names))
    pt = _fiber_point([0] * m, ker, tnames)
    cone = ParametricVariety(pt, S.params + tnames)
    if cone.dim > 2:
        raise UnsupportedError("dual variety elimination supports at most two parameters")
    return implicitize_image(cone, names).equations


@dataclass
class DualReport:
    ok: bool
    at_infinity: list
    dual: list
    checked: int
    equal: bool
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def dual_at_infinity_check(result, S, Q=None, count=6):
    """Sampled points of the dual of Sigma lie on ``X_inf = {eliminant, x0 = 0}`` and pair to zero.

    The sampled dual points are solutions of ``<x, O(s)> = <x, dO/ds_j> = 0``;
    the check confirms both pairings and membership in ``X_inf``. ``equal``
    reports whether ``X_inf`` coincides with the dual as a set.
    """
    if result.mode != "asymptotic":
        raise PreconditionError("dual_at_infinity_check applies to asymptotic results")
    if result.eliminant is None:
        raise PreconditionError("dual_at_infinity_check needs an eliminant")
    Op = S.vector()
    m = len(Op)
    Q = Q or QuadraticSpace.standard(m)
    names = result.coords
    E = result.eliminant
    Einf = E.subs({names[0]: 0}) if names[0] in E.variables else E
    if not isinstance(Einf, Polynomial) or not Einf:
        return DualReport(False, [], [], 0, False, ["X is contained in the hyperplane at infinity"])
    spec = result.specialization
    checked = 0
    grid = sample_values()
    notes = []
    for svals in _param_points(S, count):
        if checked >= count:
            break
        vals = dict(zip(S.params, svals))
        vals.update(spec)
        try:
            rows = [[subs_any(c, vals) for c in Q.lower(v)] for v in [Op] + S.tangent()]
        except ZeroDivisionError:
            continue
        if not all(is_const(c) for row in rows for c in row):
            continue
        if rank(rows) < S.dim + 1:
            continue
        from .algebra.linalg import nullspace

        ker = nullspace(rows, m)
        for j, w in enumerate(ker):
            # a generic combination of the kernel vectors
            combo = list(w)
            for k, other in enumerate(ker):
                if k != j:
                    combo = [c + grid[(k + 3) % len(grid)] * o for c, o in zip(combo, other)]
            for v in [Op] + S.tangent():
                if subs_any(Q.dot(combo, v), vals):
                    return DualReport(False, [Einf], [], checked, False, [f"pairing fails at {combo}"])
            if subs_any(Einf, {**dict(zip(names[1:], combo)), **spec}):
                return DualReport(False, [Einf], [], checked, False, [f"dual point {combo} not on X_inf"])
            checked += 1
    dual = dual_variety_equations(S, Q)
    ring = names[1:]
    Einf_sq = normalized(squarefree_part(poly_in(Einf, ring))).trim()
    equal = len(dual) == 1 and (Einf_sq == dual[0] or Einf_sq == -dual[0])
    if not equal:
        notes.append("X_inf strictly contains the dual of Sigma (degenerate Sigma)")
    return DualReport(checked > 0, [Einf_sq], dual, checked, equal, notes)


def developability_check(result):
    """Tangent space of the union of fibers depends only on ``s`` (and is annihilated by ``O(s)``)."""
    X = result.parametrization
    if X is None:
        raise PreconditionError("no fiber parametrization available")
    if X.ambient_dim - 1 != X.dim:
        raise UnsupportedError("developability check needs a hypersurface union of fibers")
    n = normal_field(X)
    fiber_vars = X.params[len(result.params):]
    return all(c.degree(t) <= 0 for c in n if isinstance(c, Polynomial) for t in fiber_vars if t in c.variables)


def developability_identity(result, S, Q=None):
    """The normal of the union is proportional to ``O'(s)`` under the form."""
    from .algebra.vectors import are_parallel

    X = result.parametrization
    Q = Q or QuadraticSpace.standard(X.ambient_dim)
    n = normal_field(X, Q)
    return developability_check(result) and are_parallel(n, [rat(c) for c in S.vector()])


# --- isotropic projective mode ------------------------------------------------------

def isotropic_projective_inverse(S, Q=None):
    """Isotropic projective construction: ``X''_s`` from equations A' and B'."""
    if S.mode != "isotropic_projective":
        raise PreconditionError("isotropic_projective_inverse needs an isotropic_projective SigmaData")
    Op = S.vector()
    m = len(Op)
    Q = Q or QuadraticSpace.standard(m)
    names = homogeneous_names(m)[1:]
    _check_names(S, names)
    T = S.tangent()
    span = [Op] + T
    if rank(span) < S.dim + 1:
        raise PreconditionError("O and its derivatives are generically dependent")
    from .algebra.linalg import nullspace

    ann = nullspace([Q.lower(v) for v in span], m)
    ann = [[simp(rat(c)) for c in w] for w in ann]
    for i in range(len(ann)):
        for j in range(i, len(ann)):
            val = simp(rat(Q.dot(ann[i], ann[j])))
            if val:
                wi = "(" + ", ".join(str(c) for c in ann[i]) + ")"
                wj = "(" + ", ".join(str(c) for c in ann[j]) + ")"
                raise PreconditionError(
                    f"annihilator is not totally isotropic: <{wi}, {wj}> = {val}", "NOT_ISOTROPIC"
                )
    ring = S.params + names + S.constants()
    X = [rat(Polynomial.var(c, ring)) for c in names]
    half = rat(Polynomial.constant(coerce(1), ring)) / 2
    eqs = [rat(Q.dot(Op, X)) - S.r] + [rat(Q.dot(t, X)) - S.r.diff(p) * half for p, t in zip(S.params, T)]
    system = [normalized(e.numerator.with_variables(ring)) for e in eqs]
    result = ConstructionResult("isotropic_projective", names, S.params, system, fibers_are_affine_spaces=True)
    A = [Q.lower(v) for v in span]
    b = [S.r] + [S.r.diff(p) * half for p in S.params]
    fib = _fiber(A, b, names)
    if fib is None:
        result.admissible = False
        result.reason = "equations A' and B' are inconsistent"
        return result
    base, basis = fib
    tnames = _fresh(len(basis), set(ring))
    pt = _fiber_point(base, basis, tnames)
    result.parametrization = ParametricVariety(pt, S.params + tnames)
    q = rat(Q.dot(pt, pt))
    if any(q.numerator.degree(t) > 0 for t in tnames if t in q.variables):
        result.admissible = False
        result.reason = "<x, x> is not constant on the fiber X''_s"
        return result
    result.forced_R = simp(q)
    if simp(q - S.r):
        result.admissible = False
        result.reason = f"R(s) = {simp(q)} differs from r(s) = {simp(S.r)}"
    else:
        result.reason = f"admissible: R(s) = r(s) = {simp(S.r)}"
    moving = any(
        isinstance(c, (Polynomial, RationalFunction)) and p in c.variables and rat(c).diff(p)
        for c in list(base) + [v for vec in basis for v in vec]
        for p in S.params
    )
    if moving:
        result.notes.append("X''_s moves with s; the union is returned through its parametrization")
    else:
        from .focal import affine_span_equations

        result.equations = affine_span_equations(
            [const(c) for c in base], [[const(c) for c in vec] for vec in basis], names
        )
        result.notes.append("X''_s does not depend on s")
    return result


__all__ = [
    "MODES",
    "SigmaData",
    "ConstructionResult",
    "ConsistencyReport",
    "DualReport",
    "inverse_construction",
    "admissibility_check",
    "forward_consistency",
    "asymptotic_inverse",
    "dual_at_infinity_check",
    "dual_variety_equations",
    "developability_check",
    "developability_identity",
    "isotropic_projective_inverse",
    "homogeneous_names",
]
