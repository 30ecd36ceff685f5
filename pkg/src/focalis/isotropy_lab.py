"""Isotropic curves, isotropic developables and degeneracy checkers.

Isotropic rational curves come from a pair of polynomials ``(f0, f1)``:
their derivative ``(f0^2 + f1^2, i f1^2 - i f0^2, -2i f0 f1)`` parametrizes
the conic at infinity, so its antiderivative has isotropic tangents.
"""

from dataclasses import dataclass, field

from ._util import normalized, points_on_hypersurface, rat, sample_values, simp, subs_any
from .algebra.gaussian import I, ONE, ZERO, coerce
from .algebra.linalg import rank, solve
from .algebra.parse import parse_expression
from .algebra.poly import Polynomial, divides
from .algebra.rational import RationalFunction
from .algebra.vectors import are_parallel, minors_2x2
from .errors import PreconditionError, UnsupportedError
from .euclid import QuadraticSpace, normal_field
from .focal import ambient_names, evolute
from .inverse import SigmaData
from .variety import ImplicitHypersurface, ParametricVariety


def _poly(x, var):
    if isinstance(x, str):
        x = parse_expression(x, (var,))
    if isinstance(x, RationalFunction):
        if not x.is_polynomial():
            raise PreconditionError("f0 and f1 must be polynomials")
        x = x.as_polynomial()
    if not isinstance(x, Polynomial):
        x = Polynomial.constant(coerce(x), (var,))
    extra = set(x.free_variables()) - {var}
    if extra:
        raise PreconditionError(f"f0 and f1 may only involve {var!r}, found {sorted(extra)}")
    return x.with_variables((var,) + tuple(v for v in x.variables if v != var)).trim() if x.variables else x


def integrate(p, var):
    """Antiderivative in ``var`` with zero constant term."""
    p = p if var in p.variables else p.with_variables((var,) + p.variables)
    k = p.variables.index(var)
    terms = {}
    for e, c in p.terms.items():
        n = e[k] + 1
        ne = e[:k] + (n,) + e[k + 1:]
        terms[ne] = c / n
    return Polynomial(p.variables, terms)


@dataclass
class IsotropicCurve:
    alpha: ParametricVariety
    f0: Polynomial
    f1: Polynomial
    derivative: tuple

    @property
    def param(self):
        return self.alpha.params[0]

    def translate(self, v):
        """The curve moved by a constant vector."""
        coords = [rat(c) + rat(coerce(x)) for c, x in zip(self.alpha.coords, v)]
        return IsotropicCurve(ParametricVariety(coords, self.alpha.params), self.f0, self.f1, self.derivative)


def isotropic_curve(f0, f1, var="t"):
    """Isotropic rational space curve generated by ``(f0, f1)`` (integration constants 0)."""
    f0, f1 = _poly(f0, var), _poly(f1, var)
    if not f0 and not f1:
        raise PreconditionError("(f0, f1) must not both vanish")
    ring = (var,)
    f0 = f0.with_variables(ring) if f0.variables else Polynomial.constant(f0.constant_value(), ring)
    f1 = f1.with_variables(ring) if f1.variables else Polynomial.constant(f1.constant_value(), ring)
    d = (f0 * f0 + f1 * f1, f1 * f1 * I - f0 * f0 * I, f0 * f1 * (I * -2))
    alpha = ParametricVariety([integrate(c, var) for c in d], (var,))
    return IsotropicCurve(alpha, f0, f1, d)


def isotropy_equation_check(curve, Q=None):
    """Equation (E): sum over i of (s_i' s_0 - s_0' s_i)^2 vanishes identically."""
    if curve.flavor != "homogeneous" or len(curve.coords) != 4 or curve.dim != 1:
        raise PreconditionError("need four homogeneous coordinate functions of one parameter")
    t = curve.params[0]
    s = [rat(c) for c in curve.coords]
    ds = [c.diff(t) for c in s]
    w = [ds[k] * s[0] - ds[0] * s[k] for k in (1, 2, 3)]
    Q = Q or QuadraticSpace.standard(3)
    return not rat(Q.dot(w, w))


def homogeneous_lift(curve):
    """``(1, s1, s2, s3)`` for an affine space curve."""
    X = curve.alpha if isinstance(curve, IsotropicCurve) else curve
    return ParametricVariety([1] + list(X.coords), X.params, "homogeneous")


def is_polynomial_in_power(p, var, k):
    """True iff every exponent of ``var`` in ``p`` is divisible by ``k``."""
    p = rat(p)
    if not p.is_polynomial():
        return False
    p = p.as_polynomial()
    if var not in p.variables:
        return True
    idx = p.variables.index(var)
    return all(e[idx] % k == 0 for e in p.terms)


def primitivity_check(curve, k):
    """Components that are not polynomials in ``t^k`` (True means not a polynomial in t^k)."""
    t = curve.param
    return [not is_polynomial_in_power(c, t, k) for c in curve.alpha.coords]


# --- tangential developables -------------------------------------------------------

@dataclass
class TangentialDevelopable:
    surface: ParametricVariety
    curve: object
    degenerate: bool = False
    notes: list = field(default_factory=list)


def _is_isotropic_curve(X, Q):
    t = X.params[0]
    d = [rat(c).diff(t) for c in X.coords]
    return not rat(Q.dot(d, d))


def tangential_developable(curve, ruling="u", Q=None):
    """``x(s, u) = alpha(s) + u alpha'(s)`` for an isotropic curve ``alpha``."""
    X = curve.alpha if isinstance(curve, IsotropicCurve) else curve
    if X.dim != 1:
        raise PreconditionError("need a curve with one parameter")
    Q = Q or QuadraticSpace.standard(X.ambient_dim)
    t = X.params[0]
    if ruling == t:
        raise PreconditionError("ruling parameter name clashes with the curve parameter")
    if not _is_isotropic_curve(X, Q):
        raise PreconditionError("curve is not isotropic; non-isotropic developables reduce to planes")
    d1 = [rat(c).diff(t) for c in X.coords]
    if all(not c for c in d1):
        raise PreconditionError("alpha' vanishes identically")
    u = rat(Polynomial.var(ruling, (ruling,)))
    surface = ParametricVariety([rat(c) + u * dc for c, dc in zip(X.coords, d1)], (t, ruling))
    out = TangentialDevelopable(surface, curve)
    d2 = [dc.diff(t) for dc in d1]
    if are_parallel(d1, d2):
        out.degenerate = True
        out.notes.append("alpha is a line: the tangential surface collapses onto it")
    return out


# --- Theorem 4 -----------------------------------------------------------------

@dataclass
class CheckReport:
    ok: bool
    conditions: dict
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok

    @property
    def failed(self):
        return [k for k, v in self.conditions.items() if not v]


def theorem4_check(X, Q=None, ruling=None):
    """Isotropic developability: (a) isotropic normal, (b) normal lines in X, (c) constant tangent space.

    Implicit hypersurfaces are decided exactly by divisibility by the
    squarefree equation. Parametrized surfaces need a ruling parameter in
    the normal direction (found automatically or passed as ``ruling``).
    """
    if isinstance(X, ImplicitHypersurface):
        return _theorem4_implicit(X, Q)
    if not isinstance(X, ParametricVariety) or X.dim != X.ambient_dim - 1:
        raise UnsupportedError("theorem4_check needs a hypersurface")
    Q = Q or QuadraticSpace.standard(X.ambient_dim)
    n = normal_field(X, Q)
    cond = {"a": not rat(Q.dot(n, n))}
    if not cond["a"]:
        return CheckReport(False, cond, ["normal field is not isotropic"])
    tangents = dict(zip(X.params, X.tangent_vectors()))
    candidates = [ruling] if ruling else list(X.params)
    found = None
    for p in candidates:
        if p not in tangents:
            raise PreconditionError(f"unknown ruling parameter {p!r}")
        v = tangents[p]
        if any(rat(c) for c in v) and are_parallel(v, n):
            found = p
            break
    if found is None:
        raise UnsupportedError("no ruling in the normal direction can be derived from the parametrization")
    second = [rat(c).diff(found) for c in tangents[found]]
    # straight ruling with direction parallel to the normal
    cond["b"] = all(not c for c in second) or are_parallel(second, tangents[found])
    dn = [rat(c).diff(found) for c in n]
    cond["c"] = all(not c for c in dn) or are_parallel(dn, n)
    return CheckReport(all(cond.values()), cond, [f"ruling parameter {found}"])


def _theorem4_implicit(X, Q):
    m = X.ambient_dim
    Q = Q or QuadraticSpace.standard(m)
    F = X.F
    grad = Q.raise_index(X.gradient())
    nn = Q.dot(grad, grad)
    nn = nn if isinstance(nn, Polynomial) else Polynomial.constant(coerce(nn), F.variables)
    cond = {"a": divides(F, nn.with_variables(F.variables))}
    lam = "l" if "l" not in F.variables else "l_"
    ring = F.variables + (lam,)
    L = Polynomial.var(lam, ring)
    moved = {c: Polynomial.var(c, ring) + L * g.with_variables(ring) for c, g in zip(X.coords, grad)}
    G = F.with_variables(ring).subs(moved)
    Fr = F.with_variables(ring)
    cond["b"] = all(divides(Fr, c.with_variables(ring)) for c in G.coeffs(lam).values()) if G else True
    moved_grad = [g.with_variables(ring).subs(moved) for g in grad]
    minors = minors_2x2([g.with_variables(ring) for g in grad], moved_grad)
    cond["c"] = all(not m_ or divides(Fr, m_.numerator if isinstance(m_, RationalFunction) else m_) for m_ in minors)
    return CheckReport(all(cond.values()), cond, ["decided by divisibility by the defining equation"])


def cone_over_quadric(vertex, Q=None, coords=None):
    """The cone ``<x - v, x - v> = 0`` over the quadric at infinity with affine vertex ``v``."""
    m = len(vertex)
    Q = Q or QuadraticSpace.standard(m)
    coords = tuple(coords) if coords else ambient_names(m)
    X = [Polynomial.var(c, coords) for c in coords]
    d = [x - coerce(v) for x, v in zip(X, vertex)]
    return ImplicitHypersurface(Q.dot(d, d), coords)


# --- Theorem 5 -----------------------------------------------------------------

def theorem5_check(S, Q=None):
    """Conditions 1, 2.1 and 2.2 for a standard-mode datum, evaluated at generic ``s``."""
    if S.mode != "standard":
        raise PreconditionError("theorem5_check needs a standard-mode SigmaData")
    from .algebra.linalg import nullspace

    O = S.vector()
    m = len(O)
    Q = Q or QuadraticSpace.standard(m)
    T = S.tangent()
    cond = {}
    notes = []
    ann = nullspace([Q.lower(t) for t in T], m) if T else [[ONE if i == j else ZERO for i in range(m)] for j in range(m)]
    iso = all(not simp(rat(Q.dot(a, b))) for a in ann for b in ann)
    cond["1"] = iso
    if not iso:
        notes.append("annihilator of the tangent space is not totally isotropic")
    # 2.1: dr = Q(xi) restricted to T for some xi in T
    dr = [S.r.diff(p) for p in S.params]
    gram = [[simp(rat(Q.dot(a, b))) for b in T] for a in T]
    if T:
        coeffs, kernel = solve(gram, [simp(d) for d in dr])
    else:
        coeffs, kernel = [], []
    cond["2.1"] = coeffs is not None
    xi = None
    if coeffs is None:
        notes.append("dr is not in the image of the tangent space under the form")
        cond["2.2"] = False
    else:
        xi = [ZERO] * m
        for c, t in zip(coeffs, T):
            xi = [simp(rat(x) + rat(c) * rat(tv)) for x, tv in zip(xi, t)]
        value = simp(rat(Q.dot(xi, xi)) / 4)
        cond["2.2"] = not simp(rat(value) - S.r)
        if not cond["2.2"]:
            notes.append(f"1/4 <xi, xi> = {value} differs from r = {simp(S.r)}")
        # well-definedness: shifting xi by kernel directions must not change <xi, xi>
        for kv in kernel:
            shift = [ZERO] * m
            for c, t in zip(kv, T):
                shift = [simp(rat(x) + rat(c) * rat(tv)) for x, tv in zip(shift, t)]
            moved = [simp(rat(a) + rat(b)) for a, b in zip(xi, shift)]
            if simp(rat(Q.dot(moved, moved)) - rat(Q.dot(xi, xi))):
                notes.append("<xi, xi> depends on the choice of xi")
                cond["2.2"] = False
    rep = CheckReport(all(cond.values()), cond, notes)
    rep.xi = xi
    return rep


# --- product construction ------------------------------------------------------------

@dataclass
class ProductVariety:
    """``M x W`` in the orthogonal direct sum; factors may be parametrized or implicit."""

    M: object
    W: object
    coords: tuple
    split: int
    equations: list
    Q: QuadraticSpace = None

    def normal_frame(self):
        """Gradient frame: block vectors ``(grad F_M, 0)`` and ``(0, grad F_W)``."""
        return [[simp(rat(e.diff(c))) if c in e.variables else ZERO for c in self.coords] for e in self.equations]

    def endpoint(self, point, lams):
        """Endpoint of ``point + sum lam_k * grad_k`` at an exact point."""
        vals = dict(zip(self.coords, point))
        frame = [[subs_any(g, vals) for g in vec] for vec in self.normal_frame()]
        out = list(point)
        for lam, vec in zip(lams, frame):
            out = [o + coerce(lam) * v for o, v in zip(out, vec)]
        return tuple(out)


def _implicit_of(F, prefix_coords):
    if isinstance(F, ImplicitHypersurface):
        return [F.F], F.coords
    if isinstance(F, ParametricVariety):
        from .focal import implicitize_image

        names = ambient_names(F.ambient_dim)
        return implicitize_image(F, names).equations, names
    if isinstance(F, (list, tuple)):
        eqs = [parse_expression(e) if isinstance(e, str) else e for e in F]
        names = tuple(sorted({v for e in eqs for v in e.free_variables()}))
        return eqs, names
    raise PreconditionError("factor must be an implicit hypersurface, an equation list or a parametrization")


def product_construction(M, W, p=None, q=None):
    """Joined equations of ``M x W`` in coordinates ``x1..x(p+q)``."""
    eqM, cM = _implicit_of(M, None)
    eqW, cW = _implicit_of(W, None)
    p = p or len(cM)
    q = q or len(cW)
    coords = tuple(f"x{k}" for k in range(1, p + q + 1))
    ren_M = {c: Polynomial.var(n, coords) for c, n in zip(cM, coords[:p])}
    ren_W = {c: Polynomial.var(n, coords) for c, n in zip(cW, coords[p:])}
    eqs = []
    for e in eqM:
        eqs.append(normalized(e.subs({k: v for k, v in ren_M.items() if k in e.variables})).with_variables(coords))
    for e in eqW:
        eqs.append(normalized(e.subs({k: v for k, v in ren_W.items() if k in e.variables})).with_variables(coords))
    return ProductVariety(M, W, coords, p, eqs, QuadraticSpace.standard(p + q))


def product_endpoint_samples(prod, count=20):
    """Compare the product endpoint map with the factor endpoint maps at exact sample points.

    Returns the list of ``(point, lams, product_value, factor_value)``;
    all pairs agree exactly when the endpoint map factors.
    """
    if len(prod.equations) != 2:
        raise UnsupportedError("endpoint comparison needs one equation per factor")
    eM, eW = prod.equations
    cM, cW = prod.coords[: prod.split], prod.coords[prod.split:]
    ptsM = points_on_hypersurface(eM.with_variables(cM).trim().with_variables(cM), cM, count)
    ptsW = points_on_hypersurface(eW.with_variables(cW).trim().with_variables(cW), cW, count)
    if not ptsM or not ptsW:
        raise PreconditionError("could not sample exact points on the factors")
    grid = sample_values()
    out = []
    for k in range(count):
        x = ptsM[k % len(ptsM)]
        y = ptsW[(3 * k + 1) % len(ptsW)]
        lam, mu = grid[(k + 1) % len(grid)], grid[(2 * k + 3) % len(grid)]
        full = prod.endpoint(x + y, (lam, mu))
        gM = [subs_any(eM.diff(c), dict(zip(cM, x))) for c in cM]
        gW = [subs_any(eW.diff(c), dict(zip(cW, y))) for c in cW]
        fac = tuple(a + lam * g for a, g in zip(x, gM)) + tuple(b + mu * g for b, g in zip(y, gW))
        out.append((x + y, (lam, mu), full, fac))
    return out


@dataclass
class ProductFocalSample:
    params: tuple
    product_point: tuple
    factor_points: tuple
    corank: int


def product_focal_samples(M, W, count=20):
    """Doubly focal points of ``M x W`` for parametrized plane curves.

    At sampled parameters the endpoint differential of the product is
    evaluated at the factor focal parameters; the corank is 2 exactly at the
    product of the factor focal points.
    """
    if M.ambient_dim != 2 or W.ambient_dim != 2:
        raise UnsupportedError("product focal sampling is implemented for pairs of plane curves")
    eM, eW = evolute(M), evolute(W)
    bM = [c for c in eM.components if not c.vertical and c.lam is not None]
    bW = [c for c in eW.components if not c.vertical and c.lam is not None]
    if not bM or not bW:
        raise PreconditionError("both factors need a rational focal branch")
    nM, nW = normal_field(M), normal_field(W)
    t, u = M.params[0], W.params[0]
    grid = sample_values()
    out = []
    k = 0
    while len(out) < count and k < 4 * count:
        tv, uv = grid[(k + 1) % len(grid)], grid[(2 * k + 2) % len(grid)]
        k += 1
        try:
            lam = subs_any(bM[0].lam, {t: tv})
            mu = subs_any(bW[0].lam, {u: uv})
            x = [subs_any(c, {t: tv}) for c in M.coords]
            y = [subs_any(c, {u: uv}) for c in W.coords]
            n1 = [subs_any(c, {t: tv}) for c in nM]
            n2 = [subs_any(c, {u: uv}) for c in nW]
            dx = [subs_any(rat(c).diff(t), {t: tv}) for c in M.coords]
            dy = [subs_any(rat(c).diff(u), {u: uv}) for c in W.coords]
            dn1 = [subs_any(rat(c).diff(t), {t: tv}) for c in nM]
            dn2 = [subs_any(rat(c).diff(u), {u: uv}) for c in nW]
            fM = [simp(x) for x in bM[0].parametrization.at([tv])]
            fW = [simp(x) for x in bW[0].parametrization.at([uv])]
        except ZeroDivisionError:
            continue
        point = tuple(a + lam * b for a, b in zip(x, n1)) + tuple(a + mu * b for a, b in zip(y, n2))
        zero2 = [ZERO, ZERO]
        jac = [
            [a + lam * b for a, b in zip(dx, dn1)] + zero2,
            zero2 + [a + mu * b for a, b in zip(dy, dn2)],
            list(n1) + zero2,
            zero2 + list(n2),
        ]
        corank = 4 - rank(jac)
        out.append(ProductFocalSample((tv, uv), point, tuple(fM) + tuple(fW), corank))
    return out


# --- Example 12 frame -------------------------------------------------------------

@dataclass
class FrameCheck:
    ok: bool
    surface: ParametricVariety
    frame: list
    checked: int
    notes: list = field(default_factory=list)

    def __bool__(self):
        return self.ok


def example12_frame(alpha, beta, names=("s", "v", "t"), samples=5):
    """Divisor ``tau = t`` in the product of two isotropic tangential developables.

    Builds ``(alpha(s) + t alpha'(s), beta(v) + t beta'(v))`` in C^6 and the
    three normal vectors ``(alpha', 0)``, ``(0, beta')`` and
    ``(-B (alpha'' + t alpha'''), A (beta'' + t beta'''))`` with
    ``A = <alpha''', alpha'>``, ``B = <beta''', beta'>``. Requires constant
    ``<alpha'', alpha''>`` and ``<beta'', beta''>``.
    """
    s, v, t = names
    a = alpha.alpha if isinstance(alpha, IsotropicCurve) else alpha
    b = beta.alpha if isinstance(beta, IsotropicCurve) else beta
    a = a.substitute({a.params[0]: Polynomial.var(s, (s,))}, (s,))
    b = b.substitute({b.params[0]: Polynomial.var(v, (v,))}, (v,))
    Q3 = QuadraticSpace.standard(3)

    def derivs(X, p):
        d1 = [rat(c).diff(p) for c in X.coords]
        d2 = [c.diff(p) for c in d1]
        d3 = [c.diff(p) for c in d2]
        return d1, d2, d3

    a1, a2, a3 = derivs(a, s)
    b1, b2, b3 = derivs(b, v)
    for name, d1, d2, p in (("alpha", a1, a2, s), ("beta", b1, b2, v)):
        if rat(Q3.dot(d1, d1)):
            raise PreconditionError(f"{name} is not isotropic")
        g = rat(Q3.dot(d2, d2))
        if g.diff(p):
            raise PreconditionError(f"<{name}'', {name}''> is not constant")
    T = rat(Polynomial.var(t, (t,)))
    surface = ParametricVariety(
        [rat(c) + T * d for c, d in zip(a.coords, a1)] + [rat(c) + T * d for c, d in zip(b.coords, b1)],
        (s, v, t),
    )
    A = rat(Q3.dot(a3, a1))
    B = rat(Q3.dot(b3, b1))
    zero = [rat(0)] * 3
    n1 = a1 + zero
    n2 = zero + b1
    n3 = [-B * (x + T * y) for x, y in zip(a2, a3)] + [A * (x + T * y) for x, y in zip(b2, b3)]
    frame = [n1, n2, n3]
    Q6 = QuadraticSpace.standard(6)
    notes = []
    for vec in frame:
        for tv in surface.tangent_vectors():
            if rat(Q6.dot(vec, tv)):
                return FrameCheck(False, surface, frame, 0, ["frame vector not orthogonal to the tangent space"])
    grid = sample_values()
    checked = 0
    for k in range(samples * 4):
        if checked >= samples:
            break
        vals = {s: grid[(k + 1) % len(grid)], v: grid[(k + 4) % len(grid)], t: grid[(k + 7) % len(grid)]}
        fr = [[subs_any(c, vals) for c in vec] for vec in frame]
        tg = [[subs_any(c, vals) for c in vec] for vec in surface.tangent_vectors()]
        if rank(tg) < 3:
            continue
        if rank(fr) < 3:
            notes.append(f"frame degenerate at {vals}")
            continue
        checked += 1
    return FrameCheck(checked > 0, surface, frame, checked, notes)


__all__ = [
    "IsotropicCurve",
    "TangentialDevelopable",
    "CheckReport",
    "ProductVariety",
    "ProductFocalSample",
    "FrameCheck",
    "integrate",
    "isotropic_curve",
    "isotropy_equation_check",
    "homogeneous_lift",
    "is_polynomial_in_power",
    "primitivity_check",
    "tangential_developable",
    "theorem4_check",
    "cone_over_quadric",
    "theorem5_check",
    "product_construction",
    "product_endpoint_samples",
    "product_focal_samples",
    "example12_frame",
]
