"""Focal degree formulas via numeric Chow-ring arithmetic.

The base variety X (a curve or a surface in P^m) is represented by its
intersection numbers only. Classes on X are polynomials in ``H`` (hyperplane),
``K`` (canonical class) and ``C2`` (second Chern class of the tangent bundle,
weight two), truncated above dim X. The projective normal bundle adds the
relative hyperplane class ``h2`` subject to the Leray-Hirsch relation
``sum_i c_i(N(-1)) h2^(r-i) = 0`` with ``r = m - n + 1``.

All degrees returned are focal class numbers deg(Sigma) * deg(p restricted
to Y), i.e. counted with multiplicity and fiber degree, not set-theoretic
degrees of the focal locus.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .algebra.poly import Polynomial
from .errors import ConsistencyError, PreconditionError, UnsupportedError

_RING = ("h2", "H", "K", "C2")
_WEIGHTS = (0, 1, 1, 2)


@dataclass(frozen=True)
class CurveClassData:
    m: int
    d: int
    g: int

    def __post_init__(self):
        if self.m < 2:
            raise PreconditionError(f"ambient dimension must be at least 2, got {self.m}")
        if self.d < 1:
            raise PreconditionError(f"degree must be positive, got {self.d}")
        if self.g < 0:
            raise PreconditionError(f"genus must be nonnegative, got {self.g}")

    @classmethod
    def smooth_plane(cls, d):
        return cls(2, d, (d - 1) * (d - 2) // 2)

    def integrate(self, monomial):
        """Intersection number of a degree-one class given as exponents (H, K, C2)."""
        e_h, e_k, e_c = monomial
        if (e_h, e_k, e_c) == (1, 0, 0):
            return self.d
        if (e_h, e_k, e_c) == (0, 1, 0):
            return 2 * self.g - 2
        raise PreconditionError(f"no intersection number for {monomial} on a curve")


@dataclass(frozen=True)
class SurfaceClassData:
    """Intersection data of a surface. ``HK`` is H.K_S (= -H.c1(S))."""

    m: int
    d: int
    HK: int
    c1sq: int
    c2: int
    chi: int
    sect_genus: int

    def __post_init__(self):
        if self.m < 3:
            raise PreconditionError(f"a surface needs ambient dimension at least 3, got {self.m}")
        if self.d < 1:
            raise PreconditionError(f"degree must be positive, got {self.d}")
        if 12 * self.chi != self.c1sq + self.c2:
            raise PreconditionError(
                f"Noether formula fails: 12*chi = {12 * self.chi} but c1^2 + c2 = {self.c1sq + self.c2}"
            )
        if 2 * self.sect_genus - 2 != self.d + self.HK:
            raise PreconditionError(
                f"sectional genus relation fails: 2*pi - 2 = {2 * self.sect_genus - 2} "
                f"but d + H.K = {self.d + self.HK}"
            )

    @classmethod
    def from_numbers(cls, m, d, HK, c1sq, c2):
        """Derive chi and the sectional genus; they must come out integral."""
        chi = Fraction(c1sq + c2, 12)
        genus = Fraction(d + HK + 2, 2)
        if chi.denominator != 1:
            raise PreconditionError(f"Noether formula fails: (c1^2 + c2)/12 = {chi} is not an integer")
        if genus.denominator != 1:
            raise PreconditionError(
                f"sectional genus relation fails: (d + H.K)/2 + 1 = {genus} is not an integer"
            )
        return cls(m, d, HK, c1sq, c2, int(chi), int(genus))

    @property
    def Hc1(self):
        return -self.HK

    def integrate(self, monomial):
        table = {
            (2, 0, 0): self.d,
            (1, 1, 0): self.HK,
            (0, 2, 0): self.c1sq,
            (0, 0, 1): self.c2,
        }
        try:
            return table[tuple(monomial)]
        except KeyError:
            raise PreconditionError(f"no intersection number for {monomial} on a surface") from None


@dataclass(frozen=True)
class ChernVector:
    """Total Chern class as coefficients of 1, H, H^2, ... (degree-0 coefficient is 1)."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ConsistencyError(f"total Chern class must start with 1: {self.coeffs}")

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else ("H" if k == 1 else f"H^{k}")
            if k == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        out = parts[0]
        for p in parts[1:]:
            out += (" - " + p[1:]) if p.startswith("-") else (" + " + p)
        return out


# --- truncated class arithmetic --------------------------------------------

def _gen(name):
    return Polynomial.var(name, _RING)


def _const(c):
    return Polynomial.constant(c, _RING)


def _truncate(p, n):
    """Drop terms whose degree on the base exceeds n."""
    terms = {
        e: c for e, c in p.terms.items() if sum(a * w for a, w in zip(e, _WEIGHTS)) <= n
    }
    return Polynomial._make(p.variables, terms)


def _base_degree(exps):
    return sum(a * w for a, w in zip(exps, _WEIGHTS))


def _inverse_series(c, n):
    """1 / c truncated at base degree n, for c with constant term 1."""
    one = _const(1)
    x = one - c
    result = one
    power = one
    for _ in range(n):
        power = _truncate(power * x, n)
        result = result + power
    return _truncate(result, n)


def _graded_part(p, k):
    return Polynomial._make(
        p.variables, {e: c for e, c in p.terms.items() if _base_degree(e) == k}
    )


def _binomial(x, j):
    """Generalized binomial coefficient, valid for negative ``x``."""
    out = Fraction(1)
    for k in range(j):
        out = out * (x - k) / (k + 1)
    return int(out)


def _twist(chern, rank, H, n):
    """Total Chern class of E(1) from that of E (rank ``rank``), truncated at n.

    Uses c(E(1)) = sum_i c_i(E) (1 + H)^(rank - i), which holds for virtual
    bundles as well, since the conormal class is only known as a quotient.
    """
    parts = [_graded_part(chern, k) for k in range(n + 1)]
    total = _const(0)
    for k in range(n + 1):
        for i in range(k + 1):
            coef = _binomial(rank - i, k - i)
            if coef:
                total = total + parts[i] * H ** (k - i) * coef
    return _truncate(total, n)


def normal_bundle_chern(n, m, data):
    """c(N(-1)) = c(L) c(N*(1)) with L = O_X(-1), truncated at base degree n."""
    H, K, C2 = _gen("H"), _gen("K"), _gen("C2")
    one = _const(1)
    if n == 1:
        c_omega = one + K
    elif n == 2:
        c_omega = one + K + C2
    else:
        raise UnsupportedError(f"only curves and surfaces are supported (n = {n})")
    c_omega_p = _truncate((one - H) ** (m + 1), n)
    c_conormal = _truncate(c_omega_p * _inverse_series(c_omega, n), n)
    c_conormal_twisted = _twist(c_conormal, m - n, H, n)
    return _truncate((one - H) * c_conormal_twisted, n)


def _integrate(p, n, data):
    total = 0
    for e, c in p.terms.items():
        if e[0]:
            raise ConsistencyError("relative class left after reduction")
        if _base_degree(e) != n:
            continue
        if not c.is_real() or c.re.denominator != 1:
            raise ConsistencyError(f"non-integral coefficient {c}")
        total += int(c.re) * data.integrate(e[1:])
    return total


def reduce_and_integrate(expr, n, m, data):
    """Integrate a class on the projective normal bundle.

    ``expr`` is a polynomial in h2 with base-class coefficients. Powers of h2
    at or above ``r = m - n + 1`` are reduced with the Leray-Hirsch relation;
    then the coefficient of h2^(r-1) (a top-degree base class) is integrated.
    """
    r = m - n + 1
    cN = normal_bundle_chern(n, m, data)
    cs = [_graded_part(cN, i) for i in range(n + 1)]
    expr = _truncate(expr, n)
    coeffs = expr.coeff_list("h2")
    # h2^k -> -sum_{i>=1} c_i h2^(k-i) for k >= r
    while len(coeffs) > r:
        k = len(coeffs) - 1
        top = coeffs.pop()
        for i in range(1, n + 1):
            if k - i >= 0 and cs[i]:
                coeffs[k - i] = _truncate(coeffs[k - i] - top * cs[i], n)
    if len(coeffs) < r:
        return 0
    return _integrate(coeffs[r - 1], n, data)


def leray_hirsch_degree(n, m, data):
    """Evaluate h2^(m-1) * (2K + n*h2 + (n+2)*H) on the projective normal bundle."""
    if n not in (1, 2):
        raise UnsupportedError(f"degree formula implemented only for n in (1, 2), got {n}")
    if n == 1 and not isinstance(data, CurveClassData):
        raise PreconditionError("curve degree formula needs CurveClassData")
    if n == 2 and not isinstance(data, SurfaceClassData):
        raise PreconditionError("surface degree formula needs SurfaceClassData")
    if m != data.m:
        raise PreconditionError(f"ambient dimension {m} does not match data ({data.m})")
    if n == 2 and m < 3:
        raise PreconditionError("surfaces need m >= 3")
    h2, H, K = _gen("h2"), _gen("H"), _gen("K")
    expr = h2 ** (m - 1) * (K * 2 + h2 * n + H * (n + 2))
    value = reduce_and_integrate(expr, n, m, data)
    if value < 0:
        raise ConsistencyError(f"degree formula produced a negative value {value}")
    return value


def endpoint_degree(n, m, data):
    """h2^m on the projective normal bundle: degree of the endpoint map (d^2 for plane curves)."""
    return reduce_and_integrate(_gen("h2") ** m, n, m, data)


def curve_focal_degree_closed(data):
    """6(d + g - 1), the curve specialization of the class formula."""
    return 6 * (data.d + data.g - 1)


def surface_focal_degree_closed(data):
    """The three closed forms (DF), (DF'), (DF''); they agree on consistent data."""
    df = 2 * (15 * data.d + data.c1sq + data.c2 + 9 * data.HK)
    df1 = 2 * (15 * data.d + 12 * data.chi + 9 * data.HK)
    df2 = 2 * (18 * (data.sect_genus - 1) + 6 * data.d + 12 * data.chi)
    return df, df1, df2


def hypersurface_surface_degree(d):
    """2d(d-1)(2d-1): focal class number of a smooth surface of degree d in P^3."""
    return 2 * d * (d - 1) * (2 * d - 1)


def m4_closed_form(data):
    """Closed form for surfaces in P^4 satisfying the double-point relation.

    Returns a Fraction; equals DF when c2 = c1^2 + 5 H.K + 10d - d^2.
    """
    return Fraction(2, 5) * (9 * data.d ** 2 - 15 * data.d + 168 * data.chi - 18 * data.c1sq)


def satisfies_double_point_relation(data):
    """c2 = c1^2 - 5 H.c1 + 10d - d^2 for surfaces in P^4."""
    return data.c2 == data.c1sq + 5 * data.HK + 10 * data.d - data.d ** 2


def ci_tangent_data(m, degrees):
    """Intersection data of a smooth surface complete intersection in P^m."""
    degrees = list(degrees)
    if len(degrees) != m - 2:
        raise PreconditionError(
            f"a surface in P^{m} is cut by {m - 2} equations, got {len(degrees)}"
        )
    if any(d < 1 for d in degrees):
        raise PreconditionError(f"degrees must be positive: {degrees}")
    d = prod(degrees)
    a = m + 1 - sum(degrees)  # c1(S) = a H
    sym2 = sum(degrees[i] * degrees[j] for i in range(len(degrees)) for j in range(i, len(degrees)))
    c2_coef = comb(m + 1, 2) - (m + 1) * sum(degrees) + sym2
    return SurfaceClassData.from_numbers(m, d, -a * d, a * a * d, c2_coef * d)


def normal_chern_ci(degrees, dim=None):
    """prod(1 - (d_i - 2) H), truncated at ``dim`` when given."""
    degrees = list(degrees)
    if any(d < 1 for d in degrees):
        raise PreconditionError(f"degrees must be positive: {degrees}")
    coeffs = [1]
    for d in degrees:
        a = -(d - 2)
        new = coeffs + [0]
        for k in range(len(coeffs)):
            new[k + 1] += a * coeffs[k]
        coeffs = new
    if dim is not None:
        coeffs = coeffs[: dim + 1]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return ChernVector(tuple(coeffs))


def surface_data_grid(max_d=6, chi_range=range(-2, 6), hk_range=range(-12, 13), m=3):
    """Consistent SurfaceClassData with small invariants, for property checks."""
    out = []
    for d in range(1, max_d + 1):
        for hk in hk_range:
            if (d + hk) % 2:
                continue
            for chi in chi_range:
                for c1sq in range(-4, 13):
                    c2 = 12 * chi - c1sq
                    out.append(SurfaceClassData.from_numbers(m, d, hk, c1sq, c2))
    return out
