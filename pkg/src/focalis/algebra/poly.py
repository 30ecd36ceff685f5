"""Sparse multivariate polynomials over Q(i).

A polynomial is a tuple of variable names plus a map from exponent tuples to
nonzero :class:`GaussianRational` coefficients. Binary operations merge the
variable lists (left operand's names first) so that mixing polynomials built
in different rings just works. Equality ignores the variable order and any
variables that do not actually occur.
"""

from fractions import Fraction
from math import gcd as igcd, lcm as ilcm

from ..errors import AlgebraError, NotDivisibleError
from .gaussian import ONE, ZERO, GaussianRational, coerce

ZERO_DEGREE = -1
"""Degree reported for the zero polynomial."""


def _grlex_key(exps):
    return (sum(exps), exps)


class Polynomial:
    __slots__ = ("variables", "terms", "_hash")

    def __init__(self, variables=(), terms=None):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise AlgebraError(f"repeated variable in {variables}")
        n = len(variables)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise AlgebraError("exponent vector length does not match variables")
                c = coerce(c)
                if c is NotImplemented:
                    raise TypeError(f"bad coefficient {c!r}")
                if c:
                    clean[exps] = clean.get(exps, ZERO) + c
            clean = {e: c for e, c in clean.items() if c}
        self.variables = variables
        self.terms = clean
        self._hash = None

    @classmethod
    def _make(cls, variables, terms):
        """Trusted constructor: terms already clean."""
        obj = object.__new__(cls)
        obj.variables = variables
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c, variables=()):
        c = coerce(c)
        if c is NotImplemented:
            raise TypeError("constant must be a Q(i) scalar")
        variables = tuple(variables)
        if not c:
            return cls._make(variables, {})
        return cls._make(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, name, variables=None):
        variables = tuple(variables) if variables is not None else (name,)
        if name not in variables:
            variables = variables + (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        return cls._make(variables, {exps: ONE})

    @classmethod
    def monomial(cls, variables, exps, coeff=ONE):
        return cls(variables, {tuple(exps): coeff})

    # --- structure ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        if not self.terms:
            return True
        if len(self.terms) > 1:
            return False
        (e,) = self.terms
        return not any(e)

    def constant_value(self):
        if not self.is_constant():
            raise AlgebraError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.variables), ZERO)

    def constant_term(self):
        return self.terms.get((0,) * len(self.variables), ZERO)

    def free_variables(self):
        """Variables that occur with positive exponent, in declared order."""
        used = [False] * len(self.variables)
        for e in self.terms:
            for k, a in enumerate(e):
                if a:
                    used[k] = True
        return tuple(v for v, u in zip(self.variables, used) if u)

    def total_degree(self):
        if not self.terms:
            return ZERO_DEGREE
        return max(sum(e) for e in self.terms)

    def degree(self, var=None):
        """Total degree, or degree in ``var``. Zero polynomial gives ``ZERO_DEGREE``."""
        if var is None:
            return self.total_degree()
        if not self.terms:
            return ZERO_DEGREE
        if var not in self.variables:
            return 0
        k = self.variables.index(var)
        return max(e[k] for e in self.terms)

    def leading_exponent(self):
        if not self.terms:
            raise AlgebraError("zero polynomial has no leading term")
        return max(self.terms, key=_grlex_key)

    def leading_coefficient(self, var=None):
        """Scalar grlex leading coefficient, or coefficient polynomial of the top power of ``var``."""
        if var is None:
            return self.terms[self.leading_exponent()]
        return self.coeffs(var).get(self.degree(var), self.zero())

    def zero(self):
        return Polynomial._make(self.variables, {})

    def one(self):
        return Polynomial.constant(ONE, self.variables)

    def with_variables(self, variables):
        """Re-express in a ring whose variables contain all free variables of self."""
        variables = tuple(variables)
        if variables == self.variables:
            return self
        idx = {v: k for k, v in enumerate(variables)}
        n = len(variables)
        terms = {}
        for e, c in self.terms.items():
            new = [0] * n
            for v, a in zip(self.variables, e):
                if a:
                    if v not in idx:
                        raise AlgebraError(f"variable {v} not available in {variables}")
                    new[idx[v]] = a
            terms[tuple(new)] = c
        return Polynomial._make(variables, terms)

    def trim(self):
        """Drop variables that do not occur."""
        return self.with_variables(self.free_variables())

    def _unify(self, other):
        if self.variables == other.variables:
            return self, other
        merged = self.variables + tuple(v for v in other.variables if v not in self.variables)
        return self.with_variables(merged), other.with_variables(merged)

    def _lift(self, other):
        if isinstance(other, Polynomial):
            return self._unify(other)
        c = coerce(other)
        if c is NotImplemented:
            return None
        return self, Polynomial.constant(c, self.variables)

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        terms = dict(a.terms)
        for e, c in b.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial._make(a.variables, terms)

    def __radd__(self, other):
        return self.__add__(other)

    def __neg__(self):
        return Polynomial._make(self.variables, {e: -c for e, c in self.terms.items()})

    def __pos__(self):
        return self

    def __sub__(self, other):
        pair = self._lift(other)
        if pair is None:
            return NotImplemented
        a, b = pair
        return a + (-b)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = coerce(other)
            if c is NotImplemented:
                return NotImplemented
            if not c:
                return self.zero()
            return Polynomial._make(self.variables, {e: v * c for e, v in self.terms.items()})
        a, b = self._unify(other)
        terms = {}
        for e1, c1 in a.terms.items():
            for e2, c2 in b.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = terms.get(e)
                terms[e] = c1 * c2 if s is None else s + c1 * c2
        return Polynomial._make(a.variables, {e: c for e, c in terms.items() if c})

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, Polynomial):
            if other.is_constant():
                return self * other.constant_value().inverse()
            from .rational import RationalFunction

            return RationalFunction(self, other)
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self * c.inverse()

    def __rtruediv__(self, other):
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return Polynomial.constant(c, self.variables) / self

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise AlgebraError("polynomial exponent must be a nonnegative integer")
        result = self.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c):
        return self * c

    # --- comparison -----------------------------------------------------
    def _canonical_items(self):
        names = self.variables
        out = []
        for e, c in self.terms.items():
            out.append((tuple(sorted((names[k], a) for k, a in enumerate(e) if a)), c))
        return frozenset(out)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            if self.variables == other.variables:
                return self.terms == other.terms
            return self._canonical_items() == other._canonical_items()
        c = coerce(other)
        if c is NotImplemented:
            return NotImplemented
        return self.is_constant() and self.constant_value() == c

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant_value())
            else:
                self._hash = hash(self._canonical_items())
        return self._hash

    # --- calculus and substitution -----------------------------------------
    def diff(self, var):
        if var not in self.variables:
            return self.zero()
        k = self.variables.index(var)
        terms = {}
        for e, c in self.terms.items():
            a = e[k]
            if a:
                ne = e[:k] + (a - 1,) + e[k + 1:]
                terms[ne] = c * a
        return Polynomial._make(self.variables, terms)

    def coeffs(self, var):
        """Map power of ``var`` to its coefficient polynomial (same variable tuple)."""
        if var not in self.variables:
            return {0: self} if self.terms else {}
        k = self.variables.index(var)
        out = {}
        for e, c in self.terms.items():
            a = e[k]
            ne = e[:k] + (0,) + e[k + 1:]
            out.setdefault(a, {})[ne] = c
        return {a: Polynomial._make(self.variables, t) for a, t in out.items()}

    def coeff_list(self, var):
        """Dense coefficient list in ``var``, lowest power first."""
        cs = self.coeffs(var)
        if not cs:
            return []
        top = max(cs)
        zero = self.zero()
        return [cs.get(a, zero) for a in range(top + 1)]

    @classmethod
    def from_coeff_list(cls, coeffs, var, variables):
        variables = tuple(variables)
        if var not in variables:
            variables = variables + (var,)
        x = cls.var(var, variables)
        result = cls._make(variables, {})
        power = cls.constant(ONE, variables)
        for c in coeffs:
            if c:
                result = result + c * power
            power = power * x
        return result

    def evaluate(self, values):
        """Evaluate at a point.

        ``values`` is either a sequence matching ``variables`` in length or a
        mapping from names to values. Values may be scalars, polynomials or
        rational functions; the result is a scalar when everything is scalar.
        """
        if isinstance(values, dict):
            return self.subs(values)
        values = list(values)
        if len(values) != len(self.variables):
            raise AlgebraError(
                f"expected {len(self.variables)} values for {self.variables}, got {len(values)}"
            )
        return self.subs(dict(zip(self.variables, values)))

    def subs(self, mapping):
        """Substitute variables by scalars, polynomials or rational functions."""
        from .rational import RationalFunction

        for name in mapping:
            if name not in self.variables:
                raise AlgebraError(f"unknown variable {name!r} (have {self.variables})")
        if not mapping:
            return self
        keep = tuple(v for v in self.variables if v not in mapping)
        idx = {v: k for k, v in enumerate(self.variables)}
        scalar_vals = {}
        poly_vals = {}
        denoms = {}
        ring = keep
        for name, val in mapping.items():
            if isinstance(val, RationalFunction):
                if val.denominator.is_constant():
                    val = val.numerator * val.denominator.constant_value().inverse()
                else:
                    denoms[name] = val.denominator
                    val = val.numerator
            if isinstance(val, Polynomial):
                if val.is_constant():
                    scalar_vals[name] = val.constant_value()
                else:
                    poly_vals[name] = val
                    ring = ring + tuple(v for v in val.variables if v not in ring)
                    if name in denoms:
                        ring = ring + tuple(v for v in denoms[name].variables if v not in ring)
            else:
                c = coerce(val)
                if c is NotImplemented:
                    raise TypeError(f"cannot substitute {val!r}")
                scalar_vals[name] = c
        for name in denoms:
            if name not in poly_vals:
                poly_vals[name] = Polynomial.constant(scalar_vals.pop(name), ring)

        # partially evaluate scalar values first
        keep_idx = [idx[v] for v in keep]
        sub_idx = {name: idx[name] for name in poly_vals}
        top = {name: 0 for name in poly_vals}
        for e in self.terms:
            for name, k in sub_idx.items():
                if e[k] > top[name]:
                    top[name] = e[k]
        pow_cache = {}

        def scalar_pow(name, a):
            key = (name, a)
            r = pow_cache.get(key)
            if r is None:
                r = scalar_vals[name] ** a
                pow_cache[key] = r
            return r

        poly_cache = {}

        def poly_pow(name, a, which):
            key = (name, a, which)
            r = poly_cache.get(key)
            if r is None:
                base = poly_vals[name] if which == 0 else denoms[name]
                r = base.with_variables(ring) ** a
                poly_cache[key] = r
            return r

        # group terms by exponent pattern of substituted polynomial variables
        groups = {}
        for e, c in self.terms.items():
            for name, val in scalar_vals.items():
                a = e[idx[name]]
                if a:
                    c = c * scalar_pow(name, a)
            if not c:
                continue
            kept = tuple(e[k] for k in keep_idx) + (0,) * (len(ring) - len(keep))
            pattern = tuple(e[k] for k in sub_idx.values())
            g = groups.setdefault(pattern, {})
            s = g.get(kept)
            g[kept] = c if s is None else s + c
        result = Polynomial._make(ring, {})
        names = list(sub_idx)
        for pattern, terms in groups.items():
            part = Polynomial._make(ring, {e: c for e, c in terms.items() if c})
            for name, a in zip(names, pattern):
                if a:
                    part = part * poly_pow(name, a, 0)
                if name in denoms and top[name] - a:
                    part = part * poly_pow(name, top[name] - a, 1)
            result = result + part
        if denoms:
            den = Polynomial.constant(ONE, ring)
            for name, d in denoms.items():
                if top[name]:
                    den = den * poly_pow(name, top[name], 1)
            return RationalFunction(result, den)
        if not keep and not poly_vals:
            return result.constant_term()
        return result

    def compose(self, values):
        """Substitute a sequence of expressions for the variables, in order."""
        values = list(values)
        if len(values) != len(self.variables):
            raise AlgebraError(
                f"compose expects {len(self.variables)} expressions, got {len(values)}"
            )
        return self.subs(dict(zip(self.variables, values)))

    # --- normalization ----------------------------------------------------
    def monic(self):
        if not self.terms:
            return self
        return self * self.leading_coefficient().inverse()

    def to_integer_primitive(self):
        """Return ``(unit, prim)`` with ``self == unit * prim``.

        ``prim`` has Gaussian-integer coefficients whose real and imaginary
        parts share no common factor, and its grlex leading coefficient has
        positive real part (or zero real part and positive imaginary part).
        """
        if not self.terms:
            return ONE, self
        den = 1
        for c in self.terms.values():
            den = ilcm(den, c.re.denominator, c.im.denominator)
        g = 0
        for c in self.terms.values():
            g = igcd(g, int(c.re * den), int(c.im * den))
        factor = Fraction(den, g)
        lead = self.terms[self.leading_exponent()] * factor
        sign = 1
        if lead.re < 0 or (lead.re == 0 and lead.im < 0):
            sign = -1
        scale = GaussianRational(factor * sign)
        prim = self * scale
        return scale.inverse(), prim

    def primitive(self):
        return self.to_integer_primitive()[1]

    def is_monomial(self):
        return len(self.terms) == 1

    # --- rendering ------------------------------------------------------
    def sorted_terms(self):
        """Terms in ascending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda item: _grlex_key(item[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self.sorted_terms():
            pieces.append(_term_str(self.variables, e, c))
        out = pieces[0]
        for p in pieces[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"Polynomial({str(self)!r}, variables={self.variables})"


def _monomial_str(variables, exps):
    parts = []
    for v, a in zip(variables, exps):
        if a == 1:
            parts.append(v)
        elif a:
            parts.append(f"{v}^{a}")
    return "*".join(parts)


def _coeff_prefix(c):
    """Render a coefficient as a multiplicative prefix (sign carried in front)."""
    re, im = c.re, c.im
    if not im:
        if re == 1:
            return ""
        if re == -1:
            return "-"
        return f"{re}*"
    if not re:
        if im == 1:
            return "i*"
        if im == -1:
            return "-i*"
        return f"{im}*i*"
    if re < 0:
        return "-(" + str(-c) + ")*"
    return "(" + str(c) + ")*"


def _term_str(variables, exps, c):
    mono = _monomial_str(variables, exps)
    if not mono:
        s = str(c)
        if c.re and c.im and c.re < 0:
            return "-(" + str(-c) + ")"
        return s
    return _coeff_prefix(c) + mono


def exquo(p, q):
    """Exact quotient p / q; raises :class:`NotDivisibleError` otherwise."""
    if not q:
        from ..errors import ExactZeroDivisionError

        raise ExactZeroDivisionError("division by the zero polynomial")
    p, q = p._unify(q)
    if q.is_constant():
        return p * q.constant_value().inverse()
    lq = q.leading_exponent()
    lc_inv = q.terms[lq].inverse()
    rem = dict(p.terms)
    quot = {}
    qitems = list(q.terms.items())
    while rem:
        le = max(rem, key=_grlex_key)
        diff = tuple(a - b for a, b in zip(le, lq))
        if any(d < 0 for d in diff):
            raise NotDivisibleError("polynomial is not divisible")
        c = rem[le] * lc_inv
        quot[diff] = c
        for e, qc in qitems:
            ne = tuple(a + b for a, b in zip(e, diff))
            v = rem.get(ne, ZERO) - c * qc
            if v:
                rem[ne] = v
            else:
                rem.pop(ne, None)
    return Polynomial._make(p.variables, quot)


def divides(q, p):
    try:
        exquo(p, q)
    except NotDivisibleError:
        return False
    return True


def poly_sqrt(p):
    """Polynomial q with q*q == p, or None."""
    from .gaussian import sqrt

    if not p:
        return p
    lead_e = p.leading_exponent()
    if any(a % 2 for a in lead_e):
        return None
    c = sqrt(p.terms[lead_e])
    if c is None:
        return None
    q0e = tuple(a // 2 for a in lead_e)
    q = Polynomial._make(p.variables, {q0e: c})
    two_lead_inv = (c * 2).inverse()
    r = p - q * q
    limit = len(p.terms) * 4 + 16
    while r:
        le = r.leading_exponent()
        diff = tuple(a - b for a, b in zip(le, q0e))
        if any(d < 0 for d in diff) or _grlex_key(diff) >= _grlex_key(q0e):
            return None
        t = Polynomial._make(p.variables, {diff: r.terms[le] * two_lead_inv})
        r = r - t * (q * 2 + t)
        q = q + t
        limit -= 1
        if limit < 0:
            return None
    return q
