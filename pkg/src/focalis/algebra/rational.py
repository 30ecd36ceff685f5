"""Reduced fractions of polynomials over Q(i)."""

from ..errors import AlgebraError, ExactZeroDivisionError
from .gaussian import coerce
from .gcd import gcd
from .poly import Polynomial, exquo


class RationalFunction:
    """``numerator / denominator`` in lowest terms with a grlex-monic denominator."""

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=None, _reduced=False):
        num = as_polynomial(numerator)
        den = num.one() if denominator is None else as_polynomial(denominator)
        num, den = num._unify(den)
        if not den:
            raise ExactZeroDivisionError("rational function with zero denominator")
        if not num:
            den = den.one()
        elif not _reduced and not den.is_constant():
            g = gcd(num, den)
            if not g.is_constant():
                num, den = exquo(num, g), exquo(den, g)
        lc = den.leading_coefficient()
        if lc != 1:
            inv = lc.inverse()
            num, den = num * inv, den * inv
        self.numerator = num
        self.denominator = den

    @property
    def variables(self):
        return self.numerator.variables

    def free_variables(self):
        fv = set(self.numerator.free_variables()) | set(self.denominator.free_variables())
        return tuple(v for v in self.variables if v in fv)

    def is_polynomial(self):
        return self.denominator.is_constant()

    def as_polynomial(self):
        if not self.is_polynomial():
            raise AlgebraError(f"{self} is not a polynomial")
        return self.numerator * self.denominator.constant_value().inverse()

    def is_zero(self):
        return not self.numerator

    def __bool__(self):
        return bool(self.numerator)

    def is_constant(self):
        return self.numerator.is_constant() and self.denominator.is_constant()

    def constant_value(self):
        return self.as_polynomial().constant_value()

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        if self.denominator == o.denominator:
            return RationalFunction(self.numerator + o.numerator, self.denominator)
        return RationalFunction(
            self.numerator * o.denominator + o.numerator * self.denominator,
            self.denominator * o.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator, _reduced=True)

    def __sub__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return RationalFunction(self.numerator * o.numerator, self.denominator * o.denominator)

    __rmul__ = __mul__

    def inverse(self):
        if not self.numerator:
            raise ExactZeroDivisionError("inverse of the zero rational function")
        return RationalFunction(self.denominator, self.numerator, _reduced=True)

    def __truediv__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            raise AlgebraError("exponent must be an integer")
        if n < 0:
            return self.inverse() ** (-n)
        return RationalFunction(self.numerator ** n, self.denominator ** n, _reduced=True)

    def __eq__(self, other):
        o = as_rational(other)
        if o is NotImplemented:
            return NotImplemented
        return self.numerator == o.numerator and self.denominator == o.denominator

    def __hash__(self):
        if self.is_polynomial():
            return hash(self.as_polynomial())
        return hash((self.numerator, self.denominator))

    # --- calculus ---------------------------------------------------------
    def diff(self, var):
        n, d = self.numerator, self.denominator
        if d.is_constant():
            return RationalFunction(n.diff(var), d, _reduced=True)
        return RationalFunction(n.diff(var) * d - n * d.diff(var), d * d)

    def subs(self, mapping):
        num = self.numerator.subs(mapping)
        den = self.denominator.subs(mapping)
        num_r, den_r = as_rational(num), as_rational(den)
        if not den_r:
            raise ExactZeroDivisionError("denominator vanishes at the substituted point")
        result = num_r / den_r
        if not isinstance(num, Polynomial) and not isinstance(num, RationalFunction) and (
            not isinstance(den, (Polynomial, RationalFunction))
        ):
            return result.constant_value()
        return result

    def evaluate(self, values):
        if isinstance(values, dict):
            return self.subs(values)
        values = list(values)
        if len(values) != len(self.variables):
            raise AlgebraError(
                f"expected {len(self.variables)} values for {self.variables}, got {len(values)}"
            )
        return self.subs(dict(zip(self.variables, values)))

    def with_variables(self, variables):
        return RationalFunction(
            self.numerator.with_variables(variables),
            self.denominator.with_variables(variables),
            _reduced=True,
        )

    def simplify(self):
        """Polynomial when the denominator is constant, else self."""
        return self.as_polynomial() if self.is_polynomial() else self

    def __str__(self):
        if self.is_polynomial():
            return str(self.as_polynomial())
        num = str(self.numerator)
        if len(self.numerator.terms) > 1:
            num = f"({num})"
        den = str(self.denominator)
        if len(self.denominator.terms) > 1 or not self.denominator.is_monomial():
            den = f"({den})"
        elif "*" in den:
            den = f"({den})"
        return f"{num}/{den}"

    def __repr__(self):
        return f"RationalFunction({str(self)!r})"


def as_polynomial(value):
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, RationalFunction):
        return value.as_polynomial()
    c = coerce(value)
    if c is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return Polynomial.constant(c)


def as_rational(value):
    """Coerce scalars and polynomials to RationalFunction; NotImplemented otherwise."""
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction(value, _reduced=True)
    c = coerce(value)
    if c is NotImplemented:
        return NotImplemented
    return RationalFunction(Polynomial.constant(c), _reduced=True)


def simplify(value):
    """Collapse a RationalFunction with constant denominator to a Polynomial."""
    if isinstance(value, RationalFunction):
        return value.simplify()
    return value
