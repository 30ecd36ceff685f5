"""Exact scalars a + b*i with rational a, b (the field Q(i))."""

from fractions import Fraction

from ..errors import ExactZeroDivisionError, ParseError

_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussianRational:
    """Element of Q(i), stored as a pair of ``Fraction`` objects.

    Instances are immutable. Equality with ``int`` and ``Fraction`` works
    whenever the imaginary part is zero, and hashes agree with them.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        if isinstance(re, GaussianRational):
            re, im = re.re + 0, re.im + im
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @classmethod
    def _raw(cls, re, im):
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    @classmethod
    def parse(cls, text):
        """Parse ``"3"``, ``"-1/2"``, ``"i"``, ``"2/3*i"``, ``"1 + 2*i"``."""
        from .parse import parse_expression

        value = parse_expression(str(text))
        if not value.is_constant():
            raise ParseError(f"expected a constant, got {text!r}", "MALFORMED_EXPRESSION")
        return value.constant_value()

    # --- predicates -----------------------------------------------------
    def is_zero(self):
        return not self.re and not self.im

    def is_real(self):
        return not self.im

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    # --- arithmetic -----------------------------------------------------
    def __add__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational._raw(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __neg__(self):
        return GaussianRational._raw(-self.re, -self.im)

    def __pos__(self):
        return self

    def __mul__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational._raw(a * c, _ZERO)
        return GaussianRational._raw(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self):
        a, b = self.re, self.im
        if not b:
            if not a:
                raise ExactZeroDivisionError("inverse of zero in Q(i)")
            return GaussianRational._raw(1 / a, _ZERO)
        n = a * a + b * b
        return GaussianRational._raw(a / n, -b / n)

    def __truediv__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self):
        return GaussianRational._raw(self.re, -self.im)

    def norm(self):
        """a^2 + b^2 as a Fraction."""
        return self.re * self.re + self.im * self.im

    # --- comparison -----------------------------------------------------
    def __eq__(self, other):
        o = coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # --- rendering ------------------------------------------------------
    def __str__(self):
        re, im = self.re, self.im
        if not im:
            return str(re)
        im_part = _imag_str(im)
        if not re:
            return im_part
        if im_part.startswith("-"):
            return f"{re} - {im_part[1:]}"
        return f"{re} + {im_part}"

    def __repr__(self):
        return f"GaussianRational({self})"


def _imag_str(im):
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}*i"


def coerce(value):
    """Convert int/Fraction/GaussianRational to GaussianRational, else NotImplemented."""
    if type(value) is GaussianRational:
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return GaussianRational._raw(Fraction(value), _ZERO)
    if isinstance(value, GaussianRational):
        return value
    return NotImplemented


def as_scalar(value):
    """Like :func:`coerce` but raises ``TypeError`` on failure."""
    o = coerce(value)
    if o is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as an element of Q(i)")
    return o


ZERO = GaussianRational._raw(_ZERO, _ZERO)
ONE = GaussianRational._raw(_ONE, _ZERO)
I = GaussianRational._raw(_ZERO, _ONE)


def _fraction_sqrt(q):
    """Exact square root of a nonnegative Fraction, or None."""
    from math import isqrt

    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def sqrt(z):
    """A square root of ``z`` in Q(i), or None when it does not exist."""
    z = as_scalar(z)
    a, b = z.re, z.im
    if not b:
        r = _fraction_sqrt(a) if a >= 0 else None
        if r is not None:
            return GaussianRational._raw(r, _ZERO)
        r = _fraction_sqrt(-a)
        return None if r is None else GaussianRational._raw(_ZERO, r)
    norm = _fraction_sqrt(a * a + b * b)
    if norm is None:
        return None
    c = _fraction_sqrt((a + norm) / 2)
    if c is None or not c:
        return None
    d = b / (2 * c)
    return GaussianRational._raw(c, d)
