"""Exact arithmetic over Q(i): scalars, polynomials, rational functions."""

from .gaussian import GaussianRational, I, ONE, ZERO
from .poly import ZERO_DEGREE, Polynomial, divides, exquo, poly_sqrt
from .gcd import (
    SquarefreeResult,
    content,
    gcd,
    gcd_list,
    lcm,
    normalize,
    prem,
    primitive_part,
    squarefree_and_content,
    squarefree_factors,
    squarefree_part,
)
from .resultant import discriminant, resultant
from .rational import RationalFunction
from .parse import parse_expression, parse_tuple
