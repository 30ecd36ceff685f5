import sympy as sp
from hypothesis import settings

from focalis.algebra.gaussian import GaussianRational
from focalis.algebra.parse import parse_expression

settings.register_profile("focalis", max_examples=40, deadline=None)
settings.load_profile("focalis")


def to_sympy(x):
    """Independent oracle view of an engine value (via its canonical string)."""
    return sp.sympify(str(x).replace("^", "**"), locals={"i": sp.I})


def sympy_equal(a, b):
    return sp.simplify(to_sympy(a) - (b if isinstance(b, sp.Basic) else to_sympy(b))) == 0


def unit_multiple(a, b):
    """Nonzero constant c with a == c * b, or None."""
    ea, eb = sp.expand(to_sympy(a)), sp.expand(to_sympy(b))
    if eb == 0:
        return None
    q = sp.simplify(ea / eb)
    return q if q.is_number and q != 0 else None


def poly(text, variables=None):
    return parse_expression(text, variables)


def q(re, im=0):
    return GaussianRational(re, im)


# criterion number -> PASS/FAIL line, filled by test_acceptance
ACCEPTANCE = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[k])
