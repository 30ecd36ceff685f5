import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from focalis.algebra import GaussianRational, parse_expression
from focalis.errors import PreconditionError
from focalis.focal import (
    endpoint_map,
    evolute,
    fiber_sphere_check,
    focal_locus,
    image_degree,
    implicitize_image,
    ramification_poly,
    rotation_surface_focal,
)
from focalis.variety import ImplicitHypersurface, ParametricVariety

from conftest import poly, to_sympy, unit_multiple

PAPER_CURVE = "(t, i*t + t^3)"
CIRCLE = "((1 - t^2)/(1 + t^2), 2*t/(1 + t^2))"
ELLIPSE = "(2*(1 - t^2)/(1 + t^2), 2*t/(1 + t^2))"
TORUS_PROFILE = "(2 + (1 - t^2)/(1 + t^2), 2*t/(1 + t^2))"


def curve(text, params=("t",)):
    return ParametricVariety.parse(text, params)


def eqs(component):
    return sorted(str(e) for e in component.equations)


# --- endpoint map and ramification -------------------------------------------------


def test_endpoint_at_zero_is_identity():
    E = endpoint_map(curve(PAPER_CURVE))
    assert E.at({"t": 2, "l": 0}) == (2, GaussianRational(8, 2))


def test_paper_ramification():
    J = ramification_poly(curve(PAPER_CURVE))
    assert str(J) == "-3*t*(2*l + 2*i*t + 3*t^3)"
    assert unit_multiple(J.raw, "-3*t*(2*l + 2*i*t + 3*t^3)") is not None


def test_cusp_ramification_matches_independent_jacobian():
    J = ramification_poly(curve("(t^2, t^5)"))
    t, l = sp.symbols("t l")
    x = sp.Matrix([t**2, t**5])
    d = x.diff(t)
    n = sp.Matrix([d[1], -d[0]]) / t
    E = x + l * n
    oracle = sp.Matrix.hstack(E.diff(t), E.diff(l)).det()
    assert unit_multiple(J.raw, sp.expand(oracle)) is not None
    assert str(J) == "-t*(4 + 30*t*l + 25*t^6)" or unit_multiple(J.raw, "t*(4 + 30*t*l + 25*t^6)") is not None


def test_circle_ramification_single_lambda():
    out = evolute(curve(CIRCLE))
    (comp,) = out.strict
    assert comp.kind == "point"
    assert comp.parametrization.at([3]) == (0, 0)
    assert str(out.ramification) == "-2*(-1 + l + t^2*l)"


def test_ramification_equals_up_to_unit():
    a = ramification_poly(curve(PAPER_CURVE))
    b = ramification_poly(curve(PAPER_CURVE))
    assert a.equals_up_to_unit(b)
    assert a.equals_up_to_unit("-3*t*(2*l + 2*i*t + 3*t^3)")
    assert a.equals_up_to_unit("i*t*(2*l + 2*i*t + 3*t^3)")
    assert not a.equals_up_to_unit("t*(2*l - 2*i*t + 3*t^3)")


# --- evolutes ------------------------------------------------------------------------


def test_paper_evolute():
    out = evolute(curve(PAPER_CURVE))
    (branch,) = out.branches()
    assert [str(c) for c in branch.parametrization.coords] == [
        "2*t - 9/2*i*t^3 - 9/2*t^5",
        "2*i*t + 5/2*t^3",
    ]
    (vert,) = out.verticals()
    assert vert.isotropic
    assert unit_multiple(vert.equations[0], "i*x - y") is not None


def test_cusp_vertical_y_axis():
    out = evolute(curve("(t^2, t^5)"))
    verticals = out.verticals()
    assert any(eqs(v) == ["x"] for v in verticals)
    assert all(not c.vertical for c in out.strict)
    assert any(c.vertical for c in out.large)


def test_parabola_evolute_and_semicubical_relation():
    out = evolute(curve("(t, t^2)"))
    (branch,) = out.branches()
    x, y = branch.parametrization.coords
    assert sp.expand(to_sympy(x) + 4 * sp.Symbol("t") ** 3) == 0
    assert sp.expand(to_sympy(y) - 3 * sp.Symbol("t") ** 2 - sp.Rational(1, 2)) == 0
    assert sp.expand(27 * to_sympy(x) ** 2 - 16 * (to_sympy(y) - sp.Rational(1, 2)) ** 3) == 0


def test_line_has_no_strict_focal_locus():
    out = evolute(curve("(t, 2*t + 1)"))
    assert not out.branches()


def test_evolute_requires_plane_curve():
    with pytest.raises(PreconditionError):
        evolute(curve("(t, t^2, t^3)"))


@given(st.integers(-3, 3).filter(bool), st.integers(-3, 3))
def test_evolute_points_are_centres_of_curvature(a, b):
    # y = a t^2 + b t: the focal point lies on the normal line at distance 1/curvature
    X = curve(f"(t, {a}*t^2 + {b}*t)")
    out = evolute(X)
    (branch,) = out.branches()
    t = sp.Symbol("t")
    ex, ey = (to_sympy(c) for c in branch.parametrization.coords)
    xp, yp = 1, 2 * a * t + b
    ypp = 2 * a
    cx = t - yp * (1 + yp**2) / ypp
    cy = a * t**2 + b * t + (1 + yp**2) / ypp
    assert sp.simplify(ex - cx) == 0 and sp.simplify(ey - cy) == 0


# --- surfaces of revolution ------------------------------------------------------


def test_torus_sheets():
    out = rotation_surface_focal(curve(TORUS_PROFILE))
    kinds = sorted(c.kind for c in out.components)
    assert kinds == ["axis", "circle"]
    axis = next(c for c in out.components if c.kind == "axis")
    circle = next(c for c in out.components if c.kind == "circle")
    assert eqs(axis) == ["x", "y"]
    assert eqs(circle) == ["-4 + y^2 + x^2", "z"]


def test_cylinder_axis_only():
    out = rotation_surface_focal(curve("(1, t)"))
    assert [c.kind for c in out.components] == ["axis"]


def test_sphere_collapses_to_centre():
    out = rotation_surface_focal(curve(CIRCLE))
    kinds = sorted(c.kind for c in out.components)
    assert kinds == ["axis-point", "point"]
    for c in out.components:
        assert eqs(c) == ["x", "y", "z"]


# --- implicitization and image degree ---------------------------------------------------


def test_implicitize_parabola():
    res = implicitize_image(curve("(t, t^2)"), ("x", "y"))
    assert unit_multiple(res.polynomial, "y - x^2") is not None


def test_implicitize_circle():
    res = implicitize_image(curve(CIRCLE), ("x", "y"))
    assert unit_multiple(res.polynomial, "x^2 + y^2 - 1") is not None


def test_ellipse_evolute_is_lame_sextic():
    (branch,) = evolute(curve(ELLIPSE)).branches()
    res = implicitize_image(branch.parametrization, ("x", "y"))
    F = res.polynomial
    assert F.total_degree() == 6
    # classical Lame sextic (a x)^(2/3) + (b y)^(2/3) = (a^2 - b^2)^(2/3), a=2, b=1
    x, y = sp.symbols("x y")
    u, v, w = 4 * x**2, y**2, 9
    lame = (u + v - w) ** 3 + 27 * u * v * w
    assert unit_multiple(F, sp.expand(lame)) is not None


def test_torus_circle_implicitization_is_codimension_two():
    out = rotation_surface_focal(curve(TORUS_PROFILE))
    circle = next(c for c in out.components if c.kind == "circle")
    res = implicitize_image(circle.parametrization, ("x", "y", "z"))
    assert res.codimension == 2
    assert sorted(str(e) for e in res.equations) == ["-4 + y^2 + x^2", "z"]


def test_implicit_equation_vanishes_on_parametrization():
    X = curve("(t^2 + 1, t^3 - t)")
    F = implicitize_image(X, ("x", "y")).polynomial
    t = sp.Symbol("t")
    val = to_sympy(F).subs({sp.Symbol("x"): t**2 + 1, sp.Symbol("y"): t**3 - t})
    assert sp.expand(val) == 0


@pytest.mark.parametrize(
    "text,expected",
    [("(t, t)", 1), ("(t, t^2)", 2), (ELLIPSE, 2)],
)
def test_image_degree_of_curves(text, expected):
    assert image_degree(curve(text)).raw_intersections == expected


def test_image_degree_of_ellipse_evolute():
    (branch,) = evolute(curve(ELLIPSE)).branches()
    assert image_degree(branch.parametrization).raw_intersections == 6
    F = implicitize_image(branch.parametrization, ("x", "y")).polynomial
    assert image_degree(F).raw_intersections == 6


def test_image_degree_echoes_seed():
    res = image_degree(curve("(t, t^2)"), seed=7)
    assert res.seed == 7


# --- sphere fibers ------------------------------------------------------------------------

TORUS = "(x^2 + y^2 + z^2 + 3)^2 - 16*(x^2 + y^2)"


def torus():
    return ImplicitHypersurface(poly(TORUS), ("x", "y", "z"))


def circle_at(radius, height):
    return curve(f"({radius}*(1 - u^2)/(1 + u^2), 2*{radius}*u/(1 + u^2), {height})", ("u",))


def test_sphere_fiber_on_torus_axis():
    assert fiber_sphere_check(torus(), (0, 0, 0), circle_at(3, 0))
    assert fiber_sphere_check(torus(), (0, 0, parse_expression("-8/3")), circle_at("13/5", "4/5"))


def test_sphere_fiber_off_axis_fails():
    assert not fiber_sphere_check(torus(), (1, 2, 0), circle_at(3, 0))
    assert not fiber_sphere_check(torus(), (0, 0, 5), circle_at("13/5", "4/5"))


def test_sphere_fiber_on_sphere():
    S = ImplicitHypersurface(poly("x^2 + y^2 + z^2 - 25"), ("x", "y", "z"))
    assert fiber_sphere_check(S, (0, 0, 0), circle_at(3, 4))


def test_sphere_fiber_rejects_off_surface_witness():
    with pytest.raises(PreconditionError):
        fiber_sphere_check(torus(), (0, 0, 0), circle_at(5, 0))


def test_focal_locus_of_surface_has_branches():
    X = ParametricVariety.parse("(s, t, s^2 + t^2)", ("s", "t"))
    out = focal_locus(X)
    assert out.branches()
