import pytest
import sympy as sp

from focalis.errors import PreconditionError, UnsupportedError
from focalis.inverse import (
    SigmaData,
    admissibility_check,
    asymptotic_inverse,
    developability_check,
    developability_identity,
    dual_at_infinity_check,
    forward_consistency,
    inverse_construction,
    isotropic_projective_inverse,
)

from conftest import to_sympy, unit_multiple


def sigma(O, r, mode="standard", params=("s",)):
    return SigmaData.parse(O, r, params, mode)


def strs(xs):
    return [str(x) for x in xs]


# --- standard mode ----------------------------------------------------------------


def test_cylinder_from_axis_with_constant_radius():
    S = sigma("(0, 0, s)", "c")
    res = inverse_construction(S)
    assert str(res.eliminant) == "-c + y^2 + x^2"
    assert res.admissible and not res.fibers_are_affine_spaces
    assert forward_consistency(res, S)


def test_circle_from_axis_with_growing_radius():
    S = sigma("(0, 0, s)", "c + s^2")
    res = inverse_construction(S)
    assert strs(res.equations) == ["z", "-c + y^2 + x^2"]
    assert res.codimension == 2
    assert forward_consistency(res, S)


def test_numeric_radius():
    res = inverse_construction(sigma("(0, 0, s)", "4 + s^2"))
    assert strs(res.equations) == ["z", "-4 + y^2 + x^2"]


def test_point_sigma_gives_sphere():
    S = SigmaData.parse("(1, 2, 3)", "9", (), "standard")
    res = inverse_construction(S)
    assert unit_multiple(res.eliminant, "(x - 1)^2 + (y - 2)^2 + (z - 3)^2 - 9") is not None


def test_system_lists_sphere_and_linear_equations():
    res = inverse_construction(sigma("(0, 0, s)", "c + s^2"), eliminate=False)
    assert len(res.system) == 2


def test_isotropic_line_inadmissible_radius():
    S = sigma("(s, i*s)", "1")
    ok, reason = admissibility_check(S)
    assert not ok
    assert reason


def test_isotropic_line_with_zero_radius():
    S = sigma("(s, i*s)", "0")
    res = inverse_construction(S)
    assert res.admissible and res.fibers_are_affine_spaces
    assert strs(res.equations) == ["i*y + x"]
    assert forward_consistency(res, S)


def test_axis_is_admissible():
    assert admissibility_check(sigma("(0, 0, s)", "1"))[0]


def test_multivalued_radius_unsupported():
    with pytest.raises(UnsupportedError) as e:
        sigma("(0, 0, s)", ["1", "2"])
    assert e.value.code == "MULTIVALUED_R"
    with pytest.raises(UnsupportedError):
        sigma("(0, 0, s)", "sqrt(s)")


def test_constant_sigma_rejected():
    with pytest.raises(PreconditionError):
        inverse_construction(sigma("(0, 0, 1)", "1"))


def test_coordinate_names_in_r_rejected():
    with pytest.raises(PreconditionError):
        sigma("(0, 0, s)", "x + 1")


def test_samples_satisfy_equations():
    S = sigma("(0, 0, s)", "c + s^2")
    res = inverse_construction(S)
    assert res.samples
    for _, x in res.samples:
        point = dict(zip(res.coords, x))
        point.update(res.specialization)
        for E in res.equations:
            values = {sp.Symbol(k): to_sympy(v) for k, v in point.items()}
            assert sp.expand(to_sympy(E).subs(values)) == 0


# --- asymptotic mode ---------------------------------------------------------------------

FIRST_CONE = "4*(x1 - x0)*x3 - x2^2"


def test_example7_first_cone():
    S = sigma("(0, 1, s, s^2)", "1", "asymptotic")
    res = asymptotic_inverse(S)
    assert str(res.eliminant) == "x2^2 - 4*x1*x3 + 4*x0*x3"
    assert unit_multiple(res.eliminant, FIRST_CONE) == -1
    dual = dual_at_infinity_check(res, S)
    assert dual.ok and dual.equal
    assert developability_check(res)
    assert developability_identity(res, S)


@pytest.mark.parametrize("r,unit_expected", [("-s^2/2", 2), ("s^2/2", None)])
def test_example7_second_cone_sign_convention(r, unit_expected):
    S = sigma("(0, 0, 1, s)", r, "asymptotic")
    res = asymptotic_inverse(S)
    assert unit_multiple(res.eliminant, "x0*x2 - x3^2/2") == unit_expected
    if unit_expected is None:
        assert unit_multiple(res.eliminant, "x0*x2 + x3^2/2") is not None
    dual = dual_at_infinity_check(res, S)
    assert dual.ok and not dual.equal
    assert developability_identity(res, S)


def test_asymptotic_point_gives_hyperplane():
    S = SigmaData.parse("(0, 1, 2, 3)", "5", (), "asymptotic")
    res = asymptotic_inverse(S)
    assert res.eliminant.total_degree() == 1
    dual = dual_at_infinity_check(res, S)
    assert dual.ok and dual.equal


def test_asymptotic_requires_chart_zero():
    with pytest.raises(PreconditionError):
        sigma("(1, 1, s, s^2)", "1", "asymptotic")


def test_rescaling_lift_keeps_cone():
    S = sigma("(0, 1, s, s^2)", "1", "asymptotic")
    a = asymptotic_inverse(S).eliminant
    b = asymptotic_inverse(S.rescale(3)).eliminant
    assert unit_multiple(a, b) is not None


# --- isotropic projective mode ------------------------------------------------------------


def test_isotropic_projective_admissible():
    S = sigma("(0, 1, i, s, i*s)", "0", "isotropic_projective")
    res = isotropic_projective_inverse(S)
    assert res.admissible
    assert strs(res.equations) == ["i*x2 + x1", "i*x4 + x3"]


def test_isotropic_projective_nonconstant_norm():
    S = sigma("(0, 1, i, s, i*s)", "2*s", "isotropic_projective")
    res = isotropic_projective_inverse(S)
    assert not res.admissible
    assert "constant" in res.reason


def test_isotropic_projective_requires_isotropic_annihilator():
    S = sigma("(0, 0, 1, i, s)", "0", "isotropic_projective")
    with pytest.raises(PreconditionError) as e:
        isotropic_projective_inverse(S)
    assert e.value.code == "NOT_ISOTROPIC"
