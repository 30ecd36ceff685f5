import pytest
from hypothesis import given
from hypothesis import strategies as st

from focalis.chow import (
    CurveClassData,
    SurfaceClassData,
    ci_tangent_data,
    curve_focal_degree_closed,
    endpoint_degree,
    hypersurface_surface_degree,
    leray_hirsch_degree,
    m4_closed_form,
    normal_chern_ci,
    satisfies_double_point_relation,
    surface_data_grid,
    surface_focal_degree_closed,
)
from focalis.errors import ConsistencyError, PreconditionError, UnsupportedError


@pytest.mark.parametrize("d,expected", [(2, 12), (3, 60), (4, 168), (5, 360), (6, 660)])
def test_hypersurface_surfaces_in_p3(d, expected):
    data = ci_tangent_data(3, [d])
    assert leray_hirsch_degree(2, 3, data) == expected
    assert hypersurface_surface_degree(d) == expected


@pytest.mark.parametrize("d", [2, 3, 4])
def test_smooth_plane_curves(d):
    data = CurveClassData.smooth_plane(d)
    assert leray_hirsch_degree(1, 2, data) == 3 * d * (d - 1)


def test_conic_focal_degree():
    data = CurveClassData(2, 2, 0)
    assert leray_hirsch_degree(1, 2, data) == 6
    assert curve_focal_degree_closed(data) == 6


@given(st.integers(2, 6), st.integers(1, 8), st.integers(0, 6))
def test_curve_closed_form(m, d, g):
    data = CurveClassData(m, d, g)
    assert leray_hirsch_degree(1, m, data) == curve_focal_degree_closed(data)


def test_line_has_degree_zero():
    assert leray_hirsch_degree(1, 2, CurveClassData(2, 1, 0)) == 0


def test_endpoint_degree_plane_curve():
    assert endpoint_degree(1, 2, CurveClassData.smooth_plane(3)) == 9


def test_df_forms_agree_on_grid():
    grid = surface_data_grid(max_d=4, chi_range=range(0, 4), hk_range=range(-6, 7))
    assert len(grid) >= 50
    for data in grid:
        df, df1, df2 = surface_focal_degree_closed(data)
        assert df == df1 == df2
        try:
            value = leray_hirsch_degree(2, 3, data)
        except ConsistencyError:
            assert df < 0
        else:
            assert value == df


def test_m4_closed_form_under_double_point_relation():
    checked = 0
    for data in surface_data_grid(max_d=6, m=4):
        if not satisfies_double_point_relation(data):
            continue
        df = surface_focal_degree_closed(data)[0]
        assert m4_closed_form(data) == df
        if df >= 0:
            assert leray_hirsch_degree(2, 4, data) == df
        checked += 1
    assert checked > 50


def test_quadric_intersection_in_p4():
    data = ci_tangent_data(4, [2, 2])
    assert satisfies_double_point_relation(data)
    assert leray_hirsch_degree(2, 4, data) == m4_closed_form(data) == 72


def test_surface_data_validation():
    with pytest.raises(PreconditionError):
        SurfaceClassData(3, 2, -4, 8, 5, 1, 0)
    with pytest.raises(PreconditionError):
        SurfaceClassData.from_numbers(3, 2, -3, 8, 4)


def test_ci_data_for_quadric():
    data = ci_tangent_data(3, [2])
    assert (data.d, data.HK, data.c1sq, data.c2, data.chi, data.sect_genus) == (2, -4, 8, 4, 1, 0)


def test_normal_chern_ci():
    assert str(normal_chern_ci([3])) == "1 - H"
    assert str(normal_chern_ci([2, 2])) == "1"


def test_unsupported_dimension():
    with pytest.raises(UnsupportedError):
        leray_hirsch_degree(3, 4, CurveClassData(4, 2, 0))


def test_mismatched_ambient():
    with pytest.raises(PreconditionError):
        leray_hirsch_degree(1, 3, CurveClassData(2, 2, 0))


def test_quartic_surface_data():
    data = ci_tangent_data(3, [4])
    assert (data.c1sq, data.c2, data.chi) == (0, 24, 2)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 5])
def test_hypersurface_data_formulas(d):
    data = ci_tangent_data(3, [d])
    assert data.HK == (d - 4) * d
    assert data.c2 == (6 - d * (4 - d)) * d


def test_plane_in_p4():
    data = ci_tangent_data(4, [1, 1])
    assert (data.d, data.HK, data.c1sq, data.c2, data.chi) == (1, -3, 9, 3, 1)


def test_twisted_cubic():
    data = CurveClassData(3, 3, 0)
    assert leray_hirsch_degree(1, 3, data) == curve_focal_degree_closed(data) == 12


def test_conic_endpoint_degree_counts_normals():
    assert endpoint_degree(1, 2, CurveClassData(2, 2, 0)) == 4
