import pytest
import sympy as sp
from hypothesis import given
from hypothesis import strategies as st

from focalis.algebra import I, GaussianRational
from focalis.errors import DegenerateError, PreconditionError, UnsupportedError
from focalis.euclid import (
    LinearSubspace,
    QuadraticSpace,
    is_isotropic,
    is_totally_isotropic,
    normal_field,
    orthogonal_complement,
)
from focalis.variety import ImplicitHypersurface, ParametricVariety

from conftest import poly, to_sympy

small = st.integers(-5, 5)


def test_standard_form():
    Q = QuadraticSpace.standard(3)
    assert Q.dot([1, 2, 3], [1, 1, 1]) == 6
    assert Q.is_identity


def test_cyclic_points_are_isotropic():
    assert is_isotropic([1, I])
    assert is_isotropic([1, -I])
    assert not is_isotropic([1, 1])


def test_gram_validation_codes():
    with pytest.raises(PreconditionError) as e:
        QuadraticSpace([[1, 2], [3, 1]])
    assert e.value.code == "GRAM_NOT_SYMMETRIC"
    with pytest.raises(PreconditionError) as e:
        QuadraticSpace([[1, 1], [1, 1]])
    assert e.value.code == "GRAM_DEGENERATE"


def test_raise_lower_inverse():
    Q = QuadraticSpace([[2, 1], [1, 1]])
    v = [3, -1]
    assert Q.raise_index(Q.lower(v)) == v


def test_orthogonal_complement_of_isotropic_line():
    Q = QuadraticSpace.standard(2)
    L = LinearSubspace(Q, [[1, I]])
    assert is_totally_isotropic(L)
    # an isotropic line is its own orthogonal
    assert orthogonal_complement(L) == L


def test_complement_dimension_and_orthogonality():
    Q = QuadraticSpace.standard(4)
    L = LinearSubspace(Q, [[1, 0, I, 0], [0, 1, 0, 1]])
    A = orthogonal_complement(L)
    assert A.dimension == 2
    for a in A.basis:
        for v in L.basis:
            assert Q.dot(a, v) == 0


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=2))
def test_complement_property(vectors):
    Q = QuadraticSpace.standard(3)
    from focalis.algebra.linalg import rank

    if rank(vectors) != len(vectors):
        return
    L = LinearSubspace(Q, vectors)
    A = orthogonal_complement(L)
    assert A.dimension == 3 - L.dimension
    assert all(Q.dot(a, v) == 0 for a in A.basis for v in L.basis)


def test_subspace_equality_is_basis_independent():
    Q = QuadraticSpace.standard(3)
    assert LinearSubspace(Q, [[1, 0, 0], [0, 1, 0]]) == LinearSubspace(Q, [[1, 1, 0], [1, -1, 0]])


def test_dependent_basis_rejected():
    with pytest.raises(PreconditionError):
        LinearSubspace(QuadraticSpace.standard(2), [[1, 1], [2, 2]])


def test_plane_curve_normal_orientation():
    X = ParametricVariety.parse("(t, t^2)", ("t",))
    n = normal_field(X)
    assert [str(c) for c in n] == ["2*t", "-1"]


def test_surface_normal_is_orthogonal_to_tangents():
    X = ParametricVariety.parse("(s, t, s^2 + i*t^3)", ("s", "t"))
    Q = QuadraticSpace.standard(3)
    n = normal_field(X, Q)
    for tv in X.tangent_vectors():
        assert not Q.dot(n, tv)


def test_normal_under_non_identity_form():
    Q = QuadraticSpace([[1, 0], [0, 2]])
    X = ParametricVariety.parse("(t, t^3)", ("t",))
    n = normal_field(X, Q)
    (tv,) = X.tangent_vectors()
    assert not Q.dot(n, tv)


def test_normal_field_oracle():
    s, t = sp.symbols("s t")
    X = ParametricVariety.parse("(s + t, s*t, s^2)", ("s", "t"))
    n = normal_field(X)
    J = sp.Matrix([[1, 1], [t, s], [2 * s, 0]])
    cross = J[:, 0].cross(J[:, 1])
    ours = sp.Matrix([to_sympy(c) for c in n])
    assert sp.simplify(ours.cross(cross)) == sp.zeros(3, 1)


def test_normal_field_degenerate_and_unsupported():
    with pytest.raises(DegenerateError):
        normal_field(ParametricVariety.parse("(s + t, s + t, 1)", ("s", "t")))
    with pytest.raises(UnsupportedError):
        normal_field(ParametricVariety.parse("(t, t, t)", ("t",)))


def test_implicit_hypersurface_is_squarefree():
    X = ImplicitHypersurface(poly("(x^2 + y^2 - 1)^2"), ("x", "y"))
    assert X.F.total_degree() == 2
    assert len(X.gradient()) == 2


def test_parametric_at():
    X = ParametricVariety.parse("(t, i*t + t^3)", ("t",))
    assert X.at([1]) == (1, GaussianRational(1, 1))
