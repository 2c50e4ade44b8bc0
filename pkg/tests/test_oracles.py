import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orthocoords import (
    ModelSpace,
    constant_curvature_oracle,
    fubini_study_oracle,
    oracle_for,
    quaternionic_oracle,
    standard_complex_structure,
    standard_quaternion_triple,
)
from orthocoords.errors import DimensionMismatchError, InvalidDimensionError
from orthocoords.oracles import symmetry_deviations

TAU = 1e-10


def e(n, i):
    v = np.zeros(n)
    v[i] = 1.0
    return v


def test_flat_oracle_vanishes():
    oracle = constant_curvature_oracle(5, 0.0)
    assert np.all(oracle.tensor == 0.0)
    rng = np.random.default_rng(0)
    X, Y, Z, W = rng.standard_normal((4, 5))
    assert oracle(X, Y, Z, W) == 0.0


def test_sphere_sectional_curvature_is_one():
    oracle = constant_curvature_oracle(4, 1.0)
    assert oracle.sectional(e(4, 0), e(4, 2)) == pytest.approx(1.0, abs=TAU)
    # arbitrary orthonormal pair
    rng = np.random.default_rng(1)
    from orthocoords import haar_frame
    rows = haar_frame(rng, 4)
    assert oracle.sectional(rows[0], rows[1]) == pytest.approx(1.0, abs=TAU)


def test_sphere_distinct_quadruples_vanish():
    oracle = constant_curvature_oracle(4, 1.0)
    assert oracle(e(4, 0), e(4, 1), e(4, 2), e(4, 3)) == 0.0


def test_fubini_study_holomorphic_sectional_curvature_is_four():
    oracle = fubini_study_oracle(2)
    J = standard_complex_structure(2).matrix
    X = e(4, 0)
    assert oracle.sectional(X, J @ X) == pytest.approx(4.0, abs=TAU)


def test_fubini_study_adapted_frame_component():
    # expansion at the frame (e1, Je1, e3, Je3): only 2 w(e1,e2) w(e3,e4) survives
    oracle = fubini_study_oracle(2)
    assert oracle(e(4, 0), e(4, 1), e(4, 2), e(4, 3)) == pytest.approx(2.0, abs=TAU)


def test_fubini_study_totally_real_plane():
    # both omega terms vanish on span(e1, e3); only the metric terms remain
    oracle = fubini_study_oracle(2)
    assert oracle.sectional(e(4, 0), e(4, 2)) == pytest.approx(1.0, abs=TAU)


def test_fubini_study_is_j_invariant():
    oracle = fubini_study_oracle(3)
    J = standard_complex_structure(3).matrix
    rng = np.random.default_rng(2)
    for _ in range(50):
        X, Y, Z, W = rng.standard_normal((4, 6))
        assert oracle(J @ X, J @ Y, Z, W) == pytest.approx(oracle(X, Y, Z, W), abs=1e-11)


def test_fubini_study_dimension_mismatch():
    oracle = fubini_study_oracle(2)
    with pytest.raises(DimensionMismatchError):
        oracle(np.ones(6), np.ones(6), np.ones(6), np.ones(6))


def test_quaternionic_sectional_values():
    oracle = quaternionic_oracle(2)
    j1 = standard_quaternion_triple(2).j1.matrix
    X = e(8, 0)
    # quaternionic plane
    assert oracle.sectional(X, j1 @ X) == pytest.approx(4.0, abs=TAU)
    # plane orthogonal to the quaternionic span of X
    assert oracle.sectional(X, e(8, 4)) == pytest.approx(1.0, abs=TAU)


def test_quaternionic_q1_sectional_values_match_the_round_four_sphere_scale():
    # HP^1 is a round 4-sphere up to scaling; only the listed sectional
    # values are asserted, not full tensor proportionality
    oracle = quaternionic_oracle(1)
    X = e(4, 0)
    for J in standard_quaternion_triple(1).matrices:
        assert oracle.sectional(X, J @ X) == pytest.approx(4.0, abs=TAU)


def test_quaternionic_antisymmetry_degenerate_input():
    oracle = quaternionic_oracle(1)
    rng = np.random.default_rng(3)
    X, Z, W = rng.standard_normal((3, 4))
    assert oracle(X, X, Z, W) == pytest.approx(0.0, abs=TAU)


def test_oracle_for_dispatch():
    assert np.all(oracle_for(ModelSpace("flat", 5)).tensor == 0.0)
    np.testing.assert_array_equal(
        oracle_for(ModelSpace("sphere", 4)).tensor, constant_curvature_oracle(4, 1.0).tensor)
    np.testing.assert_array_equal(
        oracle_for(ModelSpace("cp", 2)).tensor, fubini_study_oracle(2).tensor)
    np.testing.assert_array_equal(
        oracle_for(ModelSpace("hp", 2)).tensor, quaternionic_oracle(2).tensor)


@pytest.mark.parametrize("oracle", [
    constant_curvature_oracle(5, 0.0),
    constant_curvature_oracle(4, 1.0),
    fubini_study_oracle(2),
    fubini_study_oracle(3),
    quaternionic_oracle(2),
], ids=["flat5", "sphere4", "cp2", "cp3", "hp2"])
def test_symmetry_identities_on_random_quadruples(oracle):
    devs = symmetry_deviations(oracle, np.random.default_rng(4), samples=1000)
    assert max(devs.values()) <= TAU


@settings(max_examples=30, deadline=None)
@given(a=st.floats(-5, 5, allow_nan=False), b=st.floats(-5, 5, allow_nan=False))
def test_multilinearity_in_the_first_slot(a, b):
    oracle = fubini_study_oracle(2)
    rng = np.random.default_rng(5)
    X, Xp, Y, Z, W = rng.standard_normal((5, 4))
    left = oracle(a * X + b * Xp, Y, Z, W)
    right = a * oracle(X, Y, Z, W) + b * oracle(Xp, Y, Z, W)
    assert left == pytest.approx(right, abs=1e-9, rel=1e-9)


def test_invalid_dimensions_raise():
    with pytest.raises(InvalidDimensionError):
        constant_curvature_oracle(1, 1.0)
    with pytest.raises(InvalidDimensionError):
        fubini_study_oracle(0)
    with pytest.raises(InvalidDimensionError):
        quaternionic_oracle(0)


def test_model_space_parsing_and_dimensions():
    from orthocoords import parse_space
    from orthocoords.errors import SpaceSpecError

    assert parse_space("cp:2").dimension == 4
    assert parse_space("hp:3").dimension == 12
    assert parse_space("flat:7").dimension == 7
    assert parse_space("sphere:2").label == "sphere:2"
    for bad in ("cp:two", "cp", "torus:3", "cp:2:1"):
        with pytest.raises(SpaceSpecError):
            parse_space(bad)
    with pytest.raises(InvalidDimensionError):
        parse_space("flat:1")
    with pytest.raises(InvalidDimensionError):
        parse_space("hp:0")
