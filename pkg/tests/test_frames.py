import numpy as np
import pytest

from orthocoords import (
    ComplexStructure,
    Frame,
    haar_frame,
    standard_complex_structure,
    standard_quaternion_triple,
)
from orthocoords.errors import FrameError, InvalidDimensionError


def test_standard_complex_structure_m1_is_the_defining_convention():
    J = standard_complex_structure(1).matrix
    np.testing.assert_array_equal(J, [[0.0, -1.0], [1.0, 0.0]])
    # J e1 = e2 in the fixed basis
    np.testing.assert_array_equal(J @ [1.0, 0.0], [0.0, 1.0])


def test_standard_complex_structure_m2_is_block_diagonal():
    J = standard_complex_structure(2).matrix
    block = standard_complex_structure(1).matrix
    expected = np.zeros((4, 4))
    expected[:2, :2] = block
    expected[2:, 2:] = block
    np.testing.assert_array_equal(J, expected)


@pytest.mark.parametrize("m", [1, 2, 3, 5])
def test_standard_complex_structure_squares_to_minus_identity_exactly(m):
    J = standard_complex_structure(m).matrix
    np.testing.assert_array_equal(J @ J, -np.eye(2 * m))


def test_standard_complex_structure_rejects_bad_dimension():
    with pytest.raises(InvalidDimensionError):
        standard_complex_structure(0)


def test_complex_structure_rejects_non_structures():
    with pytest.raises(ValueError):
        ComplexStructure(np.eye(4))  # not skew, squares to +Id
    with pytest.raises(InvalidDimensionError):
        ComplexStructure(np.zeros((3, 3)))


def test_quaternion_triple_products_exact():
    t = standard_quaternion_triple(1)
    j1, j2, j3 = t.matrices
    np.testing.assert_array_equal(j1 @ j2, j3)
    np.testing.assert_array_equal(j1 @ j2 @ j3, -np.eye(4))


@pytest.mark.parametrize("q", [1, 2, 3])
def test_quaternion_triple_members_orthogonal_and_skew(q):
    for J in standard_quaternion_triple(q).matrices:
        np.testing.assert_array_equal(J.T, -J)
        np.testing.assert_array_equal(J.T @ J, np.eye(4 * q))


def test_quaternion_triple_q2_is_blockwise_q1():
    small = standard_quaternion_triple(1).matrices
    big = standard_quaternion_triple(2).matrices
    for B, S in zip(big, small):
        np.testing.assert_array_equal(B[:4, :4], S)
        np.testing.assert_array_equal(B[4:, 4:], S)
        assert np.all(B[:4, 4:] == 0) and np.all(B[4:, :4] == 0)


def test_quaternion_triple_rejects_bad_dimension():
    with pytest.raises(InvalidDimensionError):
        standard_quaternion_triple(0)


def test_frame_accepts_orthonormal_rejects_skewed():
    Frame(np.eye(3))
    with pytest.raises(FrameError):
        Frame(np.eye(3) * 1.01)
    with pytest.raises(FrameError):
        Frame(np.ones((3, 2)))


def test_frame_orthonormality_is_checked_against_the_supplied_gram():
    # rows diag(1/a) are orthonormal for the metric diag(a^2), not Euclidean
    a = np.array([2.0, 0.5, 3.0])
    rows = np.diag(1.0 / a)
    Frame(rows, gram=np.diag(a * a))
    with pytest.raises(FrameError):
        Frame(rows)


def test_haar_frame_is_orthonormal_and_seed_deterministic():
    rows1 = haar_frame(np.random.default_rng(7), 5)
    rows2 = haar_frame(np.random.default_rng(7), 5)
    rows3 = haar_frame(np.random.default_rng(8), 5)
    np.testing.assert_allclose(rows1 @ rows1.T, np.eye(5), atol=1e-12)
    np.testing.assert_array_equal(rows1, rows2)
    assert np.max(np.abs(rows1 - rows3)) > 1e-3


def test_omega_matrix_matches_pairwise_values():
    cs = standard_complex_structure(2)
    rows = haar_frame(np.random.default_rng(0), 4)
    omega = cs.omega_matrix(rows)
    for i in range(4):
        for j in range(4):
            assert omega[i, j] == pytest.approx(cs.omega(rows[i], rows[j]), abs=1e-14)
