import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.linalg import expm

from orthocoords import (
    RESIDUAL_FLOORS,
    ResidualSpec,
    SearchConfig,
    constant_curvature_oracle,
    cp2_canonical_frame,
    fubini_study_oracle,
    haar_frame,
    minimize,
    quadruple_set,
    quaternionic_oracle,
    residual,
    residual_gradient,
)
from orthocoords.errors import FrameError
from orthocoords.obstruction import descend

CP2 = ResidualSpec(fubini_study_oracle(2))


# ---------------------------------------------------------------- index set

@pytest.mark.parametrize("n", [4, 5, 6, 8])
def test_quadruple_count_formula(n):
    quads = quadruple_set(n)
    assert len(quads) == n * (n - 1) * (n - 2) * (n - 3) // 4
    for i, j, k, l in quads:
        assert i < j and k < l and len({i, j, k, l}) == 4


# ---------------------------------------------------------------- residual

def test_residual_zero_on_flat_and_sphere():
    rng = np.random.default_rng(0)
    for oracle in (constant_curvature_oracle(5, 0.0), constant_curvature_oracle(4, 1.0)):
        spec = ResidualSpec(oracle)
        for _ in range(1000):
            assert residual(spec, haar_frame(rng, oracle.n)) <= 1e-24


def test_residual_cp2_adapted_frame_values():
    # at the frame (e1, Je1, e3, Je3): the (0,1),(2,3) component is 2, the two
    # other pair-of-pairs components are +-1; each appears twice in the sum
    vals = dict(zip(CP2.quadruples, CP2.per_quadruple(np.eye(4))))
    assert vals[(0, 1, 2, 3)] == pytest.approx(2.0, abs=1e-12)
    assert abs(vals[(0, 2, 1, 3)]) == pytest.approx(1.0, abs=1e-12)
    assert abs(vals[(0, 3, 1, 2)]) == pytest.approx(1.0, abs=1e-12)
    assert residual(CP2, np.eye(4)) == pytest.approx(12.0, abs=1e-12)


def test_residual_zero_at_canonical_frame():
    assert residual(CP2, cp2_canonical_frame()) <= 1e-10


def test_zero_residual_means_curvature_stays_in_the_acting_plane():
    # Phi = 0 is equivalent to R(e_i, e_j) e_k lying in span(e_i, e_j) for
    # every distinct triple: the e_k component vanishes by antisymmetry and
    # the remaining component is a residual term
    import itertools

    rows = cp2_canonical_frame().rows
    oracle = fubini_study_oracle(2)
    for i, j, k in itertools.permutations(range(4), 3):
        for l in range(4):
            if l not in (i, j):
                assert abs(oracle(rows[i], rows[j], rows[k], rows[l])) <= 1e-10


def test_residual_rejects_non_orthonormal_frames():
    with pytest.raises(FrameError):
        residual(CP2, np.eye(4) * 1.001)


def test_residual_nonnegative_and_permutation_sign_invariant_exactly():
    rng = np.random.default_rng(1)
    for spec in (CP2, ResidualSpec(quaternionic_oracle(2))):
        for _ in range(20):
            rows = haar_frame(rng, spec.n)
            phi = residual(spec, rows)
            assert phi >= 0.0
            perm = rng.permutation(spec.n)
            assert residual(spec, rows[perm]) == phi
            signs = rng.choice([-1.0, 1.0], size=spec.n)
            assert residual(spec, rows * signs[:, None]) == phi


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10_000))
def test_residual_row_permutation_invariance_property(seed):
    rng = np.random.default_rng(seed)
    rows = haar_frame(rng, 6)
    spec = ResidualSpec(fubini_study_oracle(3))
    perm = rng.permutation(6)
    assert residual(spec, rows[perm]) == residual(spec, rows)


# ---------------------------------------------------------------- gradient

def _directional_fd(spec, rows, direction, h=1e-6):
    plus = residual(spec, expm(h * direction) @ rows)
    minus = residual(spec, expm(-h * direction) @ rows)
    return (plus - minus) / (2 * h)


def _random_skew(rng, n):
    A = rng.standard_normal((n, n))
    return (A - A.T) / 2.0


def test_gradient_zero_on_flat():
    spec = ResidualSpec(constant_curvature_oracle(5, 0.0))
    grad = residual_gradient(spec, haar_frame(np.random.default_rng(2), 5))
    assert np.max(np.abs(grad)) == 0.0


def test_gradient_small_at_canonical_frame():
    grad = residual_gradient(CP2, cp2_canonical_frame())
    assert np.linalg.norm(grad) <= 1e-8


def test_gradient_matches_central_differences():
    rng = np.random.default_rng(3)
    specs = [CP2, ResidualSpec(fubini_study_oracle(3)), ResidualSpec(quaternionic_oracle(2))]
    for _ in range(30):
        spec = specs[rng.integers(len(specs))]
        rows = haar_frame(rng, spec.n)
        direction = _random_skew(rng, spec.n)
        grad = residual_gradient(spec, rows)
        analytic = float(np.sum(grad * direction))
        fd = _directional_fd(spec, rows, direction)
        assert abs(analytic - fd) <= 1e-5 * max(abs(analytic), abs(fd), 1e-6)


def test_gradient_is_skew():
    grad = residual_gradient(CP2, haar_frame(np.random.default_rng(4), 4))
    np.testing.assert_allclose(grad, -grad.T, atol=1e-15)


# ---------------------------------------------------------------- descent

def test_descent_monotone_and_orthonormal():
    rng = np.random.default_rng(5)
    cfg = SearchConfig(restarts=1, max_iters=200, seed=0)
    result = descend(CP2, haar_frame(rng, 4), cfg)
    history = np.array(result.history)
    assert np.all(np.diff(history) <= 0.0)
    np.testing.assert_allclose(result.rows @ result.rows.T, np.eye(4), atol=1e-12)


def test_search_config_validation():
    with pytest.raises(ValueError):
        SearchConfig(restarts=0)
    with pytest.raises(ValueError):
        SearchConfig(step0=-1.0)
    with pytest.raises(ValueError):
        SearchConfig(tol_res=0.0)


# ---------------------------------------------------------------- minimize

def test_minimize_cp2_attains_zero():
    report = minimize(CP2, SearchConfig(restarts=15, seed=1), "cp:2")
    assert report.best_residual <= 1e-10
    assert report.converged
    assert len(report.per_quadruple) == 6
    # at any zero-residual frame all squared two-form values equal 1/3
    from orthocoords import standard_complex_structure
    omega = standard_complex_structure(2).omega_matrix(report.best_frame.rows)
    for i in range(4):
        for j in range(i + 1, 4):
            assert omega[i, j] ** 2 == pytest.approx(1.0 / 3.0, abs=1e-5)


def test_minimize_is_deterministic():
    cfg = SearchConfig(restarts=5, seed=42)
    r1 = minimize(CP2, cfg, "cp:2")
    r2 = minimize(CP2, cfg, "cp:2")
    assert json.dumps(r1.to_dict()) == json.dumps(r2.to_dict())


def test_minimize_flat_reports_zero():
    spec = ResidualSpec(constant_curvature_oracle(4, 0.0))
    report = minimize(spec, SearchConfig(restarts=2, seed=0), "flat:4")
    assert report.best_residual == 0.0
    assert report.converged


def test_minimize_cp3_stays_above_floor_quick():
    # quick version of the frozen-floor regression (acceptance runs 200 restarts)
    spec = ResidualSpec(fubini_study_oracle(3))
    report = minimize(spec, SearchConfig(restarts=20, seed=0), "cp:3")
    assert report.best_residual >= RESIDUAL_FLOORS["cp:3"]


def test_report_json_schema():
    report = minimize(CP2, SearchConfig(restarts=2, seed=0), "cp:2")
    doc = report.to_dict()
    assert sorted(doc) == ["best_frame", "best_residual", "converged", "n",
                           "per_quadruple", "restarts", "seed", "space"]
    assert doc["space"] == "cp:2"
    assert doc["n"] == 4
    assert len(doc["best_frame"]) == 4
    assert all(sorted(item) == ["ijkl", "value"] for item in doc["per_quadruple"])
