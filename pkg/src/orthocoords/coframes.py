"""Coframe fields on grids and the integrability residual e_j^b ^ d(e_j^b).

A coframe that comes from orthogonal coordinates satisfies
e_j^b ^ d(e_j^b) = 0 for every j (the Frobenius condition).  The residual
here discretizes d by central differences on a uniform grid and returns, per
coframe member, the max magnitude of the resulting 3-form over interior grid
points.  For an exactly integrable coframe the residual is pure
discretization error, O(h^2) in the grid step.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .charts import DiagonalChart
from .errors import DimensionMismatchError, GridTooCoarseError

_UNIFORM_RTOL = 1e-9


@dataclass(frozen=True)
class CoframeField:
    """n one-forms sampled on a uniform rectangular grid in R^n.

    ``coframe[..., j, m]`` is the dx_m-component of the j-th one-form at the
    grid point indexed by the leading axes.  ``alpha`` optionally carries the
    logarithmic derivative one-forms a_i^{-1} da_i of a chart-built field.
    """

    axes: tuple[np.ndarray, ...]
    coframe: np.ndarray
    alpha: np.ndarray | None = None

    def __post_init__(self):
        axes = tuple(np.asarray(ax, dtype=float) for ax in self.axes)
        object.__setattr__(self, "axes", axes)
        co = np.asarray(self.coframe, dtype=float)
        object.__setattr__(self, "coframe", co)
        n = len(axes)
        if co.shape != tuple(len(ax) for ax in axes) + (n, n):
            raise DimensionMismatchError(
                f"coframe shape {co.shape} does not match grid {[len(ax) for ax in axes]} in dimension {n}")
        for ax in axes:
            if len(ax) < 2:
                raise GridTooCoarseError("each axis needs at least 2 points")
            steps = np.diff(ax)
            if np.max(np.abs(steps - steps[0])) > _UNIFORM_RTOL * max(abs(steps[0]), 1.0):
                raise ValueError("grid axes must be uniformly spaced")

    @property
    def n(self) -> int:
        return len(self.axes)

    @property
    def steps(self) -> np.ndarray:
        return np.array([ax[1] - ax[0] for ax in self.axes])

    @classmethod
    def from_chart(cls, chart: DiagonalChart, axes) -> "CoframeField":
        """Sample e_j^b = a_j dx_j and alpha_i = a_i^{-1} da_i on a grid."""
        axes = tuple(np.asarray(ax, dtype=float) for ax in axes)
        if len(axes) != chart.n:
            raise DimensionMismatchError(f"need {chart.n} axes, got {len(axes)}")
        grids = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([g.ravel() for g in grids], axis=-1)
        n = chart.n
        co = np.zeros((pts.shape[0], n, n))
        al = np.zeros((pts.shape[0], n, n))
        for t, x in enumerate(pts):
            a = chart.scales_at(x)
            co[t] = np.diag(a)
            al[t] = chart.jacobian_at(x) / a[:, None]
        shape = tuple(len(ax) for ax in axes)
        return cls(axes, co.reshape(shape + (n, n)), al.reshape(shape + (n, n)))

    @classmethod
    def from_function(cls, fn, axes) -> "CoframeField":
        """Sample ``fn(x) -> (n, n) coframe rows`` on a grid."""
        axes = tuple(np.asarray(ax, dtype=float) for ax in axes)
        n = len(axes)
        grids = np.meshgrid(*axes, indexing="ij")
        pts = np.stack([g.ravel() for g in grids], axis=-1)
        co = np.stack([np.asarray(fn(x), dtype=float) for x in pts])
        return cls(axes, co.reshape(tuple(len(ax) for ax in axes) + (n, n)))


def frobenius_residual(field: CoframeField) -> np.ndarray:
    """Per-form max magnitude of the discretized 3-form e_j^b ^ d(e_j^b).

    Exterior derivatives use central differences, so interior grid points
    need at least one neighbour per side; anything coarser raises.  In
    dimension 2 every 3-form vanishes and the residual is identically zero.
    """
    n = field.n
    co = field.coframe
    if any(len(ax) < 3 for ax in field.axes):
        raise GridTooCoarseError("need at least 3 points per axis for central differences")
    if n < 3:
        return np.zeros(n)

    grid_shape = co.shape[:-2]
    h = field.steps
    dW = np.zeros(grid_shape + (n, n, n))  # dW[..., k, j, m] = d_k w_{j m}
    for k in range(n):
        sl_p = [slice(None)] * n
        sl_m = [slice(None)] * n
        sl_c = [slice(None)] * n
        sl_p[k] = slice(2, None)
        sl_m[k] = slice(0, -2)
        sl_c[k] = slice(1, -1)
        dW[tuple(sl_c) + (k,)] = (co[tuple(sl_p)] - co[tuple(sl_m)]) / (2 * h[k])

    interior = tuple(slice(1, -1) for _ in range(n))
    W = co[interior]
    D = dW[interior]
    # (dw_j)_{k m} = d_k w_{j m} - d_m w_{j k}
    two = np.einsum("...kjm->...jkm", D) - np.einsum("...mjk->...jkm", D)

    residual = np.zeros(n)
    for j in range(n):
        wj = W[..., j, :]
        tj = two[..., j, :, :]
        worst = 0.0
        for a, b, c in itertools.combinations(range(n), 3):
            comp = (wj[..., a] * tj[..., b, c]
                    - wj[..., b] * tj[..., a, c]
                    + wj[..., c] * tj[..., a, b])
            worst = max(worst, float(np.max(np.abs(comp))))
        residual[j] = worst
    return residual


def antipodal_stereographic_coframe(axes) -> CoframeField:
    """Coframe of the opposite-pole stereographic system on this chart's grid.

    The round sphere carries a second stereographic coordinate system related
    to the first by the inversion x' = x / |x|^2.  Its orthonormal coframe
    w'_j = a(x') dx'_j is exactly integrable but not aligned with the grid
    coordinates, so its discrete Frobenius residual exhibits genuine O(h^2)
    behaviour.  The grid box must stay away from the origin.
    """
    def fn(x):
        r2 = x @ x
        if r2 <= 0.0:
            raise ValueError("inversion undefined at the origin")
        xp = x / r2
        ap = 2.0 / (1.0 + xp @ xp)
        jac = np.eye(len(x)) / r2 - 2.0 * np.outer(x, x) / r2 ** 2
        return ap * jac

    return CoframeField.from_function(fn, axes)


def plane_rotation_coframe(axes) -> CoframeField:
    """Deliberately non-integrable coframe: last two axes rotated by angle x_0.

    The member e_1^b = cos(x_0) dx_{n-2} + sin(x_0) dx_{n-1} has
    |e_1^b ^ d(e_1^b)| = 1 exactly, so the residual stays bounded away from
    zero at every grid resolution.
    """
    n = len(axes)
    if n < 3:
        raise DimensionMismatchError("need at least 3 axes")

    def fn(x):
        co = np.eye(n)
        c, s = np.cos(x[0]), np.sin(x[0])
        co[n - 2, n - 2] = c
        co[n - 2, n - 1] = s
        co[n - 1, n - 2] = -s
        co[n - 1, n - 1] = c
        return co

    return CoframeField.from_function(fn, axes)
