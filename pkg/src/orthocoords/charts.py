"""Metrics in orthogonal form: g = sum_j a_j(x)^2 dx_j (x) dx_j.

A chart stores the n positive scale functions a_j on an open box, optionally
with analytic first and second partials; derivatives fall back to central
finite differences.  The associated orthonormal frame is e_j = a_j^{-1} d/dx_j,
and every geometric quantity below is expressed in that frame:

    connection   Gamma[i, j, k] = g(nabla_{e_i} e_j, e_k)
    brackets     B[i, j, k]     = coefficient of e_k in [e_i, e_j]
    curvature    R[i, j, k, l]  = g(R_{e_i, e_j} e_k, e_l)

The closed-form curvature of a diagonal metric needs only the logarithmic
derivatives u[i, k] = a_i^{-1} da_i(e_k) and the Hessian-type quantities
a_i^{-1} (nabla_{e_j} da_i)(e_k); it is valid in every dimension n >= 2.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import (
    DegenerateMetricError,
    DimensionMismatchError,
    InvalidDimensionError,
    OutsideDomainError,
    SpaceSpecError,
)
from .frames import Frame
from .oracles import CurvatureOracle

_EPS = np.finfo(float).eps
_H1_SCALE = _EPS ** (1.0 / 3.0)   # first-derivative step, truncation/rounding balance
_H2_SCALE = _EPS ** 0.25          # second-derivative step


@dataclass(frozen=True)
class DiagonalChart:
    """Diagonal metric on an open box given by n positive scale functions.

    ``scales(x)`` returns the n values a_j(x).  ``scale_jacobian(x)[i, k]``
    is d a_i / d x_k and ``scale_hessian(x)[i, j, k]`` is
    d^2 a_i / d x_j d x_k; when either is missing, central finite
    differences are used instead.
    """

    n: int
    name: str
    scales: Callable[[np.ndarray], np.ndarray]
    domain: np.ndarray
    scale_jacobian: Callable[[np.ndarray], np.ndarray] | None = None
    scale_hessian: Callable[[np.ndarray], np.ndarray] | None = None

    def __post_init__(self):
        if self.n < 2:
            raise InvalidDimensionError(f"charts need n >= 2, got {self.n}")
        dom = np.asarray(self.domain, dtype=float)
        if dom.shape != (self.n, 2) or np.any(dom[:, 0] >= dom[:, 1]):
            raise ValueError(f"domain must be an (n, 2) box with lo < hi, got {dom!r}")
        object.__setattr__(self, "domain", dom)

    def check_point(self, p) -> np.ndarray:
        x = np.asarray(p, dtype=float)
        if x.shape != (self.n,):
            raise DimensionMismatchError(f"point shape {x.shape} does not match n={self.n}")
        if np.any(x < self.domain[:, 0]) or np.any(x > self.domain[:, 1]):
            raise OutsideDomainError(f"point {x.tolist()} outside chart domain")
        return x

    def scales_at(self, p) -> np.ndarray:
        x = self.check_point(p)
        a = np.asarray(self.scales(x), dtype=float)
        if a.shape != (self.n,):
            raise DimensionMismatchError(f"scales returned shape {a.shape}")
        if np.any(a <= 0.0) or not np.all(np.isfinite(a)):
            raise DegenerateMetricError(f"non-positive scale at {x.tolist()}: {a.tolist()}")
        return a

    def jacobian_at(self, p) -> np.ndarray:
        x = self.check_point(p)
        if self.scale_jacobian is not None:
            return np.asarray(self.scale_jacobian(x), dtype=float)
        J = np.empty((self.n, self.n))
        for k in range(self.n):
            h = _H1_SCALE * max(1.0, abs(x[k]))
            xp, xm = x.copy(), x.copy()
            xp[k] += h
            xm[k] -= h
            J[:, k] = (np.asarray(self.scales(xp), float) - np.asarray(self.scales(xm), float)) / (2 * h)
        return J

    def hessian_at(self, p) -> np.ndarray:
        x = self.check_point(p)
        if self.scale_hessian is not None:
            return np.asarray(self.scale_hessian(x), dtype=float)
        H = np.empty((self.n, self.n, self.n))
        a0 = np.asarray(self.scales(x), float)
        steps = [_H2_SCALE * max(1.0, abs(x[k])) for k in range(self.n)]

        def at(dx):
            return np.asarray(self.scales(x + dx), float)

        for j in range(self.n):
            hj = steps[j]
            ej = np.zeros(self.n)
            ej[j] = hj
            H[:, j, j] = (at(ej) - 2 * a0 + at(-ej)) / hj ** 2
            for k in range(j + 1, self.n):
                hk = steps[k]
                ek = np.zeros(self.n)
                ek[k] = hk
                mixed = (at(ej + ek) - at(ej - ek) - at(-ej + ek) + at(-ej - ek)) / (4 * hj * hk)
                H[:, j, k] = mixed
                H[:, k, j] = mixed
        return H

    def metric_at(self, p) -> np.ndarray:
        a = self.scales_at(p)
        return np.diag(a * a)

    def center(self) -> np.ndarray:
        return self.domain.mean(axis=1)


def flat_chart(n: int) -> DiagonalChart:
    """Euclidean metric in its natural coordinates: every a_j = 1."""
    return DiagonalChart(
        n, f"flat:{n}",
        scales=lambda x: np.ones(n),
        domain=np.tile([-10.0, 10.0], (n, 1)),
        scale_jacobian=lambda x: np.zeros((n, n)),
        scale_hessian=lambda x: np.zeros((n, n, n)),
    )


def polar_chart(n: int) -> DiagonalChart:
    """Flat metric in curvilinear coordinates: polar (n=2) or spherical (n=3)."""
    if n == 2:
        def scales(x):
            return np.array([1.0, x[0]])

        def jac(x):
            return np.array([[0.0, 0.0], [1.0, 0.0]])

        def hess(x):
            return np.zeros((2, 2, 2))

        domain = np.array([[0.2, 8.0], [-3.0, 3.0]])
    elif n == 3:
        def scales(x):
            r, th = x[0], x[1]
            return np.array([1.0, r, r * np.sin(th)])

        def jac(x):
            r, th = x[0], x[1]
            J = np.zeros((3, 3))
            J[1, 0] = 1.0
            J[2, 0] = np.sin(th)
            J[2, 1] = r * np.cos(th)
            return J

        def hess(x):
            r, th = x[0], x[1]
            H = np.zeros((3, 3, 3))
            H[2, 0, 1] = H[2, 1, 0] = np.cos(th)
            H[2, 1, 1] = -r * np.sin(th)
            return H

        domain = np.array([[0.2, 8.0], [0.2, 2.9], [-3.0, 3.0]])
    else:
        raise InvalidDimensionError(f"polar chart defined for n in (2, 3), got {n}")
    return DiagonalChart(n, f"polar:{n}", scales, domain, jac, hess)


def stereographic_chart(n: int) -> DiagonalChart:
    """Round unit sphere in stereographic coordinates: a_j = 2 / (1 + |x|^2)."""
    if n < 2:
        raise InvalidDimensionError(f"need n >= 2, got {n}")

    def scales(x):
        return np.full(n, 2.0 / (1.0 + x @ x))

    def jac(x):
        s = 1.0 + x @ x
        return np.tile(-4.0 * x / s ** 2, (n, 1))

    def hess(x):
        s = 1.0 + x @ x
        H = -4.0 * np.eye(n) / s ** 2 + 16.0 * np.outer(x, x) / s ** 3
        return np.tile(H, (n, 1, 1))

    return DiagonalChart(n, f"sphere-stereo:{n}", scales,
                         np.tile([-2.0, 2.0], (n, 1)), jac, hess)


_BUILTIN_CHARTS = {
    "flat": flat_chart,
    "polar": polar_chart,
    "sphere-stereo": stereographic_chart,
}


def chart_from_json(doc: dict) -> DiagonalChart:
    """Build a chart from its JSON document.

    Builtin kind: ``{"n": 3, "kind": "builtin", "name": "sphere-stereo"}``
    with an optional ``domain`` override.  Table kind supplies per-axis grid
    coordinates and gridded scale values:
    ``{"n": 2, "kind": "table", "name": ..., "domain": [[lo, hi], ...],
    "axes": [[...], ...], "values": [...]}`` where ``values`` has shape
    (n, len(axes[0]), ..., len(axes[n-1])).
    """
    try:
        n = int(doc["n"])
        kind = doc["kind"]
        name = doc["name"]
    except (KeyError, TypeError, ValueError) as exc:
        raise SpaceSpecError(f"bad chart document: {exc}") from None

    if kind == "builtin":
        if name not in _BUILTIN_CHARTS:
            raise SpaceSpecError(f"unknown builtin chart {name!r}")
        chart = _BUILTIN_CHARTS[name](n)
        if "domain" in doc and doc["domain"] is not None:
            chart = DiagonalChart(n, chart.name, chart.scales,
                                  np.asarray(doc["domain"], dtype=float),
                                  chart.scale_jacobian, chart.scale_hessian)
        return chart

    if kind == "table":
        from scipy.interpolate import RegularGridInterpolator

        axes = [np.asarray(ax, dtype=float) for ax in doc["axes"]]
        values = np.asarray(doc["values"], dtype=float)
        if len(axes) != n or values.shape != (n, *map(len, axes)):
            raise SpaceSpecError("table chart axes/values shapes are inconsistent")
        method = "cubic" if min(len(ax) for ax in axes) >= 4 else "linear"
        interps = [RegularGridInterpolator(axes, values[j], method=method,
                                           bounds_error=False, fill_value=None)
                   for j in range(n)]

        def scales(x, _interps=interps):
            return np.array([f(x).item() for f in _interps])

        domain = doc.get("domain")
        if domain is None:
            domain = [[ax[0], ax[-1]] for ax in axes]
        return DiagonalChart(n, str(name), scales, np.asarray(domain, dtype=float))

    raise SpaceSpecError(f"unknown chart kind {kind!r}")


def chart_from_spec(spec: str) -> DiagonalChart:
    """Resolve ``name:n`` builtin specs or a path to a chart JSON file."""
    if ":" in spec:
        name, _, idx = spec.rpartition(":")
        if name in _BUILTIN_CHARTS:
            try:
                return _BUILTIN_CHARTS[name](int(idx))
            except ValueError:
                raise SpaceSpecError(f"chart dimension in {spec!r} is not an integer") from None
    try:
        with open(spec) as fh:
            doc = json.load(fh)
    except OSError:
        raise SpaceSpecError(f"cannot parse chart spec {spec!r}: not a builtin and not a readable file") from None
    except json.JSONDecodeError as exc:
        raise SpaceSpecError(f"chart file {spec!r} is not valid JSON: {exc}") from None
    return chart_from_json(doc)


def frame_at(chart: DiagonalChart, p) -> Frame:
    """Associated orthonormal frame e_j = a_j^{-1} d/dx_j at a point.

    The rows are components in the coordinate basis, so the frame is
    orthonormal for the chart metric (carried along as the Frame's gram),
    not for the Euclidean one.
    """
    a = chart.scales_at(p)
    return Frame(np.diag(1.0 / a), gram=chart.metric_at(p))


def log_derivatives(chart: DiagonalChart, p) -> np.ndarray:
    """u[i, k] = a_i^{-1} da_i(e_k) = (d a_i / d x_k) / (a_i a_k)."""
    a = chart.scales_at(p)
    da = chart.jacobian_at(p)
    return da / (a[:, None] * a[None, :])


def connection_coefficients(chart: DiagonalChart, p) -> np.ndarray:
    """Levi-Civita connection in the frame: Gamma[i, j, k] = g(nabla_{e_i} e_j, e_k).

    nabla_{e_i} e_j = u[i, j] e_i for i != j and
    nabla_{e_j} e_j = -sum_{i != j} u[j, i] e_i.
    """
    u = log_derivatives(chart, p)
    n = chart.n
    G = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                G[i, j, i] = u[i, j]
                G[j, j, i] = -u[j, i]
    return G


def bracket_coefficients(chart: DiagonalChart, p) -> np.ndarray:
    """Frame brackets: [e_i, e_j] = u[i, j] e_i - u[j, i] e_j."""
    u = log_derivatives(chart, p)
    n = chart.n
    B = np.zeros((n, n, n))
    for i in range(n):
        for j in range(n):
            if i != j:
                B[i, j, i] += u[i, j]
                B[i, j, j] -= u[j, i]
    return B


def koszul_check(chart: DiagonalChart, p) -> float:
    """Max deviation of the closed-form connection from the Koszul formula.

    For an orthonormal frame the Koszul formula reduces to
    2 Gamma[i,j,k] = g([e_i,e_j],e_k) + g([e_k,e_i],e_j) + g(e_i,[e_k,e_j]).
    """
    G = connection_coefficients(chart, p)
    B = bracket_coefficients(chart, p)
    rhs = B + np.einsum("kij->ijk", B) + np.einsum("kji->ijk", B)
    return float(np.max(np.abs(2.0 * G - rhs)))


def _hessian_terms(chart: DiagonalChart, p) -> np.ndarray:
    """H[i, j, k] = a_i^{-1} (nabla_{e_j} d a_i)(e_k).

    Computed as e_j(da_i(e_k)) - da_i(nabla_{e_j} e_k), with the first term
    expanded through the coordinate partials of a.
    """
    a = chart.scales_at(p)
    da = chart.jacobian_at(p)
    d2a = chart.hessian_at(p)
    G = connection_coefficients(chart, p)
    v = da / a[None, :]  # v[i, k] = da_i(e_k)

    deriv = (d2a / a[None, None, :] - np.einsum("ik,kj->ijk", da, da / a[:, None] ** 2)) / a[None, :, None]
    corr = np.einsum("jkl,il->ijk", G, v)
    return (deriv - corr) / a[:, None, None]


def diagonal_curvature(chart: DiagonalChart, p) -> np.ndarray:
    """Curvature of the diagonal metric in its orthonormal frame.

    R[i,j,k,l] = d_il H[i,j,k] - d_jl H[j,i,k] - d_ik H[k,j,l] + d_jk H[k,i,l]
                 + (d_ik d_jl - d_jk d_il) P[i,j],

    with H the frame Hessian terms above and
    P[i,j] = a_i^{-1} a_j^{-1} g(da_i, da_j).  Components on four mutually
    distinct indices vanish identically for any diagonal metric.
    """
    H = _hessian_terms(chart, p)
    a = chart.scales_at(p)
    da = chart.jacobian_at(p)
    w = da / a[None, :]  # da_i(e_k)
    P = np.einsum("ik,jk->ij", w, w) / np.outer(a, a)

    eye = np.eye(chart.n)
    R = (np.einsum("ijk,il->ijkl", H, eye)
         - np.einsum("jik,jl->ijkl", H, eye)
         - np.einsum("kjl,ik->ijkl", H, eye)
         + np.einsum("kil,jk->ijkl", H, eye)
         + np.einsum("ij,ik,jl->ijkl", P, eye, eye)
         - np.einsum("ij,jk,il->ijkl", P, eye, eye))
    return R


def curvature_from_connection(chart: DiagonalChart, p, h: float = 1e-5) -> np.ndarray:
    """Curvature assembled directly from the defining formula.

    Independent cross-check of ``diagonal_curvature``: expands
    R_{e_i,e_j} e_k = nabla_{[e_i,e_j]} e_k - nabla_{e_i} nabla_{e_j} e_k
    + nabla_{e_j} nabla_{e_i} e_k with the frame derivatives of the
    connection coefficients taken by central differences along the
    coordinate directions.
    """
    x = chart.check_point(p)
    n = chart.n
    a = chart.scales_at(x)
    G = connection_coefficients(chart, x)
    B = bracket_coefficients(chart, x)

    dG = np.zeros((n, n, n, n))  # dG[i, j, k, l] = e_i(Gamma[j, k, l])
    for i in range(n):
        xp, xm = x.copy(), x.copy()
        xp[i] += h
        xm[i] -= h
        dG[i] = (connection_coefficients(chart, xp) - connection_coefficients(chart, xm)) / (2 * h * a[i])

    R = np.einsum("ijm,mkl->ijkl", B, G)
    R -= dG + np.einsum("jkm,iml->ijkl", G, G)
    R += np.einsum("jikl->ijkl", dG) + np.einsum("ikm,jml->ijkl", G, G)
    return R


def curvature_oracle_at(chart: DiagonalChart, p) -> CurvatureOracle:
    """Pointwise curvature oracle in the chart's orthonormal frame basis."""
    R = diagonal_curvature(chart, p)
    return CurvatureOracle(chart.n, R, name=f"{chart.name}@{np.asarray(p, float).tolist()}")


def sectional_curvatures(R: np.ndarray) -> np.ndarray:
    """All frame-plane sectional curvatures R[i, j, i, j], i < j."""
    n = R.shape[0]
    return np.array([R[i, j, i, j] for i in range(n) for j in range(i + 1, n)])
