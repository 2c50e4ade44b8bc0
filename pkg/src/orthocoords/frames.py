"""Orthonormal frames and compatible complex/quaternionic structures.

Everything here is pointwise linear algebra on a single tangent space,
identified with R^n through a fixed reference basis.  A frame stores its
vectors as the rows of an n-by-n matrix.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import FrameError, InvalidDimensionError
from .tolerances import TAU_ALG, TAU_FRAME


@dataclass(frozen=True)
class Frame:
    """Ordered orthonormal basis of an n-dimensional tangent space.

    Row i of ``rows`` holds the components of the i-th frame vector in the
    reference basis.  Orthonormality is checked against ``gram``, the metric
    of the reference basis (identity when omitted, as for the model spaces;
    a diagonal-chart frame carries the chart metric instead).
    """

    rows: np.ndarray
    gram: np.ndarray | None = None
    tol: float = field(default=TAU_FRAME, compare=False)

    def __post_init__(self):
        rows = np.asarray(self.rows, dtype=float)
        object.__setattr__(self, "rows", rows)
        if rows.ndim != 2 or rows.shape[0] != rows.shape[1]:
            raise FrameError(f"frame matrix must be square, got shape {rows.shape}")
        if rows.shape[0] < 2:
            raise InvalidDimensionError("frames need dimension >= 2")
        gram = self.gram
        if gram is not None:
            gram = np.asarray(gram, dtype=float)
            object.__setattr__(self, "gram", gram)
        product = rows @ rows.T if gram is None else rows @ gram @ rows.T
        dev = np.max(np.abs(product - np.eye(rows.shape[0])))
        if dev > self.tol:
            raise FrameError(f"frame is not orthonormal: deviation {dev:.3e} > {self.tol:.1e}")

    @property
    def n(self) -> int:
        return self.rows.shape[0]

    def vector(self, i: int) -> np.ndarray:
        return self.rows[i]


@dataclass(frozen=True)
class ComplexStructure:
    """Metric-compatible complex structure: J orthogonal, skew, J@J = -Id."""

    matrix: np.ndarray

    def __post_init__(self):
        J = np.asarray(self.matrix, dtype=float)
        object.__setattr__(self, "matrix", J)
        if J.ndim != 2 or J.shape[0] != J.shape[1]:
            raise InvalidDimensionError(f"complex structure must be square, got {J.shape}")
        n = J.shape[0]
        if n < 2 or n % 2:
            raise InvalidDimensionError(f"complex structure needs even dimension >= 2, got {n}")
        eye = np.eye(n)
        if np.max(np.abs(J @ J + eye)) > TAU_ALG:
            raise ValueError("J @ J != -Id")
        if np.max(np.abs(J + J.T)) > TAU_ALG:
            raise ValueError("J is not skew-symmetric")
        if np.max(np.abs(J.T @ J - eye)) > TAU_ALG:
            raise ValueError("J is not orthogonal")

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    def omega(self, X: np.ndarray, Y: np.ndarray) -> float:
        """Two-form value g(JX, Y)."""
        return float((self.matrix @ np.asarray(X, dtype=float)) @ np.asarray(Y, dtype=float))

    def omega_matrix(self, rows: np.ndarray) -> np.ndarray:
        """Matrix of omega(e_i, e_j) over the frame vectors in ``rows``."""
        E = np.asarray(rows, dtype=float)
        return E @ self.matrix.T @ E.T


@dataclass(frozen=True)
class QuaternionTriple:
    """Triple of anticommuting complex structures with J1 @ J2 @ J3 = -Id."""

    j1: ComplexStructure
    j2: ComplexStructure
    j3: ComplexStructure

    def __post_init__(self):
        a, b, c = self.j1.matrix, self.j2.matrix, self.j3.matrix
        n = a.shape[0]
        if b.shape[0] != n or c.shape[0] != n:
            raise InvalidDimensionError("quaternion triple members differ in dimension")
        if n % 4:
            raise InvalidDimensionError(f"quaternionic dimension must be a multiple of 4, got {n}")
        if np.max(np.abs(a @ b - c)) > TAU_ALG:
            raise ValueError("J1 @ J2 != J3")
        if np.max(np.abs(a @ b @ c + np.eye(n))) > TAU_ALG:
            raise ValueError("J1 @ J2 @ J3 != -Id")

    @property
    def n(self) -> int:
        return self.j1.n

    @property
    def matrices(self) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        return (self.j1.matrix, self.j2.matrix, self.j3.matrix)


def standard_complex_structure(m: int) -> ComplexStructure:
    """Interleaved complex structure on R^(2m): J e_{2k-1} = e_{2k} (1-based).

    Fixes the basis convention used by every complex-space oracle in the
    package.
    """
    if m < 1:
        raise InvalidDimensionError(f"need m >= 1, got {m}")
    n = 2 * m
    J = np.zeros((n, n))
    for k in range(m):
        J[2 * k + 1, 2 * k] = 1.0
        J[2 * k, 2 * k + 1] = -1.0
    return ComplexStructure(J)


# Left multiplication by the quaternion units i, j, k on one copy of H,
# written in the basis (1, i, j, k).
_QUAT_I = np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float)
_QUAT_J = np.array([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]], dtype=float)
_QUAT_K = np.array([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]], dtype=float)


def standard_quaternion_triple(q: int) -> QuaternionTriple:
    """Quaternion-unit left multiplications on R^(4q), block-diagonal per H factor."""
    if q < 1:
        raise InvalidDimensionError(f"need q >= 1, got {q}")

    def block(B):
        Z = np.zeros((4 * q, 4 * q))
        for t in range(q):
            Z[4 * t:4 * t + 4, 4 * t:4 * t + 4] = B
        return Z

    j1, j2, j3 = block(_QUAT_I), block(_QUAT_J), block(_QUAT_K)
    # The sign of the third generator is pinned by the triple-product test.
    if np.allclose(j1 @ j2 @ j3, np.eye(4 * q)):
        j3 = -j3
    return QuaternionTriple(ComplexStructure(j1), ComplexStructure(j2), ComplexStructure(j3))


def haar_frame(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-random orthogonal frame via QR with sign-fixed diagonal."""
    M = rng.standard_normal((n, n))
    Q, R = np.linalg.qr(M)
    return (Q * np.sign(np.diag(R))).T
