"""Exact curvature oracles for the model spaces.

An oracle is the quadrilinear map (X, Y, Z, W) -> g(R_{X,Y} Z, W) with the
curvature sign convention

    R_{X,Y} Z = nabla_{[X,Y]} Z - nabla_X nabla_Y Z + nabla_Y nabla_X Z,

used consistently everywhere in this package.  With this convention the
sectional curvature of the plane spanned by orthonormal X, Y is
R(X, Y, X, Y); the round unit sphere has R(X, Y, X, Y) = 1.

Because all model spaces here are homogeneous, one tangent space suffices
and each oracle is a constant tensor in the reference basis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidDimensionError
from .frames import standard_complex_structure, standard_quaternion_triple
from .spaces import ModelSpace


@dataclass(frozen=True)
class CurvatureOracle:
    """Quadrilinear curvature map, stored as its reference-basis tensor.

    ``tensor[a, b, c, d]`` is the value on the reference basis vectors
    (eps_a, eps_b, eps_c, eps_d).  The oracle is callable on four vectors.
    """

    n: int
    tensor: np.ndarray
    name: str = ""

    def __post_init__(self):
        T = np.asarray(self.tensor, dtype=float)
        object.__setattr__(self, "tensor", T)
        if T.shape != (self.n,) * 4:
            raise DimensionMismatchError(f"tensor shape {T.shape} does not match n={self.n}")

    def __call__(self, X, Y, Z, W) -> float:
        vecs = []
        for v in (X, Y, Z, W):
            v = np.asarray(v, dtype=float)
            if v.shape != (self.n,):
                raise DimensionMismatchError(f"expected vectors of length {self.n}, got {v.shape}")
            vecs.append(v)
        X, Y, Z, W = vecs
        return float(np.einsum("abcd,a,b,c,d->", self.tensor, X, Y, Z, W))

    def frame_components(self, rows: np.ndarray) -> np.ndarray:
        """Full tensor of values on the frame whose vectors are ``rows``."""
        E = np.asarray(rows, dtype=float)
        if E.shape != (self.n, self.n):
            raise DimensionMismatchError(f"frame shape {E.shape} does not match n={self.n}")
        T = np.einsum("abcd,ia->ibcd", self.tensor, E)
        T = np.einsum("ibcd,jb->ijcd", T, E)
        T = np.einsum("ijcd,kc->ijkd", T, E)
        return np.einsum("ijkd,ld->ijkl", T, E)

    def sectional(self, X, Y) -> float:
        """Sectional curvature of the plane spanned by X and Y."""
        X = np.asarray(X, dtype=float)
        Y = np.asarray(Y, dtype=float)
        area2 = (X @ X) * (Y @ Y) - (X @ Y) ** 2
        if area2 <= 0.0:
            raise ValueError("X and Y do not span a plane")
        return self(X, Y, X, Y) / area2


def constant_curvature_oracle(n: int, kappa: float) -> CurvatureOracle:
    """Space form of sectional curvature kappa: flat for 0, unit sphere for 1."""
    if n < 2:
        raise InvalidDimensionError(f"need n >= 2, got {n}")
    eye = np.eye(n)
    tensor = kappa * (np.einsum("ac,bd->abcd", eye, eye) - np.einsum("bc,ad->abcd", eye, eye))
    return CurvatureOracle(n, tensor, name=f"constant({kappa})")


def _two_form_terms(W: np.ndarray) -> np.ndarray:
    # Pairing of X^Y + JX^JY + 2 omega(X,Y) omega with Z^W, written in the
    # component matrix W[a,b] = omega(eps_a, eps_b).
    return (np.einsum("ac,bd->abcd", W, W) - np.einsum("bc,ad->abcd", W, W)
            + 2.0 * np.einsum("ab,cd->abcd", W, W))


def fubini_study_oracle(m: int) -> CurvatureOracle:
    """Complex projective space CP^m, holomorphic sectional curvature 4.

    R(X,Y,Z,W) = g(X,Z)g(Y,W) - g(Y,Z)g(X,W) + w(X,Z)w(Y,W) - w(Y,Z)w(X,W)
                 + 2 w(X,Y) w(Z,W),
    with w = g(J., .) for the standard interleaved complex structure.
    """
    if m < 1:
        raise InvalidDimensionError(f"need m >= 1, got {m}")
    n = 2 * m
    eye = np.eye(n)
    W = standard_complex_structure(m).matrix.T  # W[a, b] = omega(eps_a, eps_b)
    tensor = (np.einsum("ac,bd->abcd", eye, eye) - np.einsum("bc,ad->abcd", eye, eye)
              + _two_form_terms(W))
    return CurvatureOracle(n, tensor, name=f"fubini-study({m})")


def quaternionic_oracle(q: int) -> CurvatureOracle:
    """Quaternionic projective space HP^q in its standard normalization.

    Pairing of X^Y + sum_a J_aX^J_aY + 2 sum_a w_a(X,Y) w_a# with Z^W,
    expanded into inner products; quaternionic planes have sectional
    curvature 4, planes orthogonal to the quaternionic span have 1.
    """
    if q < 1:
        raise InvalidDimensionError(f"need q >= 1, got {q}")
    n = 4 * q
    eye = np.eye(n)
    tensor = np.einsum("ac,bd->abcd", eye, eye) - np.einsum("bc,ad->abcd", eye, eye)
    for J in standard_quaternion_triple(q).matrices:
        tensor = tensor + _two_form_terms(J.T)
    return CurvatureOracle(n, tensor, name=f"quaternionic({q})")


def oracle_for(space: ModelSpace) -> CurvatureOracle:
    """Dispatch a model space to its curvature oracle."""
    if space.family == "flat":
        return constant_curvature_oracle(space.index, 0.0)
    if space.family == "sphere":
        return constant_curvature_oracle(space.index, 1.0)
    if space.family == "cp":
        return fubini_study_oracle(space.index)
    return quaternionic_oracle(space.index)


def symmetry_deviations(oracle: CurvatureOracle, rng: np.random.Generator,
                        samples: int = 1000) -> dict[str, float]:
    """Max deviation of the algebraic curvature identities on random vectors.

    Checks antisymmetry in the first and last pairs, pair symmetry, and the
    first Bianchi identity, each on ``samples`` random quadruples.
    """
    n = oracle.n
    X, Y, Z, W = (rng.standard_normal((samples, n)) for _ in range(4))
    T = oracle.tensor

    def val(A, B, C, D):
        return np.einsum("abcd,qa,qb,qc,qd->q", T, A, B, C, D)

    r = val(X, Y, Z, W)
    return {
        "antisymmetry_xy": float(np.max(np.abs(r + val(Y, X, Z, W)))),
        "antisymmetry_zw": float(np.max(np.abs(r + val(X, Y, W, Z)))),
        "pair_symmetry": float(np.max(np.abs(r - val(Z, W, X, Y)))),
        "first_bianchi": float(np.max(np.abs(r + val(Y, Z, X, W) + val(Z, X, Y, W)))),
    }
