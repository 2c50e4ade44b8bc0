"""Default numerical tolerances.

All closed-form oracles are exact double-precision formulas, so the algebraic
tolerances only absorb rounding.  Chart-level tolerances widen when central
finite differences replace analytic derivatives.
"""

# Orthonormality of frames.
TAU_FRAME = 1e-10

# Pointwise algebraic identities (curvature symmetries, certificate steps).
TAU_ALG = 1e-10

# Analytic derivatives of chart scales vs. central finite differences.
TAU_FD = 1e-6

# Curvature of diagonal charts: finite-difference vs. analytic-derivative paths.
TAU_CURV_FD = 1e-6
TAU_CURV_ANALYTIC = 1e-9

# Looser matching used when checking that a frame satisfies a certificate
# precondition (the frame may itself come from a numerical search).
FRAME_MATCH_TOL = 1e-8
