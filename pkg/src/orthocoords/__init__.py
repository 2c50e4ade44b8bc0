"""Curvature obstructions to orthogonal coordinates.

Model-space curvature oracles, diagonal-metric charts with their connection
and curvature, a Riemannian search for frames annihilating the
distinct-index curvature components, and machine-checked certificates for
the algebraic steps showing that CP^m (m >= 2) and HP^q (q >= 2) admit no
orthogonal coordinates.
"""

from .certificates import (
    CertificateResult,
    cp2_canonical_frame,
    cp2_certificate_suite,
    cp2_contradiction,
    cp2_csystem_analysis,
    cp2_dai_relations,
    cp2_rfs_identity,
    hpq_certificate_suite,
    hpq_span_bound,
    hpq_symmetry_step,
    lemma_battery,
    lemma_easy,
)
from .charts import (
    DiagonalChart,
    bracket_coefficients,
    chart_from_json,
    chart_from_spec,
    connection_coefficients,
    curvature_from_connection,
    curvature_oracle_at,
    diagonal_curvature,
    flat_chart,
    frame_at,
    koszul_check,
    polar_chart,
    stereographic_chart,
)
from .coframes import (
    CoframeField,
    antipodal_stereographic_coframe,
    frobenius_residual,
    plane_rotation_coframe,
)
from .frames import (
    ComplexStructure,
    Frame,
    QuaternionTriple,
    haar_frame,
    standard_complex_structure,
    standard_quaternion_triple,
)
from .obstruction import (
    RESIDUAL_FLOORS,
    ObstructionReport,
    ResidualSpec,
    SearchConfig,
    minimize,
    quadruple_set,
    residual,
    residual_gradient,
)
from .oracles import (
    CurvatureOracle,
    constant_curvature_oracle,
    fubini_study_oracle,
    oracle_for,
    quaternionic_oracle,
)
from .spaces import ModelSpace, parse_space

__version__ = "0.1.0"
