"""qflag: exact root-system, q-dimension, Haar-state and action-classification engine."""

from .rootsys import (
    LieType,
    RootSystem,
    Weight,
    build_root_system,
    classify_weight,
    inner_product,
    longest_element,
    simple_reflection,
    simple_root,
    weyl_apply,
    weyl_vector,
)
from .repdata import WeightTable, classical_dim, qdim_via_character, weight_table
from .qcalc import (
    ExponentPair,
    LaurentPoly,
    eval_laurent,
    f_matrix_exponents,
    one_param_exponents,
    q_integer,
    q_pochhammer,
    quantum_dim_product,
    quantum_dim_weight_sum,
    torus_character,
)
from .soibelman import (
    DiagonalModel,
    Su2Operator,
    commutation_check,
    diagonal_model,
    power_norm_gap,
    spectrum,
    su2_generators,
)
from .haar import (
    GradedSu2Element,
    HaarDatum,
    RationalLaurent,
    haar_a_lambda_sq,
    haar_datum,
    haar_diag_mass,
    haar_p0,
    su2_haar_eval,
    su2_orthogonality_suite,
)
from .classify import (
    ActionBlock,
    ActionSpec,
    CanonicalSubgroup,
    ClassificationResult,
    canonicalize,
    classify_action,
    exact_log,
    invariant_group,
    subgroup_equal,
)

__version__ = "0.1.0"
