"""Exact verification toolkit for group-graded algebras with coefficients.

The package builds finite-dimensional graded algebras over Q or F_p,
constructs centralizers, conjugation actions, coefficient structures,
graded modules and Morita contexts, and mechanically checks every defining
law on concrete instances, reporting homogeneous witnesses on failure.
"""

from .scalars import QQ, PrimeField, RationalField, ScalarMismatch, field_from_name
from .groups import (
    FiniteGroup,
    Subgroup,
    cyclic_group,
    make_group,
    stabilizer_closure,
    symmetric_group,
    trivial_group,
)
from .linalg import Matrix
from .reports import Check, ValidationReport
from .algebras import (
    ActionLeavesCentralizer,
    AlgebraHom,
    CrossedProductData,
    GActedAlgebra,
    GradedAlgebra,
    NotCrossedProduct,
    SubalgebraEmbedding,
    center_of,
    centralizer,
    check_algebra_hom,
    check_graded_algebra,
    find_crossed_product,
    identity_component,
    miyashita_action,
    trivial_action,
)
from .modules import (
    GradedBimodule,
    GradedModule,
    TensorProduct,
    check_graded_bimodule,
    check_graded_module,
    direct_sum,
    dual_module,
    end_op_algebra,
    graded_bimodule_iso,
    hom_graded,
    induce,
    is_graded_iso,
    regular_bimodule,
    regular_module,
    stabilizer,
    suspend,
    tensor_over,
)
from .overc import (
    AlgebraOverC,
    BimoduleOverC,
    NotGInvariant,
    algebra_over_c_from_centralizer,
    canonical_theta,
    check_algebra_over_c,
    check_bimodule_over_c,
    check_canonical_theta,
    check_g_acted_algebra,
    condition_three_prime,
    make_algebra_over_c_on_endos,
)
from .morita import (
    FunctorData,
    MoritaContext,
    NotSurjective,
    OverCViolation,
    WitnessNotIso,
    build_canonical_context,
    check_context,
    check_context_uniqueness,
    check_same_stabilizer,
    functors_from_context,
    is_progenerator,
    is_surjective_context,
    verify_morita_i,
    verify_morita_ii,
)

__version__ = "0.1.0"
