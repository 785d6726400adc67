"""Exact-arithmetic exterior algebra and incidence geometry.

Scalars are exact (unbounded rationals or GF(p)); multivectors, flats,
scalar products, and the classical affine/projective theorem predicates
are built on top of them.  All values are immutable and all operations are
pure functions, so the library is safe under any concurrent use.
"""

from .errors import ExalgError
from .fields import (
    Field,
    FieldElement,
    RATIONALS,
    characteristic,
    field_from_string,
    gf,
    invert,
    parse_scalar,
)
from .multivector import Multivector, Vector
from .matrices import Matrix
from .exterior import (
    ExtendedCoordView,
    det_of_map,
    ext_power_map,
    factor_blade,
    grade_project,
    is_blade,
    plucker_from_matrix,
    project_along,
    reflect_along,
    sym_basis_count,
    wedge_vectors,
)
from .duality import (
    annihilator_blade,
    annihilator_blade_inv,
    annihilator_subspace,
    bracket,
    contragredient,
    dual_map,
    eval_dual_blade,
    jacobi_identity_check,
    regressive,
    regressive_from_factors,
)
from .affine import (
    AffineMap,
    AffinePoint,
    affine_independent,
    barycenter,
    ceva_product,
    collinear,
    dilation_apply,
    lines_intersect,
    menelaus_product,
    similarity_check,
    translate,
    underlying_linear,
    vector_ratio,
)
from .projective import (
    ProjFlat,
    ProjFrame,
    ProjPoint,
    ProjTransform,
    central_project,
    collinear_points,
    dehomogenize,
    desargues_check,
    embed_affine,
    embed_direction,
    general_position,
    incident,
    join,
    meet,
    pappus_check,
    standardize_frame,
    transform_apply,
    transform_from_frames,
    transforms_equal,
)
from .metric import (
    GramForm,
    ReciprocalBasis,
    cross_product,
    euclidean,
    gram_validate,
    hodge,
    hodge_alt,
    hodge_inv,
    orthogonal_flat,
    reciprocal,
    related_dual_sp,
    sp,
    sp_ext,
    standard_form,
    star_dual,
)
from .harness import THEOREMS, run_trials

__version__ = "0.1.0"
