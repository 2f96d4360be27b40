from .polynomial import FpPoly
from .groupring import GroupRingElem
from .eigenset import EigenSet
from .attributes import ValidationOptions, RankProfile, BoundComparison, BoundsReport
from .annihilator import (
    HYPOTHESIS_DEPENDENT,
    require_odd_prime,
    require_primitive_root,
    primitive_root,
    power_table,
    u_index,
    discrete_log,
    poly_from_roots,
    poly_divrem,
    induced_eigenvalues,
    induced_min_poly,
    annihilator_cofactor,
    symmetric_coefficients,
    reassemble_from_symmetric,
    rank_inequality_report,
    stickelberger_element,
    groupring_eval_scalar,
    validate_eigenvalue_set,
    minus_plus_split,
    structure_bounds_check,
    )
