from .attributes import (
    PROVENANCES,
    SingularCandidate,
    EigenSpace,
    GammaRecord,
    ValuationAnalysis,
    ProductClassification,
    QuotientCheck,
    )
from .singular import (
    eigen_basis,
    verify_closed_form,
    eigen_space,
    closed_form_element,
    synthesize_closed_form,
    gamma_recurrence,
    recurrence_candidate,
    eigen_candidate,
    analyze_valuation,
    is_primary,
    product_classification,
    normalize_leading_coefficient,
    quotient_primary_check,
    same_eigenvalue_reduction,
    )
