from .attributes import UnitEigencomponent, SurveyReport
from .units import (
    cyclotomic_unit,
    eigencomponent,
    classify_eigencomponent,
    unit_quotient_check,
    unit_closed_form,
    unit_survey,
    raw_normalized_check,
    )
