from .cyclo_api import Cyclo
from .cyclo_dataadapter import CycloDataAdapter, CycloResult
from .cyclo_suites import SuiteResult, check_fixtures
from .exceptions import (
    TheCycloLabException,
    InvalidArgument,
    DivisionByZero,
    NotInvertible,
    InexactDivision,
    InsufficientPrecision,
    InvariantViolation,
    TheoremViolation,
    EigenvalueRejected,
    )

from .cyclo_module import (
    primes_in_range,
    parse_range,
    parse_split,
    parse_int_list,
    make_rng,
    fixture_expression,
    read_fixture,
    )
