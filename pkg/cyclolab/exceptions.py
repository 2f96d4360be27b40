class TheCycloLabException(Exception):
    pass


class InvalidArgument(TheCycloLabException, ValueError):
    pass


class DivisionByZero(TheCycloLabException, ZeroDivisionError):
    pass


class NotInvertible(TheCycloLabException, ArithmeticError):
    pass


class InexactDivision(TheCycloLabException, ArithmeticError):
    pass


class InsufficientPrecision(TheCycloLabException):
    pass


class InvariantViolation(TheCycloLabException):
    """An internal self-check failed. Always a bug."""
    pass


class TheoremViolation(TheCycloLabException):
    """
    A congruence law failed on inputs meeting its hypotheses

    Attributes
    ----------
    record : object
        the offending record, serialized into the failure report
    """

    def __init__(self, message: str, record=None):
        super().__init__(message)
        self.record = record


class EigenvalueRejected(InvalidArgument):
    """
    An eigenvalue set failed validation

    Attributes
    ----------
    rule : str
        identifier of the violated rule, e.g. "mu-equals-u"
    mu : int
        the rejected eigenvalue
    """

    def __init__(self, rule: str, mu: int):
        super().__init__(f'eigenvalue rejected: rule={rule}, mu={mu}')
        self.rule = rule
        self.mu = mu
