"""Exception types shared across the package."""


class ExelError(Exception):
    """Base class for errors raised by this package."""


class MalformedSpec(ExelError):
    """A spec (groupoid, action, representation) is not well formed."""


class AxiomViolation(ExelError):
    """An object fails the axioms of the structure it claims to be."""

    def __init__(self, detail, report=None):
        super().__init__(detail)
        self.detail = detail
        self.report = report


class UnknownElement(ExelError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class MixedGroupoids(ExelError):
    """Operands live over different groupoids."""


class NonComposableWord(ExelError):
    pass


class NotRClosed(ExelError):
    """A subset E of G with g in E but r(g) not in E."""


class BudgetExceeded(ExelError):
    pass


class InvalidInput(ExelError):
    """An input object fails the checks a conversion requires."""

    def __init__(self, detail, report=None):
        super().__init__(detail)
        self.report = report


class ContextMismatch(ExelError):
    """Elements of two different crossed products were combined."""


class InconsistentResult(ExelError):
    """Two independent computations of the same quantity disagree."""
