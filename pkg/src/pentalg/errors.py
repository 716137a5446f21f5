"""Exception hierarchy shared by every module."""


class PentalgError(Exception):
    pass


class MismatchedCarrier(PentalgError, ValueError):
    pass


class TooLarge(PentalgError, ValueError):
    pass


class SizeCap(PentalgError, ValueError):
    pass


class NotAssociative(PentalgError, ValueError):
    pass


class NotAnApa(PentalgError, ValueError):
    pass


class InternalInconsistency(PentalgError, AssertionError):
    """A relation that must hold by construction failed: an implementation bug."""


class TargetNotInVariety(PentalgError, ValueError):
    pass


class TooManyGenerators(PentalgError, ValueError):
    pass


class ProductOverflow(PentalgError, ValueError):
    pass


class StarNotInVariety(PentalgError, ValueError):
    pass


class ConstructionInconsistent(PentalgError, AssertionError):
    pass


class NonTerminating(PentalgError, RuntimeError):
    pass


class NotClosed(PentalgError, ValueError):
    pass


class GammaNotIdempotentEndomorphism(PentalgError, ValueError):
    pass


class ValidationFailed(PentalgError, ValueError):
    pass


class DotNotAssociative(PentalgError, ValueError):
    pass


class AlgebraSyntaxError(PentalgError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(loc + message)


class EntryRangeError(PentalgError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}" if line else message)
