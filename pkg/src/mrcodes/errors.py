"""Exception types shared across the package."""


class MrCodesError(Exception):
    """Base class for all errors raised by this package."""


# field
class NotPrime(MrCodesError):
    pass


class FieldTooLarge(MrCodesError):
    pass


class FieldMismatch(MrCodesError):
    pass


class DivisionByZero(MrCodesError, ZeroDivisionError):
    pass


# progfree
class RangeTooLarge(MrCodesError):
    pass


class ParamsTooSmall(MrCodesError):
    pass


class TooLarge(MrCodesError):
    pass


# family
class BadParams(MrCodesError):
    pass


class BadSet(MrCodesError):
    pass


class Collision(MrCodesError):
    pass


class PropertyViolation(MrCodesError):
    """A construction failed one of its own brute-force oracles."""


# mrcode
class Mismatch(MrCodesError):
    pass


class LengthMismatch(MrCodesError):
    pass


class NotInGroup(MrCodesError):
    pass


class MultipleErasuresInGroup(MrCodesError):
    pass


class NotCorrectable(MrCodesError):
    pass


class Inconsistent(MrCodesError):
    pass


# pipeline / cli
class FieldTooSmall(MrCodesError):
    pass


class TargetUnreachable(MrCodesError):
    pass


class ParseError(MrCodesError):
    def __init__(self, message, line, column):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
