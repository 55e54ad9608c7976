"""Exception hierarchy shared by all gamma2 modules."""


class Gamma2Error(Exception):
    """Base class for every error raised by this package."""


class ParseError(Gamma2Error, ValueError):
    pass


class DivisionByZero(Gamma2Error, ZeroDivisionError):
    pass


class DimensionMismatch(Gamma2Error, ValueError):
    pass


class BadGeneratorIndex(Gamma2Error, ValueError):
    pass


class GeneratorCountMismatch(Gamma2Error, ValueError):
    pass


class NotBinaryGroup(Gamma2Error, ValueError):
    pass


class InvalidParameter(Gamma2Error, ValueError):
    pass


class ConfigMismatch(Gamma2Error, ValueError):
    pass


class ScanTooLarge(Gamma2Error, ValueError):
    pass


class SamplingExhausted(Gamma2Error, RuntimeError):
    pass


class IdentityViolation(Gamma2Error, AssertionError):
    """Two routes to a quantity that must agree exactly did not.

    Never expected in practice; raised instead of silently picking one value.
    """


class InvalidConfig(InvalidParameter):
    """A representation config failed validation; ``violations`` lists why."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations) or "invalid config")
