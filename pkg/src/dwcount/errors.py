"""Exception hierarchy shared by every dwcount module."""


class DwCountError(Exception):
    """Base class for all errors raised by dwcount."""


class NegativeGenus(DwCountError, ValueError):
    pass


class NonpositiveMultiplicity(DwCountError, ValueError):
    pass


class InvalidGroupOrder(DwCountError, ValueError):
    pass


class InvalidModulus(DwCountError, ValueError):
    pass


class ModulusMismatch(DwCountError, ValueError):
    pass


class NotAnInteger(DwCountError, ArithmeticError):
    pass


class IntegralityViolation(DwCountError, ArithmeticError):
    """A degree count failed to be a rational integer (implementation defect)."""


class NegativeCount(DwCountError, ArithmeticError):
    """A degree count came out negative (implementation defect)."""


class WorkLimitExceeded(DwCountError, RuntimeError):
    def __init__(self, estimate, limit, what="estimated work", hint=""):
        self.estimate = estimate
        self.limit = limit
        msg = f"{what} {estimate} exceeds the limit {limit}"
        super().__init__(f"{msg} ({hint})" if hint else msg)


class ParseError(DwCountError, ValueError):
    def __init__(self, offset, expected, text=""):
        self.offset = offset
        self.expected = expected
        self.text = text
        super().__init__(f"parse error at offset {offset}: expected {expected}")


class NonCoprimeWarning(UserWarning):
    """Seifert pair (a, b) with gcd(a, b) != 1; evaluated anyway."""
