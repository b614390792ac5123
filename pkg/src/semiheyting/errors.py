class SemiHeytingError(Exception):
    pass


class MalformedInputError(SemiHeytingError, ValueError):
    """Table shapes, indices or file contents that cannot even be checked."""


class LawViolation(SemiHeytingError):
    """Raised by constructors when a well-formed table breaks an axiom.

    The attached ``report`` names the law and the witnessing tuple.
    """

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


class SizeCapError(SemiHeytingError):
    def __init__(self, size, cap):
        super().__init__(f"size {size} exceeds the configured cap of {cap}")
        self.size = size
        self.cap = cap


class TermSyntaxError(SemiHeytingError, ValueError):
    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} at position {position}"
        super().__init__(message)
        self.position = position


class MissingBindingError(SemiHeytingError, KeyError):
    def __init__(self, name):
        super().__init__(name)
        self.name = name

    def __str__(self):
        return f"no value bound for variable {self.name!r}"


class TranslationUnsoundError(SemiHeytingError):
    def __init__(self, direction, report):
        super().__init__(f"{direction}-translation is not a semi-Heyting algebra: {report}")
        self.direction = direction
        self.report = report


class ProofFormatError(SemiHeytingError, ValueError):
    pass
