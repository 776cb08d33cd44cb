"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class MotcalcError(Exception):
    exit_code = 1


class DomainError(MotcalcError, ValueError):
    """Invalid mathematical input (bad type/rank, negative twist, ...)."""


class ParseError(MotcalcError, ValueError):
    def __init__(self, message, line=None, column=None):
        self.reason = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class UnsupportedOperation(MotcalcError, TypeError):
    pass


class OrbitCapExceeded(MotcalcError):
    exit_code = 2

    def __init__(self, estimated, cap):
        self.estimated = estimated
        self.cap = cap
        super().__init__(
            f"orbit of estimated size {estimated} exceeds the orbit cap of {cap} points "
            f"(raise it with --max-orbit or MOTCALC_MAX_ORBIT)"
        )


class InvariantViolation(MotcalcError, AssertionError):
    exit_code = 3
