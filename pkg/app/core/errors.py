"""Exception hierarchy. Each class names the exit status the CLI maps it to."""

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_INPUT = 3


class AlgebraToolkitError(Exception):
    exit_code = EXIT_FAILED


# --- Input errors ---

class InputError(AlgebraToolkitError):
    exit_code = EXIT_INPUT


class ParseError(InputError):
    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        self.message = message
        super().__init__(f"line {line}, column {column}: {message}")


class NotAdmissible(InputError):
    pass


class InvalidModule(InputError):
    pass


# --- Inconclusive outcomes ---

class Inconclusive(AlgebraToolkitError):
    exit_code = EXIT_INCONCLUSIVE


class InconclusiveIso(Inconclusive):
    pass


class SearchInfeasible(Inconclusive):
    pass


class RepInfiniteSuspected(Inconclusive):
    pass


class NonSplitField(Inconclusive):
    pass


# --- Failures (a bug or a counterexample) ---

class CrossCheckMismatch(AlgebraToolkitError):
    exit_code = EXIT_FAILED


class ValidationFailed(AlgebraToolkitError):
    exit_code = EXIT_FAILED
