"""Exception hierarchy shared by the library and the command line."""


class PmcAtlasError(Exception):
    """Base class for every error raised by pmc_atlas."""


class InputError(PmcAtlasError, ValueError):
    """Bad arguments: out-of-range vertices, malformed sets, bad parameters."""


class ParseError(InputError):
    """A graph file could not be parsed."""

    def __init__(self, message: str, lineno: int | None = None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class BudgetError(PmcAtlasError):
    """A computation would exceed its configured size or search budget."""


class ContractError(PmcAtlasError):
    """A caller violated a documented precondition."""


class InvariantViolation(PmcAtlasError, AssertionError):
    """A proven structural property failed; this is a bug or a counterexample."""
