# errors.py
"""Exception hierarchy shared by the numerical modules, the harness and the CLI."""


class ModularError(Exception):
    """Base class for every error raised by modcert."""


class DomainError(ModularError, ValueError):
    """An argument lies outside the domain of the requested operation."""


class NonConvergenceError(ModularError, ArithmeticError):
    """A series or root solver hit its iteration cap before reaching tolerance."""

    def __init__(self, message: str, iterations: int = 0, last_value: float | None = None):
        super().__init__(message)
        self.iterations = iterations
        self.last_value = last_value


class UnsupportedRegimeError(ModularError, NotImplementedError):
    """The requested parameters fall in a regime the evaluators do not cover."""


class NumericalOverflowError(ModularError, OverflowError):
    """A result exceeds the double precision range."""


class UnknownSuiteError(ModularError, LookupError):
    """No suite, shape property, formula or figure is registered under the id."""

    def __init__(self, kind: str, identifier: str, known: list[str] | None = None):
        hint = f" Known ids: {', '.join(sorted(known))}" if known else ""
        super().__init__(f"Unknown {kind} '{identifier}'.{hint}")
        self.kind = kind
        self.identifier = identifier
