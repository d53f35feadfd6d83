"""Exception types shared across the package."""


class IntegrityError(RuntimeError):
    """Exact-arithmetic cross-check failed; indicates a bug, never bad input."""


class OrderViolation(ValueError):
    """A composition left the commuting-involution framework.

    Carries the identifier of the violated rule in ``rule``.
    """

    def __init__(self, message: str, rule: str = ""):
        super().__init__(message)
        self.rule = rule


class DataError(ValueError):
    """Malformed or inconsistent data table; ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line
