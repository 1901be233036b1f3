"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed polynomial or monomial text.

    ``position`` is the 0-based character offset where parsing stopped.
    """

    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class ResourceLimitError(RuntimeError):
    """A computation would exceed a configured arity or tuple-count cap."""


class InternalInconsistencyError(AssertionError):
    """A computed value disagrees with a closed form that must always hold."""
