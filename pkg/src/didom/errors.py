"""Exception types shared across the package."""


class SizeLimitError(Exception):
    """An input exceeds the configured cap for exhaustive computation.

    Raised instead of silently falling back to an approximation: every
    solver in this package is exact or refuses to run.
    """


class InfeasibleStructureError(Exception):
    """The requested object cannot exist on this digraph.

    Total variants (total dominating sets, total Roman/Italian functions,
    total 2-dominating sets) are only defined on digraphs without isolated
    vertices; asking for one elsewhere is an error, not a ``False``.
    """


class ParseError(ValueError):
    """Malformed digraph text; carries the 1-based offending line number."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line
