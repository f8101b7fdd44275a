"""Exception types shared across the package.

The CLI maps these onto exit codes: bad input or bad arguments exit 2,
scale-guard violations exit 3, internal invariant violations exit 4.
"""

from __future__ import annotations


class GraphFormatError(ValueError):
    """Malformed graph6 or edge-list input.

    ``line`` (1-based) is set for edge-list input, ``offset`` (0-based byte
    position) for graph6 input, when known.
    """

    def __init__(self, message: str, *, line: int | None = None, offset: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        elif offset is not None:
            message = f"byte {offset}: {message}"
        super().__init__(message)
        self.line = line
        self.offset = offset


class ScaleLimitError(Exception):
    """An operation was asked to exceed its size guard.

    Guards exist because the exact kernels are exponential; guarded entry
    points take ``unsafe_override_guards=True`` to accept the cost
    explicitly where an override is meaningful at all.
    """


class InvariantViolationError(Exception):
    """An internal cross-check failed.

    This is always worth reporting: it either means a bug in this package or
    a counterexample to one of the structure theorems the package encodes.
    The offending graph is included as graph6 whenever available.
    """

    def __init__(self, message: str, *, graph6: str | None = None):
        if graph6 is not None:
            message = f"{message} [graph6: {graph6}]"
        super().__init__(message)
        self.graph6 = graph6
