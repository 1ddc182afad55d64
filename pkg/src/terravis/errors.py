"""Exception types raised across the package."""

from __future__ import annotations


class TerravisError(Exception):
    """Base class for all errors raised by terravis."""


class ParseError(TerravisError, ValueError):
    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


class DuplicateAbscissa(TerravisError, ValueError):
    def __init__(self, i: int, j: int, x) -> None:
        super().__init__(f"vertices {i} and {j} share x-coordinate {x}")
        self.indices = (i, j)


class TooSmall(TerravisError, ValueError):
    pass


class TooLarge(TerravisError, ValueError):
    """An exhaustive search was asked to run beyond its size guard."""


class NotInducedCycle(TerravisError, ValueError):
    pass


class NotAFunnel(TerravisError, ValueError):
    def __init__(self, reason: str, detail: str = "") -> None:
        msg = f"not a funnel ({reason})"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.reason = reason


class IntervalViolation(TerravisError, ValueError):
    def __init__(self, vertex, chain: str, indices) -> None:
        super().__init__(
            f"neighbors of {vertex} on chain {chain} are not consecutive: {sorted(indices)}"
        )
        self.vertex = vertex
        self.chain = chain


class XViolation(TerravisError, ValueError):
    def __init__(self, witness) -> None:
        super().__init__(f"vertex order violates the X-property: {list(witness.vertices)}")
        self.witness = witness
