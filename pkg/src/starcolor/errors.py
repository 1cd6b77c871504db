"""Exception types. Every error carries a stable ``code`` string for the CLI."""

from __future__ import annotations

from typing import TYPE_CHECKING, Any

if TYPE_CHECKING:
    from .verify import StarViolation


class StarColorError(Exception):
    code = "ERROR"

    def __init__(self, message: str = "", code: str | None = None) -> None:
        if code is not None:
            self.code = code
        super().__init__(f"{self.code}: {message}" if message else self.code)


class GraphError(StarColorError, ValueError):
    """LOOP_EDGE, DUPLICATE_EDGE, VERTEX_OUT_OF_RANGE."""


class ParamError(StarColorError, ValueError):
    """Bad constructor / colorer arguments (BAD_PARAMS, INVALID_SPEC, NOT_CUBIC, ...)."""

    code = "BAD_PARAMS"


class ColoringSizeMismatch(StarColorError, ValueError):
    code = "COLORING_SIZE_MISMATCH"


class ConstructionFailed(StarColorError, RuntimeError):
    """A constructive colorer produced (or could not extend to) an invalid coloring."""

    code = "CONSTRUCTION_FAILED"

    def __init__(
        self,
        message: str,
        case: str,
        violation: StarViolation | None = None,
        colors: Any = None,
    ) -> None:
        self.case = case
        self.violation = violation
        self.colors = colors
        super().__init__(f"[{case}] {message}")


class BudgetExhausted(StarColorError, RuntimeError):
    code = "BUDGET_EXHAUSTED"

    def __init__(self, lower: int, upper: int | None, nodes: int) -> None:
        self.lower = lower
        self.upper = upper
        self.nodes = nodes
        hi = "?" if upper is None else str(upper)
        super().__init__(f"search budget exhausted after {nodes} nodes; answer in [{lower}, {hi}]")
