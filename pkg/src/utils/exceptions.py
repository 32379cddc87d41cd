from __future__ import annotations

import typing as T

from constants import ExitCode

__all__ = (
    "GeoError",
    "ScaleError",
    "InstanceParseError",
    "ObjectIndexError",
    "InfeasibleSelection",
    "PreconditionError",
    "UnsupportedShape",
    "BudgetExhausted",
    "VerificationFailed",
)


class GeoError(Exception):
    exit_code: ExitCode = ExitCode.invalid

    def to_dict(self) -> dict:
        return {"error": type(self).__name__, "message": str(self), "exit_code": int(self.exit_code)}


class ScaleError(GeoError):
    def __init__(self, value: int, bits: int):
        self.value = value
        super().__init__(f"Coordinate `{value}` does not fit in {bits} bits at the configured scale.")


class InstanceParseError(GeoError):
    def __init__(self, message: str, *, line: T.Optional[int] = None, field: T.Optional[str] = None):
        self.line = line
        self.field = field

        where = []
        if line is not None:
            where.append(f"line {line}")
        if field:
            where.append(f"field `{field}`")

        super().__init__(f"{message} ({', '.join(where)})" if where else message)

    def to_dict(self) -> dict:
        return {**super().to_dict(), "line": self.line, "field": self.field}


class ObjectIndexError(GeoError, IndexError):
    def __init__(self, index: int, size: int):
        super().__init__(f"Object index {index} is out of range for an instance with {size} objects.")


class InfeasibleSelection(GeoError):
    def __init__(self, problem: str, reason: str = ""):
        self.problem = problem
        super().__init__(f"Selection is not {problem.upper()}-feasible." + (f" {reason}" if reason else ""))


class PreconditionError(GeoError):
    pass


class UnsupportedShape(GeoError):
    def __init__(self, kind: str, where: str):
        super().__init__(f"Objects of kind `{kind}` are not supported by {where}.")


class BudgetExhausted(GeoError):
    exit_code = ExitCode.budget

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"Node budget exhausted after {nodes} nodes; result is not proven optimal.")


class VerificationFailed(GeoError):
    def __init__(self, failures: T.Sequence[str]):
        self.failures = list(failures)
        super().__init__(f"Verification failed: {'; '.join(self.failures)}.")
