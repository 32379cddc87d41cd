from __future__ import annotations

from functools import wraps
from typing import TYPE_CHECKING, Optional

from constants import Problem
from utils.exceptions import InfeasibleSelection

if TYPE_CHECKING:
    from models import Instance

__all__ = ("feasible_selection",)


class feasible_selection:
    """
    Rejects calls whose selection is infeasible. The wrapped function takes
    (inst, sel, ...); without a fixed problem the third positional argument
    (or the `problem` keyword) names it.
    """

    def __init__(self, problem: Optional[Problem] = None):
        self.problem = problem

    def __call__(self, fn):
        @wraps(fn)
        def wrapper(inst: Instance, sel: int, *args, **kwargs):
            from .incidence import is_feasible_ds, is_feasible_is

            problem = self.problem or kwargs.get("problem") or args[0]
            check = is_feasible_is if problem is Problem.IS else is_feasible_ds
            if not check(inst, sel):
                raise InfeasibleSelection(problem.value, f"({fn.__name__})")

            return fn(inst, sel, *args, **kwargs)

        return wrapper
