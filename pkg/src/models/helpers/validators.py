from __future__ import annotations

import typing as T

import config as cfg
from utils.exceptions import PreconditionError, ScaleError

__all__ = ("CoordinateValidator", "PositiveValidator", "check_coords")


class CoordinateValidator:
    """
    A validator to check that integer coordinates fit in the configured bit width,
    so that squared distances stay within twice that width.
    """

    def __init__(self, bits: T.Optional[int] = None):
        self.bits = bits or cfg.COORD_BITS

    def __call__(self, value: int):
        if not isinstance(value, int) or isinstance(value, bool):
            raise ScaleError(value, self.bits)
        if abs(value) >= 1 << self.bits:
            raise ScaleError(value, self.bits)
        return value


class PositiveValidator:
    def __init__(self, name: str):
        self.name = name

    def __call__(self, value: int):
        if value <= 0:
            raise PreconditionError(f"`{self.name}` must be positive, got {value}.")
        return value


def check_coords(*values: int) -> None:
    validate = CoordinateValidator()
    for v in values:
        validate(v)
