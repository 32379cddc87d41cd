from __future__ import annotations

import typing as T

import humanize

__all__ = ("plural", "fmt_ratio", "fmt_indices")


class plural:
    """
    A count with its noun, for log lines and failure messages:
    `f"{plural(records):record}"` gives `150 records`. Collections count their items;
    `noun|nouns` spells out an irregular plural.
    """

    __slots__ = ("count",)

    def __init__(self, value: T.Union[int, T.Sized]):
        self.count = value if isinstance(value, int) else len(value)

    def __format__(self, spec: str) -> str:
        one, _, many = spec.partition("|")
        noun = one if self.count == 1 else many or f"{one}s"
        return f"{humanize.intcomma(self.count)} {noun}"


def fmt_ratio(value, precision: int) -> str:
    return "" if value is None else f"{value:.{precision}f}"


def fmt_indices(indices, limit: int = 12) -> str:
    """`[0, 3, 7]`, eliding the middle of long index lists."""
    indices = list(indices)
    if len(indices) <= limit:
        return str(indices)
    head = ", ".join(map(str, indices[: limit // 2]))
    tail = ", ".join(map(str, indices[-limit // 2 :]))
    return f"[{head}, ..., {tail}]"
