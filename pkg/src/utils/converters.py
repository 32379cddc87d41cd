from __future__ import annotations

import asyncio
import typing as T
from concurrent.futures import Executor
from functools import partial, wraps

__all__ = ("to_async",)


class to_async:
    """
    Turns a blocking solver call into a coroutine run on `executor`,
    or on the loop's default executor when none is given.
    """

    def __init__(self, *, executor: T.Optional[Executor] = None):
        self.executor = executor

    def __call__(self, fn: T.Callable[..., T.Any]):
        @wraps(fn)
        async def wrapper(*args, **kwargs):
            loop = asyncio.get_running_loop()
            return await loop.run_in_executor(self.executor, partial(fn, *args, **kwargs))

        return wrapper
