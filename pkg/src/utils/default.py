__all__ = ("chunk_sizes",)


def chunk_sizes(total: int, size: int):
    """Yields the sizes of consecutive chunks that add up to total."""
    while total > 0:
        yield min(size, total)
        total -= size
