from __future__ import annotations

from utils.bits import from_mask, iter_bits, lowest_bit, popcount, to_mask
from utils.default import chunk_sizes
from utils.formats import fmt_indices, fmt_ratio, plural


def test_plural_counts_and_nouns():
    assert f"{plural(1):record}" == "1 record"
    assert f"{plural(0):record}" == "0 records"
    assert f"{plural(2):vertex|vertices}" == "2 vertices"
    assert f"{plural(1):vertex|vertices}" == "1 vertex"
    assert f"{plural(12_500):violation}" == "12,500 violations"


def test_plural_counts_collections():
    assert f"{plural([3, 4, 5]):instance}" == "3 instances"
    assert f"{plural(frozenset({1})):instance}" == "1 instance"
    assert f"{plural(range(0)):row}" == "0 rows"


def test_fmt_helpers():
    assert fmt_ratio(None, 6) == ""
    assert fmt_ratio(0.5, 3) == "0.500"
    assert fmt_indices([0, 3, 7]) == "[0, 3, 7]"
    assert fmt_indices(range(20), limit=4) == "[0, 1, ..., 18, 19]"


def test_chunk_sizes():
    assert list(chunk_sizes(10, 4)) == [4, 4, 2]
    assert list(chunk_sizes(0, 4)) == []


def test_bitset_helpers():
    mask = to_mask([5, 0, 3])
    assert mask == 0b101001
    assert from_mask(mask) == (0, 3, 5)
    assert list(iter_bits(mask)) == [0, 3, 5]
    assert popcount(mask) == 3
    assert lowest_bit(0b101000) == 3
