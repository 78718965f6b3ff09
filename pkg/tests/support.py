"""Shared scraps for the test suite: a build cache and literal constructors.

The literal constructors build expected values straight from image tuples so
that frozen expectations do not round-trip through the library's own helpers.
"""

from __future__ import annotations

import functools

from korbits.catalog import build
from korbits.weyl import SignedPerm


@functools.lru_cache(maxsize=None)
def cached_build(family: str, *params: int):
    return build(family, *params)


def perm(*images: int) -> SignedPerm:
    return SignedPerm(tuple(images))


def tr(i: int, j: int, rank: int) -> SignedPerm:
    """The transposition (i j), written out as a one-line image tuple."""
    images = list(range(1, rank + 1))
    images[i - 1], images[j - 1] = j, i
    return SignedPerm(tuple(images))


def flip(coords: tuple[int, ...], rank: int) -> SignedPerm:
    """Sign flips on the given coordinates, written out literally."""
    return SignedPerm(
        tuple(-v if v in coords else v for v in range(1, rank + 1))
    )
