"""Index machinery for the dimension-reduction identity: odd orders,
two-block index partitions, and sign patterns.

Blocks are strictly increasing, so the partitions with |head| = m are in
bijection with the m-element subsets of {1..d}. Enumeration order is
lexicographic in the head block, which fixes the summation order of every
consumer.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class IndexPartition:
    """A partition of {1..d} into a head block (size m >= 1) and the rest."""

    head: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self):
        if len(self.head) < 1:
            raise ValueError("head block must be nonempty")
        merged = sorted(self.head + self.tail)
        d = len(merged)
        if merged != list(range(1, d + 1)):
            raise ValueError("head and tail must partition {1..d}")
        if list(self.head) != sorted(self.head) or list(self.tail) != sorted(self.tail):
            raise ValueError("blocks must be strictly increasing")

    @property
    def dimension(self) -> int:
        return len(self.head) + len(self.tail)


@dataclass(frozen=True)
class SignPattern:
    """A sequence of +-1 signs of length m >= 1."""

    signs: tuple[int, ...]

    def __post_init__(self):
        if len(self.signs) < 1:
            raise ValueError("sign pattern must be nonempty")
        if any(s not in (1, -1) for s in self.signs):
            raise ValueError("signs must be +1 or -1")


def odd_set(d: int) -> list[int]:
    """All odd naturals not exceeding d, ascending."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    return list(range(1, d + 1, 2))


def enumerate_partitions(d: int, m: int) -> list[IndexPartition]:
    """All C(d, m) head/tail partitions of {1..d}, lexicographic by head."""
    if d < 1:
        raise ValueError(f"d must be >= 1, got {d}")
    if not 1 <= m <= d:
        raise ValueError(f"m must be in 1..{d}, got {m}")
    universe = range(1, d + 1)
    out = []
    for head in itertools.combinations(universe, m):
        tail = tuple(j for j in universe if j not in head)
        out.append(IndexPartition(head, tail))
    return out


def enumerate_signs(m: int) -> list[SignPattern]:
    """All 2^m sign patterns of length m, (+1, ..., +1) first."""
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    return [SignPattern(signs) for signs in itertools.product((1, -1), repeat=m)]
