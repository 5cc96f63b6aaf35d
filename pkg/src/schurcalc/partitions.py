"""Integer partitions and Young diagram combinatorics.

Partitions are stored without trailing zeros, so ``Partition(())`` is the
unique empty partition and equality is plain tuple equality.
"""

from __future__ import annotations

from functools import cache
from math import factorial
from typing import Iterable, Iterator

from .errors import BoundExceeded, EmptyPartition, ParseError

#: largest n accepted by :func:`partitions_of`
MAX_ENUMERATION_SIZE = 30


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Behaves like the tuple of its parts; ``len(λ)`` is the length and
    ``λ.size`` the number of boxes.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()) -> Partition:
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise ValueError(f"non-positive part {x} in {parts}")
            if i and x > parts[i - 1]:
                raise ValueError(f"parts not weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build from parts that may be unsorted or contain zeros."""
        return cls(sorted((x for x in parts if x), reverse=True))

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The 1-indexed part ``λ_i``, zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    def __str__(self) -> str:
        return format_partition(self)


EMPTY = Partition()


def parse_partition(text: str) -> Partition:
    """Parse ``"5,2,2,1"`` style text; ``"0"`` is the empty partition."""
    text = text.strip()
    if not text:
        raise ParseError("empty partition text (use '0' for the empty partition)")
    if text == "0":
        return EMPTY
    parts = []
    for token in text.split(","):
        token = token.strip()
        try:
            value = int(token)
        except ValueError:
            raise ParseError(f"not an integer: {token!r}") from None
        if value < 1:
            raise ParseError(f"parts must be positive, got {value}")
        parts.append(value)
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise ParseError(f"parts must be weakly decreasing: {text!r}")
    return Partition(parts)


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "0"


def rectangle(p: int, q: int) -> Partition:
    """The partition ``(p)^q``: q rows, each of length p."""
    if p < 0 or q < 0:
        raise ValueError(f"rectangle sides must be nonnegative, got {(p, q)}")
    if p == 0 or q == 0:
        return EMPTY
    return Partition((p,) * q)


def transpose(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(sum(1 for x in lam if x >= i) for i in range(1, lam[0] + 1))


def contains(mu: Partition, lam: Partition) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def has_cell(lam: Partition, i: int, j: int) -> bool:
    """Whether the box in row ``i``, column ``j`` (1-indexed) lies in ``lam``."""
    if i < 1 or j < 1:
        raise ValueError(f"cells are 1-indexed, got {(i, j)}")
    return i <= len(lam) and j <= lam[i - 1]


def is_rectangular(lam: Partition) -> tuple[int, int] | None:
    """Return ``(p, q)`` when ``lam == (p)^q``, otherwise None."""
    if not lam or lam[0] != lam[-1]:
        return None
    return lam[0], len(lam)


def _partitions_bounded(n: int, largest: int) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


@cache
def _partitions_cached(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _partitions_bounded(n, n))


def partitions_of(n: int, bound: int = MAX_ENUMERATION_SIZE) -> list[Partition]:
    """All partitions of ``n`` in reverse-lexicographic order."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise BoundExceeded(f"partitions_of({n}) exceeds bound {bound}")
    return list(_partitions_cached(n))


def partitions_up_to(n: int) -> list[Partition]:
    """All partitions of size 0..n, grouped by size."""
    return [lam for k in range(n + 1) for lam in partitions_of(k)]


def partitions_inside(lam: Partition) -> Iterator[Partition]:
    """Every partition whose diagram is contained in ``lam`` (including both ends)."""

    def rec(i: int, cap: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        yield ()
        for x in range(min(cap, lam[i]), 0, -1):
            for rest in rec(i + 1, x):
                yield (x,) + rest

    for parts in rec(0, lam[0] if lam else 0):
        yield Partition(parts)


def hook_lengths(lam: Partition) -> list[int]:
    lt = transpose(lam)
    return [lam[i] - j + lt[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


@cache
def specht_dim(lam: Partition) -> int:
    """Dimension of the Specht module of ``lam`` by the hook length formula."""
    if not lam:
        raise EmptyPartition("specht_dim is defined for nonempty partitions only")
    num = factorial(lam.size)
    den = 1
    for h in hook_lengths(lam):
        den *= h
    dim, rem = divmod(num, den)
    assert rem == 0, f"hook product does not divide {lam.size}! for {lam}"
    return dim


def count_standard_tableaux(lam: Partition) -> int:
    """Count standard Young tableaux by removing corner boxes recursively."""
    return _syt_count(Partition(lam))


@cache
def _syt_count(lam: Partition) -> int:
    if not lam:
        return 1
    total = 0
    for i in range(len(lam)):
        if i + 1 == len(lam) or lam[i] > lam[i + 1]:
            smaller = list(lam)
            smaller[i] -= 1
            total += _syt_count(Partition.from_parts(smaller))
    return total


def add_box_options(lam: Partition) -> list[Partition]:
    """Partitions obtained from ``lam`` by adding one box."""
    out = []
    for i in range(len(lam) + 1):
        if i == 0 or lam[i - 1] > lam.part(i + 1):
            grown = list(lam) + [0]
            grown[i] += 1
            out.append(Partition.from_parts(grown))
    return out
