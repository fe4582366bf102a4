"""Monotone maps between finite ordinals.

The ordinal ``[n]`` is ``{0, ..., n-1}``.  A monotone ``[n] -> [m]`` is stored
as its tuple of values together with the target size (the source size is the
length of the tuple).  Composition is written in diagrammatic order:
``compose(f, g)`` means "first ``f``, then ``g``".
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator


@dataclass(frozen=True)
class Monotone:
    values: tuple[int, ...]
    target_size: int

    def __post_init__(self):
        vals = tuple(self.values)
        object.__setattr__(self, "values", vals)
        if self.target_size < 0:
            raise ValueError("negative target size")
        prev = 0
        for v in vals:
            if not 0 <= v < self.target_size:
                raise ValueError(f"value {v} outside [{self.target_size}]")
            if v < prev:
                raise ValueError(f"values {vals} are not monotone")
            prev = v

    @property
    def source_size(self) -> int:
        return len(self.values)

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __repr__(self):
        return f"Monotone({list(self.values)}, {self.target_size})"

    def is_injective(self) -> bool:
        return all(a < b for a, b in zip(self.values, self.values[1:]))

    def is_surjective(self) -> bool:
        return set(self.values) == set(range(self.target_size))

    def is_identity(self) -> bool:
        return self.source_size == self.target_size and self.values == tuple(range(self.target_size))

    def image(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.values)))

    def preimage(self, i: int) -> range:
        return range(*preimage_interval(self, i))


def identity(n: int) -> Monotone:
    return Monotone(tuple(range(n)), n)


def compose(f: Monotone, g: Monotone) -> Monotone:
    """First ``f`` then ``g``: ``compose(f, g)(i) == g(f(i))``."""
    if f.target_size != g.source_size:
        raise ValueError(f"cannot compose {f} with {g}")
    return Monotone(tuple(g.values[v] for v in f.values), g.target_size)


def face(i: int, n: int) -> Monotone:
    """The injection ``[n] -> [n+1]`` whose image misses ``i``."""
    if not 0 <= i <= n:
        raise ValueError(f"face index {i} out of range for [{n}]")
    return Monotone(tuple(j if j < i else j + 1 for j in range(n)), n + 1)


def wraith_dual(f: Monotone) -> Monotone:
    """The dual ``[m+1] -> [n+1]`` of ``f: [n] -> [m]``.

    Sends ``i`` to the least ``j`` with ``f(j) >= i``, or to ``n`` if there is
    none.  This indexes regular heights, where ``f`` indexes singular ones.
    """
    return _wraith(f.values, f.target_size)


@lru_cache(maxsize=4096)
def _wraith(values: tuple[int, ...], m: int) -> Monotone:
    return Monotone(tuple(bisect_left(values, i) for i in range(m + 1)), len(values) + 1)


def preimage_interval(f: Monotone, i: int) -> tuple[int, int]:
    """Half-open ``[p, q)`` of source indices mapping to ``i``.

    When nothing maps to ``i`` the interval is empty and positioned at the
    number of values below ``i``.
    """
    if not 0 <= i < f.target_size:
        raise ValueError(f"{i} is outside the target [{f.target_size}]")
    p = bisect_left(f.values, i)
    q = bisect_left(f.values, i + 1)
    return p, q


def enumerate_monotones(n: int, m: int) -> Iterator[Monotone]:
    """All monotones ``[n] -> [m]`` in lexicographic order."""
    for values in combinations_with_replacement(range(m), n):
        yield Monotone(values, m)


def face_decomposition(f: Monotone) -> list[Monotone]:
    """Face maps whose composite (left to right) is the injection ``f``."""
    if not f.is_injective():
        raise ValueError(f"{f} is not injective")
    missing = sorted(set(range(f.target_size)) - set(f.values))
    return [face(i, f.source_size + k) for k, i in enumerate(missing)]
