"""Permutations, pattern containment and the interval predicates used by the rules engine.

Positions in the public API are 1-indexed, matching the usual one-line
notation ``p_1 p_2 ... p_n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Container, Iterable, Optional, Sequence


class Perm(tuple):
    """A permutation of ``1..n`` stored as its one-line value sequence.

    >>> Perm.parse("52314")
    Perm('52314')
    >>> str(Perm([10, 1, 2, 3, 4, 5, 6, 7, 8, 9]))
    '10,1,2,3,4,5,6,7,8,9'
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()) -> "Perm":
        values = tuple(values)
        n = len(values)
        if sorted(values) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {values!r}")
        return super().__new__(cls, values)

    @classmethod
    def parse(cls, text: str) -> "Perm":
        return cls(parse_values(text))

    def __str__(self) -> str:
        return format_perm(self)

    def __repr__(self) -> str:
        return f"Perm({format_perm(self)!r})"


def parse_values(text: str) -> tuple[int, ...]:
    """Parse the shared text format: ``52314`` or ``10,3,1,2,...``."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [s.strip() for s in text.split(",")]
        if not all(s.isdigit() for s in parts):
            raise ValueError(f"malformed comma-separated permutation: {text!r}")
        return tuple(int(s) for s in parts)
    if not text.isdigit():
        raise ValueError(f"malformed permutation: {text!r}")
    if "0" in text:
        raise ValueError(f"compact form cannot contain 0 (use commas for n > 9): {text!r}")
    return tuple(int(c) for c in text)


def parse_perm(text: str) -> Perm:
    return Perm.parse(text)


def format_perm(values: Sequence[int]) -> str:
    if len(values) <= 9:
        return "".join(map(str, values))
    return ",".join(map(str, values))


def standardize(word: Sequence[int]) -> Perm:
    """Return the permutation order-isomorphic to ``word`` (461 -> 231)."""
    word = tuple(word)
    if len(set(word)) != len(word):
        raise ValueError(f"standardize needs distinct entries: {word!r}")
    rank = {v: r for r, v in enumerate(sorted(word), 1)}
    return tuple.__new__(Perm, (rank[v] for v in word))


@lru_cache(maxsize=None)
def _compile(q: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    # For each pattern index j: the earlier indices holding the nearest smaller
    # and nearest larger values (-1 when absent). A candidate for q[j] only has
    # to sit between the text values matched at those two indices.
    bounds = []
    for j, v in enumerate(q):
        lo = hi = -1
        for i in range(j):
            w = q[i]
            if w < v and (lo < 0 or w > q[lo]):
                lo = i
            elif w > v and (hi < 0 or w < q[hi]):
                hi = i
        bounds.append((lo, hi))
    return tuple(bounds)


def find_occurrence(p: Sequence[int], q: Sequence[int]) -> Optional[tuple[int, ...]]:
    """Lexicographically least 1-indexed positions of an occurrence of ``q`` in ``p``."""
    q = tuple(q)
    k, n = len(q), len(p)
    if k == 0:
        return ()
    if k > n:
        return None
    bounds = _compile(q)
    top = max(p) + 1
    matched = [0] * k
    idx = [0] * k

    def search(j: int, start: int) -> bool:
        if j == k:
            return True
        lo, hi = bounds[j]
        lo_v = matched[lo] if lo >= 0 else -1
        hi_v = matched[hi] if hi >= 0 else top
        for i in range(start, n - k + j + 1):
            v = p[i]
            if lo_v < v < hi_v:
                matched[j] = v
                idx[j] = i
                if search(j + 1, i + 1):
                    return True
        return False

    if search(0, 0):
        return tuple(i + 1 for i in idx)
    return None


def contains(p: Sequence[int], q: Sequence[int]) -> bool:
    return find_occurrence(p, q) is not None


def avoids(p: Sequence[int], q: Sequence[int]) -> bool:
    return find_occurrence(p, q) is None


def delete_entry(p: Sequence[int], i: int) -> Perm:
    """Remove the entry at 1-indexed position ``i`` and standardize."""
    n = len(p)
    if not 1 <= i <= n:
        raise IndexError(f"position {i} out of range 1..{n}")
    removed = p[i - 1]
    return tuple.__new__(Perm, (v - 1 if v > removed else v for j, v in enumerate(p) if j != i - 1))


@dataclass(frozen=True)
class IntervalSpec:
    """Inclusive 1-indexed span ``start..end``, optionally exempting one token value."""

    start: int
    end: int
    modulo: Optional[int] = None

    def check(self, n: int) -> None:
        if not 1 <= self.start <= self.end <= n:
            raise ValueError(f"invalid interval {self.start}..{self.end} for length {n}")
        if self.modulo is not None and not 1 <= self.modulo <= n:
            raise ValueError(f"modulo value {self.modulo} outside 1..{n}")


def right_contiguous(p: Sequence[int], spec: IntervalSpec, ignore: Container[int] = ()) -> bool:
    """True iff nothing after the span falls in the span's value range.

    ``spec.modulo`` and any value in ``ignore`` are exempt.
    """
    spec.check(len(p))
    tau = p[spec.start - 1:spec.end]
    lo, hi = min(tau), max(tau)
    for v in p[spec.end:]:
        if lo <= v <= hi and v != spec.modulo and v not in ignore:
            return False
    return True


def segment_avoids(p: Sequence[int], start: int, end: int, q: Sequence[int]) -> bool:
    if not 1 <= start <= end <= len(p):
        raise ValueError(f"invalid segment {start}..{end} for length {len(p)}")
    return avoids(p[start - 1:end], q)
