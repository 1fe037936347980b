"""The 20-element basis for a depth-2 stack followed by an infinite stack, and basis mining."""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from .perm import Perm, contains, delete_entry, parse_perm, standardize

BASIS_TEXT = (
    "51234", "52134", "51243", "52143", "51423", "52413",
    "645123", "645213", "416235", "426135", "416253", "426153",
    "4175623", "4275613", "4137256", "4237156", "4137265", "4237165",
    "41386725", "42386715",
)

BasisSet = frozenset  # frozenset[Perm]

_BASIS = frozenset(parse_perm(s) for s in BASIS_TEXT)


def basis_table() -> frozenset[Perm]:
    return _BASIS


def sorted_perms(perms: Iterable[Sequence[int]]) -> list[Perm]:
    """Order by length, then lexicographically."""
    return sorted((tuple.__new__(Perm, p) for p in perms), key=lambda p: (len(p), p))


def swap_one_two(p: Sequence[int]) -> Perm:
    """Interchange the entries with values 1 and 2."""
    return tuple.__new__(Perm, (3 - v if v <= 2 else v for v in p))


def is_antichain(perms: Iterable[Sequence[int]]) -> bool:
    perms = list(perms)
    return not any(p != q and contains(p, q) for p in perms for q in perms)


@lru_cache(maxsize=None)
def _by_length(basis: frozenset) -> tuple[tuple[int, ...], ...]:
    # shortest first: most rejections are found by the length-5 patterns
    return tuple(sorted(basis, key=lambda b: (len(b), b)))


def avoids_basis(p: Sequence[int], basis: frozenset = _BASIS) -> bool:
    n = len(p)
    for b in _by_length(basis):
        if len(b) > n:
            break
        if contains(p, b):
            return False
    return True


Oracle = Callable[[Sequence[int]], bool]


def _all_patterns_members(sigma, member) -> bool:
    n = len(sigma)
    for k in range(n - 1, -1, -1):
        for idx in itertools.combinations(range(n), k):
            if not member(standardize([sigma[i] for i in idx])):
                return False
    return True


def mine_basis(member: Oracle, n: int, strict: bool = False) -> list[Perm]:
    """Length-n permutations outside the class whose one-entry deletions are all inside.

    ``member`` must describe a pattern-closed class; with ``strict=True`` every
    proper pattern is checked instead of only the one-entry deletions.
    """
    cached = lru_cache(maxsize=None)(lambda p: member(p))
    found = []
    for t in itertools.permutations(range(1, n + 1)):
        sigma = tuple.__new__(Perm, t)
        if cached(sigma):
            continue
        if strict:
            minimal = _all_patterns_members(sigma, cached)
        else:
            minimal = all(cached(delete_entry(sigma, i)) for i in range(1, n + 1))
        if minimal:
            found.append(sigma)
    return found


def lemma1_extend(sigma: Sequence[int]) -> Perm:
    """Shift every entry of ``sigma`` up by 3 and append 2, 1, 3."""
    return tuple.__new__(Perm, tuple(v + 3 for v in sigma) + (2, 1, 3))
