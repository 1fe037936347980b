"""Fan exhaustive per-permutation work out over worker processes.

Work is split by two-entry prefix; results come back in lexicographic order
regardless of the number of workers.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional

from .perm import Perm


def prefixes(n: int) -> list[tuple[int, ...]]:
    return list(itertools.permutations(range(1, n + 1), min(n, 2)))


def perms_with_prefix(n: int, prefix: tuple[int, ...]) -> Iterator[Perm]:
    rest = [v for v in range(1, n + 1) if v not in prefix]
    for tail in itertools.permutations(rest):
        yield tuple.__new__(Perm, prefix + tail)


def map_chunks(fn: Callable, n: int, extra: tuple = (), jobs: Optional[int] = 1) -> list:
    """``[fn(n, prefix, *extra) for prefix in prefixes(n)]``, possibly in parallel."""
    chunks = prefixes(n)
    if jobs == 1 or len(chunks) <= 1:
        return [fn(n, prefix, *extra) for prefix in chunks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(fn, n, prefix, *extra) for prefix in chunks]
        return [f.result() for f in futures]


def _filter_chunk(n, prefix, predicate, config):
    from .basis import avoids_basis
    from .canon import accepts
    from .machine import DEFAULT_CONFIG, is_generable

    config = config or DEFAULT_CONFIG
    if predicate == "generable":
        test = lambda p: is_generable(p, config)
    elif predicate == "accepts":
        test = accepts
    elif predicate == "avoids":
        test = avoids_basis
    else:
        raise ValueError(f"unknown predicate {predicate!r}")
    return [p for p in perms_with_prefix(n, prefix) if test(p)]


def filter_perms(n: int, predicate: str, config=None, jobs: Optional[int] = 1) -> list[Perm]:
    parts = map_chunks(_filter_chunk, n, (predicate, config), jobs)
    return [p for part in parts for p in part]
