"""A bounded stack A feeding a second stack B, driven by rho/lambda/mu codewords.

Letters are written ``r`` (input -> A), ``l`` (A -> B) and ``m`` (B -> output).
Tokens enter in the order ``1..n``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace
from typing import Iterable, Optional, Sequence

from .perm import Perm

RHO, LAMBDA, MU = "r", "l", "m"
LETTERS = (RHO, LAMBDA, MU)

DEFAULT_CAP = 10


class MoveError(ValueError):
    """A letter that the machine cannot execute in the current state."""

    def __init__(self, message: str, position: Optional[int] = None):
        super().__init__(message if position is None else f"{message} (at letter {position})")
        self.position = position


class CapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class MachineConfig:
    depth1: int = 2
    depth2: Optional[int] = None  # None means unbounded

    def __post_init__(self):
        if self.depth1 < 1:
            raise ValueError("depth1 must be at least 1")
        if self.depth2 is not None and self.depth2 < 1:
            raise ValueError("depth2 must be at least 1 or None")


DEFAULT_CONFIG = MachineConfig()


@dataclass(frozen=True)
class MachineState:
    """One configuration: stacks are stored bottom to top."""

    n: int
    next_input: int = 1
    stack_a: tuple[int, ...] = ()
    stack_b: tuple[int, ...] = ()
    output: tuple[int, ...] = ()

    @property
    def input_exhausted(self) -> bool:
        return self.next_input > self.n


def initial_state(n: int) -> MachineState:
    return MachineState(n=n)


def step(state: MachineState, letter: str, config: MachineConfig = DEFAULT_CONFIG) -> MachineState:
    if letter == RHO:
        if state.input_exhausted:
            raise MoveError("rho: input exhausted")
        if len(state.stack_a) >= config.depth1:
            raise MoveError(f"rho: stack A full (depth1={config.depth1})")
        return replace(state, next_input=state.next_input + 1,
                       stack_a=state.stack_a + (state.next_input,))
    if letter == LAMBDA:
        if not state.stack_a:
            raise MoveError("lambda: stack A empty")
        if config.depth2 is not None and len(state.stack_b) >= config.depth2:
            raise MoveError(f"lambda: stack B full (depth2={config.depth2})")
        return replace(state, stack_a=state.stack_a[:-1],
                       stack_b=state.stack_b + (state.stack_a[-1],))
    if letter == MU:
        if not state.stack_b:
            raise MoveError("mu: stack B empty")
        return replace(state, stack_b=state.stack_b[:-1],
                       output=state.output + (state.stack_b[-1],))
    raise MoveError(f"unknown letter {letter!r}")


def codeword_valid(word: str, n: int, config: MachineConfig = DEFAULT_CONFIG,
                   complete: bool = True) -> Optional[int]:
    """Check the prefix counting constraints; return the first offending 1-indexed
    position, ``len(word) + 1`` for an incomplete word, or None when valid.

    Only meaningful for unbounded depth2 (bounded B adds #l - #m <= depth2).
    """
    r = l = m = 0
    for i, c in enumerate(word, 1):
        if c == RHO:
            r += 1
        elif c == LAMBDA:
            l += 1
        elif c == MU:
            m += 1
        else:
            return i
        if not (m <= l <= r <= min(n, l + config.depth1)):
            return i
        if config.depth2 is not None and l - m > config.depth2:
            return i
    if complete and not (r == l == m == n):
        return len(word) + 1
    return None


def run_codeword(n: int, word: str, config: MachineConfig = DEFAULT_CONFIG) -> MachineState:
    state = initial_state(n)
    for i, c in enumerate(word, 1):
        try:
            state = step(state, c, config)
        except MoveError as e:
            raise MoveError(str(e), i) from None
    return state


def apply_codeword(n: int, word: str, config: MachineConfig = DEFAULT_CONFIG) -> Perm:
    """Run a complete codeword from the initial state and return the output."""
    state = run_codeword(n, word, config)
    if len(state.output) != n:
        raise MoveError(f"codeword incomplete: {len(state.output)} of {n} tokens output",
                        len(word) + 1)
    return tuple.__new__(Perm, state.output)


def generable(target: Sequence[int], config: MachineConfig = DEFAULT_CONFIG) -> Optional[str]:
    """Exhaustive search for a codeword producing ``target``; None if there is none.

    Output is forced to follow ``target``, so a state is just
    (next_input, A, B). Moves are tried in the order mu, lambda, rho.
    """
    target = tuple(target)
    n = len(target)
    pos = [0] * (n + 2)
    for i, v in enumerate(target):
        pos[v] = i
    depth1 = config.depth1
    depth2 = config.depth2 if config.depth2 is not None else n + 1
    dead = set()
    word = []

    def dfs(nxt, a, b, k):
        if k == n:
            return True
        key = (nxt, a, b)
        if key in dead:
            return False
        if b and b[-1] == target[k]:
            word.append(MU)
            if dfs(nxt, a, b[:-1], k + 1):
                return True
            word.pop()
        # B only ever pops, so a token may only go above one that is output later
        if a and len(b) < depth2 and (not b or pos[a[-1]] < pos[b[-1]]):
            word.append(LAMBDA)
            if dfs(nxt, a[:-1], b + a[-1:], k):
                return True
            word.pop()
        if nxt <= n and len(a) < depth1:
            word.append(RHO)
            if dfs(nxt + 1, a + (nxt,), b, k):
                return True
            word.pop()
        dead.add(key)
        return False

    if dfs(1, (), (), 0):
        return "".join(word)
    return None


def is_generable(target: Sequence[int], config: MachineConfig = DEFAULT_CONFIG) -> bool:
    return generable(target, config) is not None


def check_cap(n: int, cap: Optional[int] = DEFAULT_CAP) -> None:
    if cap is not None and n > cap:
        raise CapExceeded(f"length {n} exceeds the exhaustive-search cap {cap}; "
                          f"pass a larger cap (CLI: --unsafe-cap) if you really mean it")


def all_perms(n: int) -> Iterable[Perm]:
    for t in itertools.permutations(range(1, n + 1)):
        yield tuple.__new__(Perm, t)


def enumerate_generable(n: int, config: MachineConfig = DEFAULT_CONFIG,
                        cap: Optional[int] = DEFAULT_CAP, jobs: int = 1) -> list[Perm]:
    """All length-n permutations the machine can produce, in lexicographic order."""
    check_cap(n, cap)
    from .parallel import filter_perms
    return filter_perms(n, "generable", config, jobs)
