"""Deterministic generation through a depth-2 stack A and an infinite stack B.

The loop outputs whatever it can, keeps A occupied while input remains, and
otherwise lets the rules choose between two moves for the token ``a`` on A
and the next input token ``x``:

* ``KEEP_A_X_TO_B``: x passes through A onto B (letters ``rl``).
* ``A_TO_B_X_TO_A``: a moves to B and x takes its place (letters ``lr``).

Rules 1.1-2.2 that prescribe opposite moves cause a rejection.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

from .machine import MachineState
from .perm import IntervalSpec, right_contiguous, segment_avoids

PATTERN_312 = (3, 1, 2)


class Move(enum.Enum):
    KEEP_A_X_TO_B = "KEEP_A_X_TO_B"
    A_TO_B_X_TO_A = "A_TO_B_X_TO_A"

    @property
    def letters(self) -> str:
        return "rl" if self is Move.KEEP_A_X_TO_B else "lr"


class RuleId(enum.Enum):
    R1_1 = "1.1"
    R1_2 = "1.2"
    R2_1 = "2.1"
    R2_2 = "2.2"
    R3_1 = "3.1"
    R3_2 = "3.2"

    def __str__(self) -> str:
        return self.value


KEEP, SWAP = Move.KEEP_A_X_TO_B, Move.A_TO_B_X_TO_A


@dataclass(frozen=True)
class Output:
    token: int
    source: str  # "input", "A" or "B"


@dataclass(frozen=True)
class Fill:
    token: int


@dataclass(frozen=True)
class RuleEvent:
    rules: tuple[RuleId, ...]
    move: Move
    a: int
    x: int
    y: int


Event = Union[Output, Fill, RuleEvent]


@dataclass
class Trace:
    events: list[Event] = field(default_factory=list)
    codeword: str = ""

    def rule_events(self) -> list[RuleEvent]:
        return [e for e in self.events if isinstance(e, RuleEvent)]

    def rule_sequence(self) -> list[tuple[str, ...]]:
        return [tuple(r.value for r in e.rules) for e in self.rule_events()]


@dataclass(frozen=True)
class Contradiction:
    rules: frozenset[RuleId]


@dataclass(frozen=True)
class BuriedInB:
    token: int


@dataclass
class Verdict:
    accepted: bool
    trace: Trace
    reason: Optional[Union[Contradiction, BuriedInB]] = None

    def __bool__(self) -> bool:
        return self.accepted


class InvariantViolation(AssertionError):
    pass


def _positions(target: Sequence[int]) -> list[int]:
    pos = [0] * (len(target) + 2)
    for i, v in enumerate(target):
        pos[v] = i
    return pos


def _evaluate(target, pos, a, x, y, b) -> list[tuple[RuleId, Move]]:
    found = []
    pa, px = pos[a], pos[x]
    # tokens strictly between x and y are all still in the input
    after_a = after_x = 0
    for v in range(x + 1, y):
        pv = pos[v]
        if pv > pa:
            after_a += 1
        if pv > px:
            after_x += 1
    if after_a >= 2:
        found.append((RuleId.R1_1, KEEP))
    if after_x >= 2:
        found.append((RuleId.R1_2, SWAP))
    if b is not None:
        if pos[b] < pa:
            found.append((RuleId.R2_1, KEEP))
        if pos[b] < px:
            found.append((RuleId.R2_2, SWAP))
    if found:
        return found
    # only tokens still in the input can break right-contiguity; a and
    # whatever sits on B were read already
    read = range(1, x)
    start = pos[y] + 1
    if pa < px:
        span = IntervalSpec(start, pa + 1, modulo=x)
        special = right_contiguous(target, span, read) and segment_avoids(target, start, pa + 1, PATTERN_312)
        return [(RuleId.R3_1, SWAP if special else KEEP)]
    span = IntervalSpec(start, px + 1)
    special = right_contiguous(target, span, read) and segment_avoids(target, start, px + 1, PATTERN_312)
    return [(RuleId.R3_2, KEEP if special else SWAP)]


def applicable_rules(state: MachineState, target: Sequence[int]) -> list[tuple[RuleId, Move]]:
    """Every rule that applies in ``state``, in rule order, with its prescribed move.

    Requires exactly one token on A and the next output token further back in
    the input than the next input token.
    """
    target = tuple(target)
    k = len(state.output)
    if len(state.stack_a) != 1 or state.input_exhausted or k >= len(target):
        raise InvariantViolation(f"rules need one token on A and input remaining: {state}")
    x, y = state.next_input, target[k]
    if y <= x:
        raise InvariantViolation(f"next output {y} is not behind the next input {x}")
    b = state.stack_b[-1] if state.stack_b else None
    return _evaluate(target, _positions(target), state.stack_a[0], x, y, b)


Observer = Callable[[str, MachineState], None]


def run_algorithm(target: Sequence[int], trace_wanted: bool = True,
                  observer: Optional[Observer] = None) -> Verdict:
    """Run the canonical algorithm on ``target``.

    ``observer(phase, state)`` is called with phase ``"loop"`` at the start of
    every main-loop iteration and ``"move"`` after every state change
    (``"flush"`` once the input is exhausted).
    """
    target = tuple(target)
    n = len(target)
    pos = _positions(target)
    nxt, k = 1, 0
    A: list[int] = []
    B: list[int] = []
    word: list[str] = []
    trace = Trace()
    events = trace.events if trace_wanted else None

    def snapshot():
        return MachineState(n, nxt, tuple(A), tuple(B), target[:k])

    def finish(accepted, reason=None):
        trace.codeword = "".join(word)
        return Verdict(accepted, trace, reason)

    while nxt <= n:
        if observer:
            observer("loop", snapshot())
        y = target[k]
        if y == nxt:
            word.append("rlm")
            nxt += 1
            k += 1
            if events is not None:
                events.append(Output(y, "input"))
        elif A and A[-1] == y:
            word.append("lm")
            A.pop()
            k += 1
            if events is not None:
                events.append(Output(y, "A"))
        elif B and B[-1] == y:
            word.append("m")
            B.pop()
            k += 1
            if events is not None:
                events.append(Output(y, "B"))
        elif not A:
            word.append("r")
            A.append(nxt)
            nxt += 1
            if events is not None:
                events.append(Fill(A[-1]))
        elif y < nxt:
            # already read, not on A, not on top of B: buried in B
            return finish(False, BuriedInB(y))
        else:
            a, x = A[0], nxt
            found = _evaluate(target, pos, a, x, y, B[-1] if B else None)
            moves = {m for _, m in found}
            if len(moves) > 1:
                return finish(False, Contradiction(frozenset(r for r, _ in found)))
            move = found[0][1]
            word.append(move.letters)
            nxt += 1
            if move is KEEP:
                B.append(x)
            else:
                B.append(a)
                A[0] = x
            if events is not None:
                events.append(RuleEvent(tuple(r for r, _ in found), move, a, x, y))
        if observer:
            observer("move", snapshot())

    while k < n:
        y = target[k]
        if A and A[-1] == y:
            word.append("lm")
            A.pop()
            src = "A"
        elif B and B[-1] == y:
            word.append("m")
            B.pop()
            src = "B"
        else:
            raise InvariantViolation(f"cannot flush {y} with A={A} B={B} for {target}")
        k += 1
        if events is not None:
            events.append(Output(y, src))
        if observer:
            observer("flush", snapshot())
    return finish(True)


def accepts(target: Sequence[int]) -> bool:
    return run_algorithm(target, trace_wanted=False).accepted


def check_well_ordered(state: MachineState, target: Sequence[int]) -> bool:
    """B read top to bottom must follow the left-to-right order of ``target``."""
    pos = _positions(target)
    b = state.stack_b
    return all(pos[b[i]] < pos[b[i - 1]] for i in range(1, len(b)))


def cd_configuration_scan(target: Sequence[int]) -> list[MachineState]:
    """States where B is non-empty and A is empty, up to any contradiction.

    Covers both the main loop (before A is refilled) and the final flush.
    """
    flagged = []

    def watch(phase, state):
        if phase in ("loop", "flush") and state.stack_b and not state.stack_a:
            flagged.append(state)

    run_algorithm(target, trace_wanted=False, observer=watch)
    return flagged


# -- rendering ---------------------------------------------------------------

def _move_text(e: RuleEvent) -> str:
    if e.move is KEEP:
        return f"a:{e.a} stays on A, x:{e.x} to B"
    return f"a:{e.a} to B, x:{e.x} to A"


def _reason_text(reason) -> str:
    if isinstance(reason, Contradiction):
        rules = ", ".join(sorted(r.value for r in reason.rules))
        return f"CONTRADICTION {{{rules}}}"
    return f"BURIED_IN_B {reason.token}"


def render_text(target: Sequence[int], verdict: Verdict) -> str:
    lines = []
    for e in verdict.trace.events:
        if isinstance(e, Output):
            lines.append(f"OUT {e.token} ({e.source})")
        elif isinstance(e, Fill):
            lines.append(f"FILL {e.token}")
        else:
            rules = "+".join(r.value for r in e.rules)
            lines.append(f"RULE {rules} -> {_move_text(e)}")
    if verdict.accepted:
        lines.append(f"CODEWORD {verdict.trace.codeword}")
        lines.append("ACCEPT")
    else:
        lines.append(f"REJECT {_reason_text(verdict.reason)}")
    return "\n".join(lines)


def to_json(target: Sequence[int], verdict: Verdict) -> dict:
    from .perm import format_perm

    events = []
    for e in verdict.trace.events:
        if isinstance(e, Output):
            events.append({"event": "out", "token": e.token, "source": e.source})
        elif isinstance(e, Fill):
            events.append({"event": "fill", "token": e.token})
        else:
            events.append({"event": "rule", "rules": [r.value for r in e.rules],
                           "move": e.move.value, "a": e.a, "x": e.x, "y": e.y})
    doc = {"target": format_perm(target), "accepted": verdict.accepted, "events": events}
    if verdict.accepted:
        doc["codeword"] = verdict.trace.codeword
    elif isinstance(verdict.reason, Contradiction):
        doc["reason"] = {"kind": "CONTRADICTION",
                         "rules": sorted(r.value for r in verdict.reason.rules)}
    else:
        doc["reason"] = {"kind": "BURIED_IN_B", "token": verdict.reason.token}
    return doc
