import itertools
import json

import pytest
from hypothesis import given, strategies as st

from twostack.basis import avoids_basis
from twostack.canon import (BuriedInB, Contradiction, Fill, InvariantViolation, Move, Output, RuleId,
                            applicable_rules, cd_configuration_scan, check_well_ordered, render_text,
                            run_algorithm, to_json)
from twostack.machine import MachineState, apply_codeword
from twostack.perm import contains, parse_perm

P = parse_perm
KEEP, SWAP = Move.KEEP_A_X_TO_B, Move.A_TO_B_X_TO_A


def state(n, a, x, b=(), output=()):
    return MachineState(n=n, next_input=x, stack_a=(a,), stack_b=tuple(b), output=tuple(output))


class TestApplicableRules:
    def test_both_rule1(self):
        found = applicable_rules(state(5, a=1, x=2), P("51234"))
        assert found == [(RuleId.R1_1, KEEP), (RuleId.R1_2, SWAP)]

    def test_rule31_keeps_a(self):
        # 41 leaves 3 to come, so it is not right-contiguous modulo 2
        assert applicable_rules(state(4, a=1, x=2), P("4132")) == [(RuleId.R3_1, KEEP)]

    def test_rule12(self):
        assert applicable_rules(state(5, a=1, x=2), P("52314")) == [(RuleId.R1_2, SWAP)]

    def test_rule22(self):
        s = state(5, a=2, x=4, b=(1, 3))
        assert applicable_rules(s, P("52314")) == [(RuleId.R2_2, SWAP)]

    def test_rule31_exception(self):
        # 31 is right-contiguous modulo 2 and avoids 312: a goes to B
        assert applicable_rules(state(6, a=1, x=2), P("316245")) == [(RuleId.R3_1, SWAP)]

    def test_rule32(self):
        # 3214: x=2 precedes a=1; 32 is right-contiguous and avoids 312
        assert applicable_rules(state(4, a=1, x=2), P("3214")) == [(RuleId.R3_2, KEEP)]
        # in 4231 the 3 still to come breaks right-contiguity of 42
        assert applicable_rules(state(4, a=1, x=2), P("4231")) == [(RuleId.R3_2, SWAP)]

    def test_precondition(self):
        with pytest.raises(InvariantViolation):
            applicable_rules(MachineState(n=3), P("312"))
        with pytest.raises(InvariantViolation):
            applicable_rules(state(3, a=1, x=3), P("312"))


class TestGoldenTraces:
    def test_52314(self):
        v = run_algorithm(P("52314"))
        assert v.accepted
        assert v.trace.rule_sequence() == [("1.2",), ("3.1",), ("2.2",)]

    def test_316245(self):
        v = run_algorithm(P("316245"))
        assert v.accepted
        assert v.trace.rule_sequence() == [("3.1",), ("3.1",), ("2.2",)]
        first, second, _ = v.trace.rule_events()
        # compare the two applications of 3.1: 1 goes to B, then 2 stays on A
        assert (first.a, first.x, first.move) == (1, 2, SWAP)
        assert (second.a, second.x, second.move) == (2, 4, KEEP)

    def test_4132(self):
        v = run_algorithm(P("4132"))
        assert v.accepted
        events = v.trace.rule_events()
        assert all(e.rules == (RuleId.R3_1,) for e in events)
        assert (events[0].a, events[0].x, events[0].move) == (1, 2, KEEP)

    def test_51234(self):
        v = run_algorithm(P("51234"))
        assert not v.accepted
        assert v.reason == Contradiction(frozenset({RuleId.R1_1, RuleId.R1_2}))

    def test_identity(self):
        v = run_algorithm(P("123"))
        assert v.accepted and v.trace.rule_events() == []
        assert v.trace.codeword == "rlmrlmrlm"
        assert all(isinstance(e, Output) and e.source == "input" for e in v.trace.events)

    def test_event_stream_52314(self):
        events = run_algorithm(P("52314")).trace.events
        assert events[0] == Fill(1)
        assert events[4] == Output(5, "input")
        assert [e.token for e in events if isinstance(e, Output)] == [5, 2, 3, 1, 4]


class TestWellOrdered:
    def test_examples(self):
        assert check_well_ordered(MachineState(n=3), P("312"))
        assert check_well_ordered(MachineState(n=3, stack_b=(2, 1)), P("312"))
        assert not check_well_ordered(MachineState(n=3, stack_b=(1, 2)), P("312"))


class TestCdScan:
    def test_examples(self):
        assert cd_configuration_scan(P("4132"))
        assert cd_configuration_scan(P("123")) == []
        if cd_configuration_scan(P("4231")):
            assert contains(P("4231"), P("4231"))

    def test_mid_run_configuration(self):
        flagged = cd_configuration_scan(P("41325"))
        assert any(not s.input_exhausted for s in flagged)


def all_perms(max_n):
    for n in range(1, max_n + 1):
        yield from itertools.permutations(range(1, n + 1))


def test_invariants_exhaustive_to_7():
    for p in all_perms(7):
        def watch(phase, s):
            assert check_well_ordered(s, p)

        v = run_algorithm(p, observer=watch)
        if v.accepted:
            assert apply_codeword(len(p), v.trace.codeword) == p
        else:
            assert isinstance(v.reason, Contradiction)
            rules = v.reason.rules
            assert rules <= {RuleId.R1_1, RuleId.R1_2, RuleId.R2_1, RuleId.R2_2}
            assert rules & {RuleId.R1_1, RuleId.R2_1} and rules & {RuleId.R1_2, RuleId.R2_2}
        if avoids_basis(p):
            assert v.accepted
        for s in cd_configuration_scan(p):
            assert contains(p, (4, 1, 3, 2)) or contains(p, (4, 2, 3, 1))


@given(st.integers(1, 10).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_rule3_exclusive(p):
    p = tuple(p)
    v = run_algorithm(p)
    for e in v.trace.rule_events():
        assert not (RuleId.R3_1 in e.rules and RuleId.R3_2 in e.rules)
        if RuleId.R3_1 in e.rules or RuleId.R3_2 in e.rules:
            assert len(e.rules) == 1


@given(st.integers(1, 10).flatmap(lambda n: st.permutations(range(1, n + 1))))
def test_verdict_matches_avoidance(p):
    p = tuple(p)
    v = run_algorithm(p)
    assert v.accepted == avoids_basis(p)
    assert not isinstance(v.reason, BuriedInB)
    if v.accepted:
        assert apply_codeword(len(p), v.trace.codeword) == p


class TestRendering:
    def test_text_accept(self):
        text = render_text(P("52314"), run_algorithm(P("52314")))
        lines = text.splitlines()
        assert lines[0] == "FILL 1"
        assert lines[1] == "RULE 1.2 -> a:1 to B, x:2 to A"
        assert "RULE 3.1 -> a:2 stays on A, x:3 to B" in lines
        assert "OUT 5 (input)" in lines
        assert lines[-2] == "CODEWORD rlrrllrrlmmmmlm"
        assert lines[-1] == "ACCEPT"

    def test_text_reject(self):
        text = render_text(P("51234"), run_algorithm(P("51234")))
        assert text.splitlines()[-1] == "REJECT CONTRADICTION {1.1, 1.2}"

    @pytest.mark.parametrize("t", ["52314", "51234", "316245", "4132", "41386725", "1"])
    def test_json_mirrors_text(self, t):
        p = P(t)
        v = run_algorithm(p)
        doc = json.loads(json.dumps(to_json(p, v)))
        lines = render_text(p, v).splitlines()
        assert len(doc["events"]) == len(lines) - (2 if v.accepted else 1)
        for ev, line in zip(doc["events"], lines):
            if ev["event"] == "out":
                assert line == f"OUT {ev['token']} ({ev['source']})"
            elif ev["event"] == "fill":
                assert line == f"FILL {ev['token']}"
            else:
                assert line.startswith("RULE " + "+".join(ev["rules"]))
                assert f"a:{ev['a']}" in line and f"x:{ev['x']}" in line
        if v.accepted:
            assert lines[-2] == "CODEWORD " + doc["codeword"]
        else:
            assert lines[-1] == "REJECT CONTRADICTION {%s}" % ", ".join(doc["reason"]["rules"])
