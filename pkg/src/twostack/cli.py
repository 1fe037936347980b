"""Command-line front end.

Exit status: 0 when every answer is true/accept, 1 when some answer is
false/reject (or ``verify`` finds a disagreement), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import basis, canon, machine
from .perm import Perm, find_occurrence, format_perm, parse_perm
from .verify import verify_theorem

METHODS = ("alg", "brute", "avoid", "all")


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def _perm(text: str) -> Perm:
    try:
        return parse_perm(text)
    except ValueError as e:
        raise UsageError(str(e)) from None


def _cap(args) -> Optional[int]:
    return None if args.unsafe_cap else machine.DEFAULT_CAP


def _config(args) -> machine.MachineConfig:
    if args.depth1 < 1:
        raise UsageError("--depth1 must be at least 1")
    return machine.MachineConfig(depth1=args.depth1)


def cmd_check(args) -> int:
    config = _config(args)
    if args.method not in METHODS:
        raise UsageError(f"unknown method {args.method!r}")
    if args.method in ("alg", "avoid", "all") and config.depth1 != 2:
        raise UsageError(f"method {args.method!r} is only defined for --depth1 2")
    texts = args.perms or [line for line in sys.stdin.read().split() if line]
    perms = [_perm(t) for t in texts]
    status = 0
    for p in perms:
        results = {}
        if args.method in ("alg", "all"):
            results["alg"] = canon.accepts(p)
        if args.method in ("brute", "all"):
            results["brute"] = machine.is_generable(p, config)
        if args.method in ("avoid", "all"):
            results["avoid"] = basis.avoids_basis(p)
        agree = len(set(results.values())) == 1
        if args.json:
            _emit({"perm": format_perm(p), "results": results, "agree": agree})
        else:
            cols = " ".join(f"{k}={str(v).lower()}" for k, v in results.items())
            print(f"{format_perm(p)} {cols}" + ("" if agree else " DISAGREEMENT"))
        if not agree:
            print(f"disagreement for {format_perm(p)}: {results}", file=sys.stderr)
        if not all(results.values()):
            status = 1
    return status


def cmd_trace(args) -> int:
    p = _perm(args.perm)
    verdict = canon.run_algorithm(p)
    if args.json:
        _emit(canon.to_json(p, verdict))
    else:
        print(canon.render_text(p, verdict))
    return 0 if verdict.accepted else 1


def cmd_enumerate(args) -> int:
    config = _config(args)
    members = machine.enumerate_generable(args.n, config, cap=_cap(args), jobs=args.jobs)
    if args.count_only:
        if args.json:
            _emit({"n": args.n, "depth1": config.depth1, "count": len(members)})
        else:
            print(len(members))
        return 0
    for p in members:
        if args.json:
            _emit({"perm": format_perm(p)})
        else:
            print(format_perm(p))
    return 0


def cmd_basis(args) -> int:
    config = _config(args)
    machine.check_cap(args.max_len, _cap(args))
    shorter = {Perm()}
    for n in range(1, args.max_len + 1):
        current = set(machine.enumerate_generable(n, config, cap=None, jobs=args.jobs))
        members = current | shorter
        found = basis.mine_basis(members.__contains__, n)
        shorter = current
        if args.json:
            _emit({"length": n, "elements": [format_perm(p) for p in found]})
        else:
            for p in found:
                print(format_perm(p))
    return 0


def cmd_verify(args) -> int:
    config = _config(args)
    report = verify_theorem(args.max_len, config, jobs=args.jobs, cap=_cap(args))
    if args.json:
        _emit(report.to_json())
    else:
        print(report.render_text())
    return 0 if report.ok else 1


def cmd_contains(args) -> int:
    p, q = _perm(args.p), _perm(args.q)
    witness = find_occurrence(p, q)
    if args.json:
        _emit({"p": format_perm(p), "q": format_perm(q), "contains": witness is not None,
               "witness": list(witness) if witness is not None else None})
    elif witness is None:
        print("false")
    else:
        print("true " + " ".join(map(str, witness)))
    return 0 if witness is not None else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--unsafe-cap", action="store_true",
                        help="lift the length cap of %d on exhaustive commands" % machine.DEFAULT_CAP)
    depth = argparse.ArgumentParser(add_help=False)
    depth.add_argument("--depth1", type=int, default=2, help="depth of the first stack")

    parser = argparse.ArgumentParser(prog="twostack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common, depth], help="test permutations for membership")
    p.add_argument("perms", nargs="*", help="permutations (read from stdin when omitted)")
    p.add_argument("--method", default="all", help="alg, brute, avoid or all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("trace", parents=[common], help="trace the canonical algorithm")
    p.add_argument("perm")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("enumerate", parents=[common, depth], help="list generable permutations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("basis", parents=[common, depth], help="mine basis elements by length")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("verify", parents=[common, depth], help="cross-check all three characterizations")
    p.add_argument("--max-len", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("contains", parents=[common], help="pattern containment with witness")
    p.add_argument("p")
    p.add_argument("q")
    p.set_defaults(func=cmd_contains)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
