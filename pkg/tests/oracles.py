"""Slow, obviously-correct reference implementations used only by the tests."""

import itertools


def rank_standardize(word):
    order = sorted(range(len(word)), key=lambda i: word[i])
    out = [0] * len(word)
    for r, i in enumerate(order, 1):
        out[i] = r
    return tuple(out)


def brute_contains(p, q):
    q = tuple(q)
    return any(rank_standardize([p[i] for i in idx]) == q
               for idx in itertools.combinations(range(len(p)), len(q)))


def brute_witness(p, q):
    """Lexicographically least 1-indexed occurrence, by enumeration in lex order."""
    q = tuple(q)
    for idx in itertools.combinations(range(len(p)), len(q)):
        if rank_standardize([p[i] for i in idx]) == q:
            return tuple(i + 1 for i in idx)
    return None


def forward_outputs(n, depth1=2, depth2=None):
    """Every output reachable by running the machine forwards from 1..n.

    Breadth-first over full configurations (input, A, B, output) with no
    knowledge of any target.
    """
    start = (1, (), (), ())
    frontier, seen, outputs = [start], {start}, set()
    while frontier:
        nxt_frontier = []
        for nxt, a, b, out in frontier:
            if len(out) == n:
                outputs.add(out)
                continue
            succ = []
            if nxt <= n and len(a) < depth1:
                succ.append((nxt + 1, a + (nxt,), b, out))
            if a and (depth2 is None or len(b) < depth2):
                succ.append((nxt, a[:-1], b + a[-1:], out))
            if b:
                succ.append((nxt, a, b[:-1], out + b[-1:]))
            for s in succ:
                if s not in seen:
                    seen.add(s)
                    nxt_frontier.append(s)
        frontier = nxt_frontier
    return outputs
