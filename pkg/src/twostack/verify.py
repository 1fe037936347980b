"""Exhaustive cross-check of the three descriptions of the depth-2 class.

For every permutation up to a given length, compare machine search, the
canonical algorithm and avoidance of the basis table.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

from .basis import avoids_basis
from .canon import accepts
from .machine import DEFAULT_CAP, DEFAULT_CONFIG, MachineConfig, check_cap, is_generable
from .parallel import map_chunks, perms_with_prefix
from .perm import format_perm


@dataclass
class LengthRow:
    length: int
    total: int = 0
    generable: int = 0
    accepted: int = 0
    avoiders: int = 0
    # (perm, generable, accepted, avoids)
    disagreements: list[tuple[str, bool, bool, bool]] = field(default_factory=list)


@dataclass
class TheoremReport:
    rows: list[LengthRow]

    @property
    def ok(self) -> bool:
        return not any(r.disagreements for r in self.rows)

    def to_json(self) -> dict:
        return {"ok": self.ok, "rows": [asdict(r) for r in self.rows]}

    def render_text(self) -> str:
        header = ("length", "total", "generable", "accepted", "avoiders", "disagreements")
        lines = ["{:>6} {:>8} {:>10} {:>9} {:>9} {:>14}".format(*header)]
        for r in self.rows:
            lines.append(f"{r.length:>6} {r.total:>8} {r.generable:>10} {r.accepted:>9} "
                         f"{r.avoiders:>9} {len(r.disagreements):>14}")
        for r in self.rows:
            for perm, g, a, v in r.disagreements:
                lines.append(f"DISAGREE {perm} generable={g} accepted={a} avoids={v}")
        lines.append("OK" if self.ok else "DISAGREEMENT FOUND")
        return "\n".join(lines)


def _verify_chunk(n, prefix, config):
    row = LengthRow(n)
    for p in perms_with_prefix(n, prefix):
        g = is_generable(p, config)
        a = accepts(p)
        v = avoids_basis(p)
        row.total += 1
        row.generable += g
        row.accepted += a
        row.avoiders += v
        if not g == a == v:
            row.disagreements.append((format_perm(p), g, a, v))
    return row


def verify_length(n: int, config: MachineConfig = DEFAULT_CONFIG, jobs: Optional[int] = 1) -> LengthRow:
    row = LengthRow(n)
    for part in map_chunks(_verify_chunk, n, (config,), jobs):
        row.total += part.total
        row.generable += part.generable
        row.accepted += part.accepted
        row.avoiders += part.avoiders
        row.disagreements.extend(part.disagreements)
    return row


def verify_theorem(n_max: int, config: MachineConfig = DEFAULT_CONFIG, jobs: Optional[int] = 1,
                   cap: Optional[int] = DEFAULT_CAP) -> TheoremReport:
    if config != DEFAULT_CONFIG:
        raise ValueError("the canonical algorithm and basis table describe depth1=2 with an "
                         "unbounded second stack only")
    check_cap(n_max, cap)
    return TheoremReport([verify_length(n, config, jobs) for n in range(1, n_max + 1)])
