"""Permutations generated by a depth-2 stack followed by an infinite stack."""

from .basis import avoids_basis, basis_table, lemma1_extend, mine_basis, swap_one_two
from .canon import Move, RuleId, Verdict, applicable_rules, check_well_ordered, cd_configuration_scan, run_algorithm
from .machine import (MachineConfig, MachineState, MoveError, apply_codeword, enumerate_generable,
                      generable, step)
from .perm import IntervalSpec, Perm, contains, delete_entry, right_contiguous, segment_avoids, standardize
from .verify import verify_theorem

__all__ = [
    "IntervalSpec", "MachineConfig", "MachineState", "Move", "MoveError", "Perm", "RuleId", "Verdict",
    "applicable_rules", "apply_codeword", "avoids_basis", "basis_table", "cd_configuration_scan",
    "check_well_ordered", "contains", "delete_entry", "enumerate_generable", "generable",
    "lemma1_extend", "mine_basis", "right_contiguous", "run_algorithm", "segment_avoids",
    "standardize", "step", "swap_one_two", "verify_theorem",
]
