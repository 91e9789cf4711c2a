"""Squarefree lattice games on N^d: box solver, brute-force oracle, classification."""

from .axioms import ValidationReport, check_orthant_containment, find_weight, is_certificate, validate
from .box_solver import SolvedBox, SolveStats, outcome, solve_p0, solve_stats
from .classify import (
    Classification,
    Level,
    Witness,
    check_condition1_on_region,
    classify,
    is_squarefree,
    is_weakly_squarefree,
    squarefree_violation_witness,
)
from .core import GameError, Outcome, RuleSet, apply_move, mod2_reduce, positive_part
from .heap_codec import HeapMove, encode_heap_move, nim_rules, rules_from_octal
from .region_oracle import (
    PropertyReport,
    SolvedRegion,
    check_indistinguishability_from_zero,
    check_mod2_periodicity,
    check_monoid_closure,
    find_prop2_counterexample,
    solve_region,
)

__version__ = "0.1.0"
