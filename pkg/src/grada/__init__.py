"""Exact workbench for group-graded rings and their induced quotient gradings."""
from .analysis import (
    InducedGrading,
    Verdict,
    check_epsilon_finite,
    check_epsilon_strong,
    check_essentially,
    check_nearly,
    check_strong,
    check_symmetric,
    check_virtually,
    classify,
    epsilon_crossed_witness,
    induce_quotient,
    theorem_main1_condition,
)
from .groups import construct_group, cyclic_group, enumerate_window, integers, normal_subgroup, quotient
from .leavitt import LpaElement, LpaGrading, Quiver, builtin_quiver
from .numeric import FinExSeq, seq_make
from .partial_skew import SkewElement, SkewGrading, builtin

__version__ = "0.1.0"
