"""Solitaire Clobber engine: reductions, exact search and hardness gadgets."""

from ._core import (
    ClobberError,
    Configuration,
    Move,
    Plan,
    apply_move,
    build_gadget,
    checkerboard,
    circuit_to_plan,
    classify_case,
    connected_components,
    delta,
    delta_class,
    format_board,
    format_plan,
    ham_brute,
    is_one_reducible,
    legal_moves,
    line_bound,
    lower_bound,
    min_stones,
    parse_board,
    parse_plan,
    plan_to_circuit,
    psi_line,
    reduce_line,
    reduce_rect,
    replay,
    run_suite,
)

__all__ = [
    "ClobberError",
    "Configuration",
    "Move",
    "Plan",
    "apply_move",
    "build_gadget",
    "checkerboard",
    "circuit_to_plan",
    "classify_case",
    "connected_components",
    "delta",
    "delta_class",
    "format_board",
    "format_plan",
    "ham_brute",
    "is_one_reducible",
    "legal_moves",
    "line_bound",
    "lower_bound",
    "min_stones",
    "parse_board",
    "parse_plan",
    "plan_to_circuit",
    "psi_line",
    "reduce_line",
    "reduce_rect",
    "replay",
    "run_suite",
]
