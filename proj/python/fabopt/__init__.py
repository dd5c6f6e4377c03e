"""Exact solvers for the attack / pitch / defend card-role problem."""

from ._core import (
    Card,
    ContractViolation,
    Error,
    Instance,
    KnapsackInstance,
    Lambda,
    ParseError,
    RefusalError,
    Role,
    Solution,
    SolverReport,
    Totals,
    UnknownNameError,
    ValidationError,
    compute_totals,
    evaluate,
    export_lp,
    fab_to_kp_solution,
    generate,
    instance_from_json,
    instance_to_json,
    is_feasible,
    kp_to_fab,
    load_instance,
    save_instance,
    solve,
    solve_aggro,
    solve_branch_and_bound,
    solve_brute_force,
    solve_dp,
    solve_knapsack_dp,
    solve_midrange,
    sweep,
    verify_reduction,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
