"""MASS plant layout: Hungarian assignment seeding followed by CRAFT improvement."""

from ._core import (
    FloorPlan,
    InfeasibleError,
    LoadMatrix,
    TooLargeError,
    ValidationError,
    benchmark_seeds,
    brute_force_optimum,
    build_floor_plan,
    build_floor_plan_grid,
    composite_movements,
    parse_load_matrix,
    run_mass,
    serialize_load_matrix,
    solve_assignment,
)

__all__ = [
    "FloorPlan",
    "InfeasibleError",
    "LoadMatrix",
    "TooLargeError",
    "ValidationError",
    "benchmark_seeds",
    "brute_force_optimum",
    "build_floor_plan",
    "build_floor_plan_grid",
    "composite_movements",
    "parse_load_matrix",
    "run_mass",
    "serialize_load_matrix",
    "solve_assignment",
]
