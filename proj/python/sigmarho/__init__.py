"""[sigma,rho]-domination kernels and solvers."""

from sigmarho._core import (
    CapExceededError,
    DominationAnswer,
    Graph,
    InterpolationError,
    KernelResult,
    LiftError,
    NdKernel,
    NumberSet,
    ParseError,
    RunReport,
    SigmaRhoSpec,
    SweepConfig,
    TypePartition,
    UnsupportedSpecError,
    WeightedGraph,
    brute_force,
    brute_force_weighted,
    check_guard,
    compute_degree_d_modulator,
    compute_type_partition,
    compute_vertex_cover,
    generate_random,
    generate_random_connected,
    is_sigma_rho_dominating,
    kernel_bounded,
    kernel_rho_finite,
    kernel_satisfiable,
    kernel_sigma_finite,
    kernelize,
    lift_assignment,
    modular_width,
    nd_enumerate_solve,
    nd_enumerate_solve_sigma,
    parse_graph,
    parse_number_set,
    preset,
    preset_names,
    run_sweep,
    serialize_graph,
    solve_by_guessing,
    solve_eds_modular,
    solve_ptds_modular,
)

__all__ = [
    "CapExceededError",
    "DominationAnswer",
    "Graph",
    "InterpolationError",
    "KernelResult",
    "LiftError",
    "NdKernel",
    "NumberSet",
    "ParseError",
    "RunReport",
    "SigmaRhoSpec",
    "SweepConfig",
    "TypePartition",
    "UnsupportedSpecError",
    "WeightedGraph",
    "brute_force",
    "brute_force_weighted",
    "check_guard",
    "compute_degree_d_modulator",
    "compute_type_partition",
    "compute_vertex_cover",
    "generate_random",
    "generate_random_connected",
    "is_sigma_rho_dominating",
    "kernel_bounded",
    "kernel_rho_finite",
    "kernel_satisfiable",
    "kernel_sigma_finite",
    "kernelize",
    "lift_assignment",
    "modular_width",
    "nd_enumerate_solve",
    "nd_enumerate_solve_sigma",
    "parse_graph",
    "parse_number_set",
    "preset",
    "preset_names",
    "run_sweep",
    "serialize_graph",
    "solve_by_guessing",
    "solve_eds_modular",
    "solve_ptds_modular",
]
