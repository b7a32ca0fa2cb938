"""thermwit: certify entanglement in thermal states from ground-state weight.

The condition is one-sided: a thermal state is entangled whenever the
population of an entangled eigenstate exceeds 1/(1+R), with R the state's
robustness of entanglement (any certified lower bound on R may be
substituted). The package bundles analytic spectra and bounds for three
model systems, generic numerical routes to cross-check every closed form,
and a CLI (`thermwit`) that sweeps temperature grids and emits CSV.
"""
from .checks import ALL_CHECKS, CheckResult, run_all
from .config import DEFAULT_GRID, GridSpec, RunConfig, load_config, serialize_config
from .entanglement import (
    BoundKind,
    BoundSource,
    Partition,
    RobustnessBound,
    bipartite_pure_robustness,
    bound_from_relative_entropy,
    concurrence_two_qubit,
    dicke_half_asymptotic,
    dicke_overlap_closed,
    dicke_robustness,
    geometric_measure_als,
    ppt_min_eigenvalue,
    schmidt_coefficients,
    singlet_robustness,
)
from .errors import ThermwitError
from .numerics import bisect, hermitian_eigendecompose, partial_transpose
from .systems import (
    DimerParams,
    Graph,
    PureState,
    Spectrum,
    ToySpectrumParams,
    build_dimer_hamiltonian,
    build_stabilizer_hamiltonian,
    dicke_state,
    dimer_spectrum,
    graph_state,
    read_edge_list,
    stabilizer_operator,
    stabilizer_spectrum,
    toy_spectrum,
    write_edge_list,
)
from .thermal import (
    ThermalPoint,
    log_partition_function,
    log_stabilizer_partition_function,
    partition_function,
    partition_function_alpha_closed,
    partition_function_alpha_gamma,
    population,
    population_profile,
    relative_entropy_ground_to_thermal,
    stabilizer_partition_function,
    thermal_density_matrix,
)
from .witness import (
    TransitionResult,
    WitnessVerdict,
    concurrence_vanishing_temperature,
    dimer_condition,
    dimer_condition_margin,
    evaluate_condition,
    flip_probability_from_temperature,
    gapping_rule_min_gap,
    noise_threshold,
    satisfying_intervals,
    stabilizer_t_trans,
    toy_t0,
    toy_t1,
    toy_t_alpha,
    transition_temperature,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "BoundKind",
    "BoundSource",
    "CheckResult",
    "DEFAULT_GRID",
    "DimerParams",
    "Graph",
    "GridSpec",
    "Partition",
    "PureState",
    "RobustnessBound",
    "RunConfig",
    "Spectrum",
    "ThermalPoint",
    "ThermwitError",
    "ToySpectrumParams",
    "TransitionResult",
    "WitnessVerdict",
    "bipartite_pure_robustness",
    "bisect",
    "bound_from_relative_entropy",
    "build_dimer_hamiltonian",
    "build_stabilizer_hamiltonian",
    "concurrence_two_qubit",
    "concurrence_vanishing_temperature",
    "dicke_half_asymptotic",
    "dicke_overlap_closed",
    "dicke_robustness",
    "dicke_state",
    "dimer_condition",
    "dimer_condition_margin",
    "dimer_spectrum",
    "evaluate_condition",
    "flip_probability_from_temperature",
    "gapping_rule_min_gap",
    "geometric_measure_als",
    "graph_state",
    "hermitian_eigendecompose",
    "load_config",
    "log_partition_function",
    "log_stabilizer_partition_function",
    "noise_threshold",
    "partial_transpose",
    "partition_function",
    "partition_function_alpha_closed",
    "partition_function_alpha_gamma",
    "population",
    "population_profile",
    "ppt_min_eigenvalue",
    "read_edge_list",
    "relative_entropy_ground_to_thermal",
    "run_all",
    "satisfying_intervals",
    "schmidt_coefficients",
    "serialize_config",
    "singlet_robustness",
    "stabilizer_operator",
    "stabilizer_partition_function",
    "stabilizer_spectrum",
    "stabilizer_t_trans",
    "thermal_density_matrix",
    "toy_spectrum",
    "toy_t0",
    "toy_t1",
    "toy_t_alpha",
    "transition_temperature",
    "write_edge_list",
]
