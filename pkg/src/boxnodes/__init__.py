"""Two-state superpositions in a 1D box and their oscillating quasi-nodes."""

from .well import (
    WellConfig,
    TwoStateSuperposition,
    GeneralSuperposition,
    eigenfunction,
    energy,
    omega,
    delta_omega,
    beat_period,
    evaluate_psi,
    evaluate_psi_general,
    density_exact,
    density_closed_form,
    norm_integral,
    normalize,
)
from .nodes import (
    NodeKind,
    NodeSample,
    NodeTrajectory,
    ratio_from_state,
    analytic_node_position,
    find_real_part_zeros,
    find_density_minima,
    exact_zero_times,
    track_trajectory,
)
from .analysis import (
    SweepSpec,
    AmplitudeSweep,
    PowerLawFit,
    HeatmapGrid,
    oscillation_extrema,
    oscillation_amplitude,
    amplitude_sweep,
    fit_power_law,
    time_avg_node_position,
    time_avg_density,
    heatmap,
    local_max_positions,
    peak_separation,
)
from .verify import CheckResult, run_verification

__version__ = "0.1.0"

__all__ = [
    "WellConfig",
    "TwoStateSuperposition",
    "GeneralSuperposition",
    "eigenfunction",
    "energy",
    "omega",
    "delta_omega",
    "beat_period",
    "evaluate_psi",
    "evaluate_psi_general",
    "density_exact",
    "density_closed_form",
    "norm_integral",
    "normalize",
    "NodeKind",
    "NodeSample",
    "NodeTrajectory",
    "ratio_from_state",
    "analytic_node_position",
    "find_real_part_zeros",
    "find_density_minima",
    "exact_zero_times",
    "track_trajectory",
    "SweepSpec",
    "AmplitudeSweep",
    "PowerLawFit",
    "HeatmapGrid",
    "oscillation_extrema",
    "oscillation_amplitude",
    "amplitude_sweep",
    "fit_power_law",
    "time_avg_node_position",
    "time_avg_density",
    "heatmap",
    "local_max_positions",
    "peak_separation",
    "CheckResult",
    "run_verification",
]
