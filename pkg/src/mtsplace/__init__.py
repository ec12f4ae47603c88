"""mtsplace: globally optimal placement of movable ceiling reflector panels.

Core entry points: :func:`solve_single` (single receiver, exact optimum via
the transition-angle sweep), :func:`solve_multi` (broadcast, majority vote),
the channel simulator (:func:`sample_channels`), the baseline methods, and
the Monte-Carlo harness (:func:`run_experiment`).
"""

from .baselines import (
    MethodId,
    cmp_placement,
    cmp_placement_multi,
    fix_placement,
    rmp_placement,
    snr,
    snr_boost_db,
)
from .harness import (
    ExperimentConfig,
    ExperimentResult,
    dbm_to_watts,
    emit_csv,
    run_experiment,
)
from .io import (
    format_solve_result,
    read_channel_file,
    read_config,
    read_multi_channel_file,
    toy_channel_set,
    write_channel_file,
    write_multi_channel_file,
)
from .multi import MultiChannelSet, majority_vote, solve_multi, vote_tally, worst_snr
from .optimizer import (
    CapExceededError,
    ChannelSet,
    Placement,
    SolveResult,
    arc_table,
    evaluate_objective,
    g_value,
    optimal_placement_for_mu,
    solve_brute_force,
    solve_single,
    transition_candidates,
)
from .simulate import (
    FadingParams,
    Geometry,
    GeometrySpec,
    PathlossModel,
    SeededRng,
    build_geometry,
    draw_actuator_positions,
    pathloss,
    perturb_csi,
    sample_channels,
    sample_link,
)

__version__ = "0.1.0"

__all__ = [
    "CapExceededError",
    "ChannelSet",
    "ExperimentConfig",
    "ExperimentResult",
    "FadingParams",
    "Geometry",
    "GeometrySpec",
    "MethodId",
    "MultiChannelSet",
    "PathlossModel",
    "Placement",
    "SeededRng",
    "SolveResult",
    "arc_table",
    "build_geometry",
    "cmp_placement",
    "cmp_placement_multi",
    "dbm_to_watts",
    "draw_actuator_positions",
    "emit_csv",
    "evaluate_objective",
    "fix_placement",
    "format_solve_result",
    "g_value",
    "majority_vote",
    "optimal_placement_for_mu",
    "pathloss",
    "perturb_csi",
    "read_channel_file",
    "read_config",
    "read_multi_channel_file",
    "rmp_placement",
    "run_experiment",
    "sample_channels",
    "sample_link",
    "snr",
    "snr_boost_db",
    "solve_brute_force",
    "solve_multi",
    "solve_single",
    "toy_channel_set",
    "transition_candidates",
    "vote_tally",
    "worst_snr",
    "write_channel_file",
    "write_multi_channel_file",
]
