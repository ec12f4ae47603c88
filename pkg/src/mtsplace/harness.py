"""Monte-Carlo experiment driver.

Runs seeded trials over a sweep variable (panel count M, positions per cell
L, elements per panel N, or receiver count U), scores every configured
method by its SNR boost over the direct link alone, and writes one CSV row
per (sweep value, method, trial).

Reproducibility: trial t derives four fixed RNG streams from the config seed
(receiver positions, channel fading, CSI noise, random-placement sampling),
so re-running a config reproduces every channel and every placement exactly,
and adding or removing methods does not change what the others see.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field, replace

import numpy as np

from .baselines import (
    MethodId,
    cmp_placement,
    cmp_placement_multi,
    fix_placement,
    rmp_placement,
    snr_boost_db,
)
from .multi import MultiChannelSet, solve_multi
from .optimizer import Placement, evaluate_objective, solve_single
from .simulate import (
    FadingParams,
    GeometrySpec,
    SeededRng,
    build_geometry,
    draw_actuator_positions,
    perturb_csi,
    sample_channels,
)

SWEEP_VARS = ("M", "L", "N", "U")
METHOD_NAMES = ("proposed", "cmp", "rmp", "fix")

CSV_HEADER = "sweep_var,sweep_value,method,trial,boost_db,solve_seconds"

# Per-trial RNG stream offsets (see module docstring).
_STREAM_ACTUATORS = 0
_STREAM_CHANNELS = 1
_STREAM_CSI = 2
_STREAM_RMP = 3
_STREAMS_PER_TRIAL = 4


def dbm_to_watts(dbm: float) -> float:
    return 10.0 ** ((dbm - 30.0) / 10.0)


@dataclass(frozen=True)
class ExperimentConfig:
    """Everything a Monte-Carlo run needs; defaults reproduce the standard
    scenario (100 x 20 m ceiling, 6 x 5 cells, L = 6, N = 100, 30 dBm
    transmit power, -80 dBm noise, single receiver)."""

    geometry: GeometrySpec = field(default_factory=GeometrySpec)
    fading: FadingParams = field(default_factory=FadingParams)
    power_dbm: float = 30.0
    noise_dbm: float = -80.0
    u_count: int = 1
    trials: int = 1000
    seed: int = 0
    sweep_var: str = "M"
    sweep_values: tuple[int, ...] = (10, 20, 30, 40, 50)
    methods: tuple[str, ...] = METHOD_NAMES

    def __post_init__(self):
        if self.sweep_var not in SWEEP_VARS:
            raise ValueError(
                f"sweep variable must be one of {SWEEP_VARS}, got {self.sweep_var!r}"
            )
        if any(v < 1 for v in self.sweep_values):
            raise ValueError(f"sweep values must be positive, got {self.sweep_values}")
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if self.u_count < 1:
            raise ValueError(f"u_count must be >= 1, got {self.u_count}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        unknown = set(self.methods) - set(METHOD_NAMES)
        if unknown:
            raise ValueError(
                f"unknown methods {sorted(unknown)}; valid: {METHOD_NAMES}"
            )
        object.__setattr__(self, "sweep_values", tuple(int(v) for v in self.sweep_values))
        object.__setattr__(self, "methods", tuple(self.methods))

    def geometry_for(self, value: int) -> GeometrySpec:
        """Geometry at one sweep point.

        Sweeping M keeps the configured row count and scales the column
        count, so the value must be a multiple of ``grid_my``.
        """
        if self.sweep_var == "M":
            if value % self.geometry.grid_my != 0:
                raise ValueError(
                    f"sweep value M={value} must be a multiple of the cell-grid "
                    f"row count grid_my={self.geometry.grid_my}"
                )
            return replace(self.geometry, grid_mx=value // self.geometry.grid_my)
        if self.sweep_var == "L":
            return replace(self.geometry, l_count=value)
        if self.sweep_var == "N":
            return replace(self.geometry, atoms_per_mts=value)
        return self.geometry

    def users_for(self, value: int) -> int:
        return value if self.sweep_var == "U" else self.u_count


@dataclass
class ExperimentResult:
    """Per-trial boost and timing samples for every (sweep value, method)."""

    sweep_var: str
    sweep_values: tuple[int, ...]
    methods: tuple[str, ...]
    trials: int
    boosts: dict[tuple[int, str], np.ndarray]
    seconds: dict[tuple[int, str], np.ndarray]

    def mean_boost_db(self, value: int, method: str) -> float:
        return float(np.mean(self.boosts[(value, method)]))

    def median_boost_db(self, value: int, method: str) -> float:
        return float(np.median(self.boosts[(value, method)]))

    def mean_seconds(self, value: int, method: str) -> float:
        return float(np.mean(self.seconds[(value, method)]))


def _resolve_method(name: str, u_count: int) -> MethodId:
    if name == "proposed":
        return MethodId.PROPOSED_SINGLE if u_count == 1 else MethodId.PROPOSED_MULTI
    return MethodId(name)


def _run_method(
    method: MethodId,
    mcs: MultiChannelSet,
    power_w: float,
    noise_w: float,
    rmp_rng: SeededRng,
) -> Placement:
    if method is MethodId.PROPOSED_SINGLE:
        return solve_single(mcs.users[0]).placement
    if method is MethodId.PROPOSED_MULTI:
        return solve_multi(mcs)
    if method is MethodId.CMP:
        if mcs.u_count == 1:
            return cmp_placement(mcs.users[0])
        return cmp_placement_multi(mcs, power_w, noise_w)
    if method is MethodId.RMP:
        target = mcs.users[0] if mcs.u_count == 1 else mcs
        return rmp_placement(target, power_w, noise_w, rmp_rng)
    return fix_placement(mcs.users[0])


def _boost_db(
    mcs: MultiChannelSet, placement: Placement, power_w: float, noise_w: float
) -> float:
    """SNR boost over the system without panels (direct link only).

    With several receivers this is the worst of the per-receiver boosts,
    each normalized by that receiver's own direct-only SNR.
    """
    ratio = power_w / noise_w
    return min(
        snr_boost_db(
            ratio * evaluate_objective(cs, placement) ** 2, ratio * abs(cs.h0) ** 2
        )
        for cs in mcs.users
    )


def run_experiment(config: ExperimentConfig) -> ExperimentResult:
    """Execute the configured sweep.

    For each trial: draw receiver positions, sample channels, optionally
    perturb them (methods then optimize on the perturbed table while scoring
    always uses the true one), run every method, and record its boost and
    placement-computation time (channel generation and scoring excluded).
    """
    power_w = dbm_to_watts(config.power_dbm)
    noise_w = dbm_to_watts(config.noise_dbm)
    boosts: dict[tuple[int, str], np.ndarray] = {}
    seconds: dict[tuple[int, str], np.ndarray] = {}

    for value in config.sweep_values:
        spec = config.geometry_for(value)
        u_count = config.users_for(value)
        per_method_boost = {m: np.empty(config.trials) for m in config.methods}
        per_method_secs = {m: np.empty(config.trials) for m in config.methods}

        for trial in range(config.trials):
            base = trial * _STREAMS_PER_TRIAL
            actuators = draw_actuator_positions(
                spec, u_count, SeededRng(config.seed, base + _STREAM_ACTUATORS)
            )
            geometry = build_geometry(spec, actuators)
            true_mcs = sample_channels(
                geometry, config.fading, SeededRng(config.seed, base + _STREAM_CHANNELS)
            )
            if config.fading.csi_noise_var > 0:
                seen_mcs = perturb_csi(
                    true_mcs,
                    config.fading.csi_noise_var,
                    SeededRng(config.seed, base + _STREAM_CSI),
                )
            else:
                seen_mcs = true_mcs
            rmp_rng = SeededRng(config.seed, base + _STREAM_RMP)

            for name in config.methods:
                method = _resolve_method(name, u_count)
                t0 = time.perf_counter()
                placement = _run_method(method, seen_mcs, power_w, noise_w, rmp_rng)
                elapsed = time.perf_counter() - t0
                per_method_boost[name][trial] = _boost_db(
                    true_mcs, placement, power_w, noise_w
                )
                per_method_secs[name][trial] = elapsed

        for name in config.methods:
            boosts[(value, name)] = per_method_boost[name]
            seconds[(value, name)] = per_method_secs[name]

    return ExperimentResult(
        config.sweep_var,
        config.sweep_values,
        config.methods,
        config.trials,
        boosts,
        seconds,
    )


def emit_csv(result: ExperimentResult, path) -> None:
    """Write one row per trial, ordered by (sweep value, method, trial).

    Re-running the same config reproduces the file byte-for-byte except for
    the solve_seconds column.
    """
    lines = [CSV_HEADER]
    for value in result.sweep_values:
        for method in result.methods:
            b = result.boosts[(value, method)]
            s = result.seconds[(value, method)]
            for trial in range(result.trials):
                lines.append(
                    f"{result.sweep_var},{value},{method},{trial},"
                    f"{float(b[trial])!r},{float(s[trial])!r}"
                )
    try:
        with open(path, "w") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as e:
        raise OSError(f"cannot write CSV to {path}: {e}") from e
