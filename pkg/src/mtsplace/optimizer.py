"""Single-receiver placement optimizer for movable ceiling reflectors.

The decision problem: each of M reflector panels must be parked at one of L
discrete candidate positions so that the magnitude of the composite channel
(direct link plus the selected reflected links) is maximized.  The solver
sweeps a unit-modulus rotation angle over the finite set of angles where the
per-panel greedy choice can change, which yields the exact global optimum in
O(M L^2 log(ML)) time instead of the L^M cost of exhaustive enumeration.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

TWO_PI = 2.0 * math.pi

# Pairs of reflected channels closer than this are interchangeable for every
# rotation angle and produce no transition candidate.
DEGENERATE_PAIR_EPS = 1e-300

# Default bound on the number of placements solve_brute_force will enumerate.
DEFAULT_BRUTE_FORCE_CAP = 10_000_000


class CapExceededError(RuntimeError):
    """Raised when brute-force enumeration would exceed its placement cap."""


@dataclass(frozen=True)
class ChannelSet:
    """Direct channel plus the M x L table of reflected channels.

    ``reflected[m, l]`` is the composite gain contributed by panel ``m``
    parked at candidate position ``l`` (0-based internally; the public
    placement indices are 1-based).  M = 0 is allowed and describes a link
    with no reflectors at all.
    """

    h0: complex
    reflected: np.ndarray

    def __post_init__(self):
        h0 = complex(self.h0)
        refl = np.asarray(self.reflected, dtype=np.complex128)
        if refl.ndim != 2:
            raise ValueError(f"reflected table must be 2-D, got shape {refl.shape}")
        if refl.shape[0] > 0 and refl.shape[1] < 1:
            raise ValueError("reflected table needs at least one position per panel")
        if not (math.isfinite(h0.real) and math.isfinite(h0.imag)):
            raise ValueError("direct channel must be finite")
        if refl.size and not (
            np.all(np.isfinite(refl.real)) and np.all(np.isfinite(refl.imag))
        ):
            raise ValueError("reflected channels must be finite")
        refl = refl.copy()
        refl.setflags(write=False)
        object.__setattr__(self, "h0", h0)
        object.__setattr__(self, "reflected", refl)

    @property
    def m_count(self) -> int:
        return self.reflected.shape[0]

    @property
    def l_count(self) -> int:
        return self.reflected.shape[1]


@dataclass(frozen=True)
class Placement:
    """One chosen position index per panel, 1-based, one entry per panel."""

    chosen: tuple[int, ...]

    def __post_init__(self):
        chosen = tuple(int(c) for c in self.chosen)
        if any(c < 1 for c in chosen):
            raise ValueError(f"position indices are 1-based, got {chosen}")
        object.__setattr__(self, "chosen", chosen)

    def __len__(self) -> int:
        return len(self.chosen)

    @property
    def zero_based(self) -> np.ndarray:
        return np.asarray(self.chosen, dtype=np.intp) - 1

    def as_onehot(self, l_count: int) -> np.ndarray:
        """Binary M x L selection matrix equivalent of this placement."""
        x = np.zeros((len(self.chosen), l_count), dtype=np.int64)
        if len(self.chosen):
            x[np.arange(len(self.chosen)), self.zero_based] = 1
        return x

    def validate_for(self, channels: ChannelSet) -> None:
        if len(self.chosen) != channels.m_count:
            raise ValueError(
                f"placement has {len(self.chosen)} entries but channel set has "
                f"{channels.m_count} panels"
            )
        if any(c > channels.l_count for c in self.chosen):
            raise ValueError(
                f"placement {self.chosen} exceeds position count {channels.l_count}"
            )


@dataclass(frozen=True)
class SolveResult:
    """Solver output: winning placement, its objective value, the rotation
    angle whose arc produced it, and how many candidate arcs were evaluated
    (1 when the candidate list was empty or the search space is a single
    placement)."""

    placement: Placement
    objective: float
    mu_angle: float
    candidates_evaluated: int


def _total_channel(channels: ChannelSet, placement: Placement) -> complex:
    placement.validate_for(channels)
    if channels.m_count == 0:
        return channels.h0
    picked = channels.reflected[np.arange(channels.m_count), placement.zero_based]
    return channels.h0 + complex(picked.sum())


def evaluate_objective(channels: ChannelSet, placement: Placement) -> float:
    """Magnitude of the composite channel under the given placement."""
    return abs(_total_channel(channels, placement))


def g_value(channels: ChannelSet, placement: Placement, mu_angle: float) -> float:
    """Rotated real part of the composite channel: a lower bound on the
    objective that is tight when mu_angle cancels the composite phase."""
    total = _total_channel(channels, placement)
    return (cmath.exp(1j * mu_angle) * total).real


def optimal_placement_for_mu(channels: ChannelSet, mu_angle: float) -> Placement:
    """Per-panel greedy placement for a fixed rotation angle.

    Each row is maximized independently: pick the position whose channel has
    the largest real part after rotation by ``mu_angle``.  Ties go to the
    lowest position index.
    """
    if channels.m_count == 0:
        return Placement(())
    mu = cmath.exp(1j * mu_angle)
    proj = (mu * channels.reflected).real
    return Placement(tuple(int(i) + 1 for i in np.argmax(proj, axis=1)))


def _annotated_transitions(reflected: np.ndarray):
    """All transition candidates with their originating (panel, pair).

    Returns ``(angles, rows, lo, hi)`` sorted by angle; each candidate is an
    angle where positions ``lo`` and ``hi`` of panel ``rows`` tie in rotated
    real part.  Duplicate angles are kept.
    """
    m_count, l_count = reflected.shape
    if m_count == 0 or l_count < 2:
        empty_f = np.empty(0, dtype=np.float64)
        empty_i = np.empty(0, dtype=np.intp)
        return empty_f, empty_i, empty_i, empty_i
    iu, ju = np.triu_indices(l_count, k=1)
    diffs = reflected[:, iu] - reflected[:, ju]
    keep = np.abs(diffs) > DEGENERATE_PAIR_EPS
    ang = np.angle(diffs[keep])
    rows = np.broadcast_to(np.arange(m_count)[:, None], diffs.shape)[keep]
    lo = np.broadcast_to(iu, diffs.shape)[keep]
    hi = np.broadcast_to(ju, diffs.shape)[keep]
    angles = np.concatenate([np.mod(0.5 * math.pi - ang, TWO_PI),
                             np.mod(1.5 * math.pi - ang, TWO_PI)])
    angles[angles >= TWO_PI] = 0.0
    rows = np.concatenate([rows, rows])
    lo = np.concatenate([lo, lo])
    hi = np.concatenate([hi, hi])
    order = np.argsort(angles, kind="stable")
    return angles[order], rows[order], lo[order], hi[order]


def transition_candidates(channels: ChannelSet) -> np.ndarray:
    """Sorted angles in [0, 2pi) where some panel's greedy choice can flip.

    Each non-degenerate pair of positions of one panel contributes exactly
    two angles, so the result has at most M*L*(L-1) entries; duplicates are
    kept.  Between consecutive candidates the greedy placement is constant.
    """
    angles, _, _, _ = _annotated_transitions(channels.reflected)
    return angles


def _arc_midpoints(distinct: np.ndarray) -> np.ndarray:
    """Midpoints of the circular arcs between consecutive distinct angles.

    Arc i runs from distinct[i] to distinct[i+1]; the last arc wraps from
    distinct[-1] back to distinct[0] + 2pi.
    """
    nxt = np.roll(distinct, -1).copy()
    nxt[-1] = distinct[0] + TWO_PI
    mids = np.mod(0.5 * (distinct + nxt), TWO_PI)
    mids[mids >= TWO_PI] = 0.0
    return mids


def arc_table(channels: ChannelSet) -> list[tuple[float, Placement, float]]:
    """Evaluate every candidate arc: (midpoint angle, placement, objective).

    Consecutive duplicate candidate angles delimit zero-width arcs, which
    contribute nothing; the table holds one row per distinct arc.  Intended
    for inspection and small instances; ``solve_single`` uses an incremental
    sweep instead.
    """
    angles, _, _, _ = _annotated_transitions(channels.reflected)
    if angles.size == 0:
        p = optimal_placement_for_mu(channels, 0.0)
        return [(0.0, p, evaluate_objective(channels, p))]
    distinct = np.unique(angles)
    out = []
    for mid in _arc_midpoints(distinct):
        p = optimal_placement_for_mu(channels, float(mid))
        out.append((float(mid), p, evaluate_objective(channels, p)))
    return out


def solve_single(channels: ChannelSet) -> SolveResult:
    """Globally optimal placement for a single receiver.

    Sweeps the arc midpoints between consecutive transition candidates
    (including the wrap-around arc).  The greedy winner of each panel is
    maintained incrementally: a candidate angle can only change the winner of
    the panel whose position pair generated it, so each crossing costs O(1)
    and the whole sweep stays within the O(M L^2 log(ML)) sort bound.
    """
    m_count = channels.m_count
    angles, rows, lo, hi = _annotated_transitions(channels.reflected)
    if angles.size == 0:
        placement = optimal_placement_for_mu(channels, 0.0)
        return SolveResult(placement, evaluate_objective(channels, placement), 0.0, 1)

    # Batch equal angles: crossings at one angle are processed together and
    # each distinct arc is evaluated once at its midpoint.
    boundary = np.empty(angles.size, dtype=bool)
    boundary[0] = True
    np.not_equal(angles[1:], angles[:-1], out=boundary[1:])
    starts = np.flatnonzero(boundary)
    distinct = angles[starts]
    bounds = np.append(starts, angles.size).tolist()
    mids = _arc_midpoints(distinct).tolist()
    n_arcs = len(mids)

    refl_rows = channels.reflected.tolist()
    rows_l = rows.tolist()
    lo_l = lo.tolist()
    hi_l = hi.tolist()

    mu0 = cmath.exp(1j * mids[0])
    winners = np.argmax((mu0 * channels.reflected).real, axis=1).tolist()
    total = channels.h0 + sum(refl_rows[m][winners[m]] for m in range(m_count))
    best_obj = abs(total)
    best_mu = mids[0]

    for i in range(1, n_arcs):
        mu = cmath.exp(1j * mids[i])
        for k in range(bounds[i], bounds[i + 1]):
            m = rows_l[k]
            row = refl_rows[m]
            w = winners[m]
            best_c = -1
            best_v = 0.0
            for c in sorted({w, lo_l[k], hi_l[k]}):
                v = (mu * row[c]).real
                if best_c < 0 or v > best_v:
                    best_c = c
                    best_v = v
            if best_c != w:
                total += row[best_c] - row[w]
                winners[m] = best_c
        obj = abs(total)
        if obj > best_obj:
            best_obj = obj
            best_mu = mids[i]

    placement = optimal_placement_for_mu(channels, best_mu)
    return SolveResult(
        placement, evaluate_objective(channels, placement), float(best_mu), n_arcs
    )


def solve_brute_force(
    channels: ChannelSet, cap: int = DEFAULT_BRUTE_FORCE_CAP
) -> SolveResult:
    """Exact maximizer by full enumeration of all L^M placements.

    Serves as the independent oracle for the sweep solver and as the runtime
    baseline.  Ties resolve to the lexicographically smallest placement.
    Raises :class:`CapExceededError` when L^M exceeds ``cap``.
    """
    m_count, l_count = channels.m_count, channels.l_count
    space = l_count ** m_count if m_count else 1
    if space > cap:
        raise CapExceededError(
            f"search space {space} placements exceeds cap {cap}"
        )

    def partial_sums(row_indices) -> np.ndarray:
        sums = np.zeros(1, dtype=np.complex128)
        for m in row_indices:
            sums = (sums[:, None] + channels.reflected[m][None, :]).ravel()
        return sums

    half = m_count // 2
    left = channels.h0 + partial_sums(range(half))
    right = partial_sums(range(half, m_count))

    # Row-major flat index == lexicographic placement order, so first-max
    # argmax picks the lexicographically smallest tie.
    best_val = -1.0
    best_flat = 0
    block = max(1, (1 << 22) // right.size)
    for i0 in range(0, left.size, block):
        seg = np.abs(left[i0 : i0 + block, None] + right[None, :])
        j = int(np.argmax(seg))
        v = float(seg.flat[j])
        if v > best_val:
            best_val = v
            best_flat = (i0 + j // right.size) * right.size + (j % right.size)

    digits = []
    x = best_flat
    for _ in range(m_count):
        digits.append(x % l_count)
        x //= l_count
    placement = Placement(tuple(d + 1 for d in reversed(digits)))
    objective = evaluate_objective(channels, placement)
    total = _total_channel(channels, placement)
    mu = math.fmod(-cmath.phase(total), TWO_PI) if objective > 0 else 0.0
    if mu < 0:
        mu += TWO_PI
    return SolveResult(placement, objective, mu, space)
