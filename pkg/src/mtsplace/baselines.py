"""Comparison methods and SNR metrics.

Three baselines bracket the sweep solver: a greedy that aligns each panel's
reflected channel with the direct channel (CMP), best-of-random-samples
(RMP), and a static all-first-positions placement (Fix).
"""

from __future__ import annotations

import cmath
from enum import Enum

import numpy as np

from .multi import MultiChannelSet, worst_snr
from .optimizer import ChannelSet, Placement, evaluate_objective
from .simulate import SeededRng


class MethodId(Enum):
    PROPOSED_SINGLE = "proposed_single"
    PROPOSED_MULTI = "proposed_multi"
    CMP = "cmp"
    RMP = "rmp"
    FIX = "fix"

    @property
    def csv_name(self) -> str:
        """Column label used in experiment CSV output."""
        if self in (MethodId.PROPOSED_SINGLE, MethodId.PROPOSED_MULTI):
            return "proposed"
        return self.value


def cmp_placement(channels: ChannelSet) -> Placement:
    """Greedy per-panel phase alignment with the direct channel.

    Each panel picks the position whose reflected channel's phase is closest
    to the direct channel's phase (magnitudes are ignored); with a zero
    direct channel the largest magnitude wins instead.  Ties go to the
    lowest index.
    """
    if channels.m_count == 0:
        return Placement(())
    if abs(channels.h0) == 0.0:
        return Placement(
            tuple(int(i) + 1 for i in np.argmax(np.abs(channels.reflected), axis=1))
        )
    mismatch = np.angle(channels.reflected) - cmath.phase(channels.h0)
    dist = np.abs(np.angle(np.exp(1j * mismatch)))
    return Placement(tuple(int(i) + 1 for i in np.argmin(dist, axis=1)))


def cmp_placement_multi(
    mcs: MultiChannelSet, power_w: float, noise_w: float
) -> Placement:
    """Run the single-receiver greedy per receiver, keep the candidate with
    the best worst-receiver SNR (first receiver wins ties)."""
    best_p = None
    best_v = -1.0
    for cs in mcs.users:
        p = cmp_placement(cs)
        v = worst_snr(mcs, p, power_w, noise_w)
        if v > best_v:
            best_p, best_v = p, v
    return best_p


def rmp_placement(
    channels: ChannelSet | MultiChannelSet,
    power_w: float,
    noise_w: float,
    rng: SeededRng,
) -> Placement:
    """Best of M*L uniformly random placements.

    Samples are drawn with replacement, one uniform position per panel; the
    winner maximizes the SNR (single receiver) or the worst-receiver SNR.
    Replaying the same seeded stream reproduces both the samples and the
    selection.
    """
    if power_w <= 0:
        raise ValueError(f"transmit power must be positive, got {power_w}")
    if noise_w <= 0:
        raise ValueError(f"noise power must be positive, got {noise_w}")
    multi = isinstance(channels, MultiChannelSet)
    m_count, l_count = channels.m_count, channels.l_count
    gen = rng.generator()
    n_samples = max(1, m_count * l_count)
    draws = gen.integers(1, l_count + 1, size=(n_samples, m_count))

    user_sets = channels.users if multi else (channels,)
    cols = np.arange(m_count)
    scores = np.full(n_samples, np.inf)
    for cs in user_sets:
        totals = cs.h0 + cs.reflected[cols, draws - 1].sum(axis=1)
        snrs = (power_w / noise_w) * np.abs(totals) ** 2
        scores = np.minimum(scores, snrs)
    best = int(np.argmax(scores))
    return Placement(tuple(int(c) for c in draws[best]))


def fix_placement(channels: ChannelSet | MultiChannelSet) -> Placement:
    """Static baseline: every panel stays at its first candidate position."""
    return Placement((1,) * channels.m_count)


def snr(
    channels: ChannelSet, placement: Placement, power_w: float, noise_w: float
) -> float:
    """Receiver SNR (P/sigma^2) |composite channel|^2, a linear ratio."""
    if power_w <= 0:
        raise ValueError(f"transmit power must be positive, got {power_w}")
    if noise_w <= 0:
        raise ValueError(f"noise power must be positive, got {noise_w}")
    return (power_w / noise_w) * evaluate_objective(channels, placement) ** 2


def snr_boost_db(snr_with: float, snr_without: float) -> float:
    """dB ratio of the SNR with panels deployed to the direct-link-only SNR."""
    if snr_with <= 0 or snr_without <= 0:
        raise ValueError(
            f"SNRs must be positive, got {snr_with} and {snr_without}"
        )
    return 10.0 * np.log10(snr_with / snr_without)
