"""Broadcast extension: one placement serving several receivers.

The placement is shared by all receivers, so the relevant score is the worst
receiver's SNR.  The solver runs the single-receiver sweep per receiver and
merges the per-receiver placements by majority vote; this is the protocol's
stated heuristic and carries no optimality guarantee.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .optimizer import ChannelSet, Placement, evaluate_objective, solve_single


@dataclass(frozen=True)
class MultiChannelSet:
    """Per-receiver channel sets sharing one panel/position grid."""

    users: tuple[ChannelSet, ...]

    def __post_init__(self):
        users = tuple(self.users)
        if not users:
            raise ValueError("need at least one receiver")
        m, l = users[0].m_count, users[0].l_count
        for i, cs in enumerate(users):
            if (cs.m_count, cs.l_count) != (m, l):
                raise ValueError(
                    f"receiver {i + 1} has table shape {(cs.m_count, cs.l_count)}, "
                    f"expected {(m, l)}"
                )
        object.__setattr__(self, "users", users)

    @property
    def u_count(self) -> int:
        return len(self.users)

    @property
    def m_count(self) -> int:
        return self.users[0].m_count

    @property
    def l_count(self) -> int:
        return self.users[0].l_count


def worst_snr(
    mcs: MultiChannelSet, placement: Placement, power_w: float, noise_w: float
) -> float:
    """Minimum over receivers of (P/sigma^2) |composite channel|^2."""
    if power_w <= 0:
        raise ValueError(f"transmit power must be positive, got {power_w}")
    if noise_w <= 0:
        raise ValueError(f"noise power must be positive, got {noise_w}")
    ratio = power_w / noise_w
    return min(ratio * evaluate_objective(cs, placement) ** 2 for cs in mcs.users)


def vote_tally(placements: Sequence[Placement], l_count: int) -> np.ndarray:
    """M x L table counting how many ballots chose each position.

    Every row sums to the number of ballots.
    """
    if not placements:
        raise ValueError("no placements to tally")
    m_count = len(placements[0])
    counts = np.zeros((m_count, l_count), dtype=np.int64)
    for p in placements:
        if len(p) != m_count:
            raise ValueError("placements disagree on panel count")
        counts[np.arange(m_count), p.zero_based] += 1
    return counts


def majority_vote(
    placements: Sequence[Placement], u_count: int | None = None
) -> Placement:
    """Position-wise consensus: each panel goes where most ballots put it.

    Ties resolve to the lowest position index.
    """
    if not placements:
        raise ValueError("no placements to vote over")
    if u_count is not None and len(placements) != u_count:
        raise ValueError(
            f"expected {u_count} ballots, got {len(placements)}"
        )
    l_count = max(max(p.chosen, default=1) for p in placements)
    counts = vote_tally(placements, l_count)
    if counts.shape[0] == 0:
        return Placement(())
    return Placement(tuple(int(i) + 1 for i in np.argmax(counts, axis=1)))


def solve_multi(mcs: MultiChannelSet) -> Placement:
    """Per-receiver optimal solves merged by majority voting."""
    ballots = [solve_single(cs).placement for cs in mcs.users]
    return majority_vote(ballots, mcs.u_count)
