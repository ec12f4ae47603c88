import cmath
import math

import numpy as np
import pytest

from mtsplace import (
    ChannelSet,
    MultiChannelSet,
    Placement,
    SeededRng,
    cmp_placement,
    cmp_placement_multi,
    evaluate_objective,
    fix_placement,
    rmp_placement,
    snr,
    snr_boost_db,
    solve_single,
    worst_snr,
)

from conftest import random_channel_set, simulated_channel_set


def _phase_align_oracle(cs):
    """Independent restatement of the alignment rule: per panel, minimize the
    absolute phase mismatch with the direct channel."""
    target = cmath.phase(cs.h0)
    chosen = []
    for m in range(cs.m_count):
        dists = [
            abs(cmath.phase(cmath.exp(1j * (cmath.phase(cs.reflected[m, l]) - target))))
            for l in range(cs.l_count)
        ]
        chosen.append(min(range(cs.l_count), key=lambda l: dists[l]) + 1)
    return tuple(chosen)


class TestCmpPlacement:
    def test_real_direct_prefers_aligned_entry(self):
        cs = ChannelSet(1.0, np.array([[1.0 + 0.0j, 0.0 + 5.0j]]))
        assert cmp_placement(cs).chosen == (1,)

    def test_zero_direct_falls_back_to_magnitude(self):
        cs = ChannelSet(0.0, np.array([[1.0 + 0j, -3.0 + 0j]]))
        assert cmp_placement(cs).chosen == (2,)

    def test_toy_alignment(self, toy):
        assert cmp_placement(toy).chosen == _phase_align_oracle(toy)
        assert cmp_placement(toy).chosen == (1, 2)

    def test_row_independence(self):
        rng = np.random.default_rng(43)
        for _ in range(20):
            cs = random_channel_set(rng, 4, 3)
            whole = cmp_placement(cs)
            for m in range(4):
                row = ChannelSet(cs.h0, cs.reflected[m : m + 1])
                assert cmp_placement(row).chosen[0] == whole.chosen[m]

    def test_no_panels(self):
        cs = ChannelSet(1.0, np.zeros((0, 0), dtype=complex))
        assert cmp_placement(cs).chosen == ()


class TestCmpPlacementMulti:
    def test_single_user(self, toy):
        mcs = MultiChannelSet((toy,))
        assert cmp_placement_multi(mcs, 1.0, 1e-11).chosen == cmp_placement(toy).chosen

    def test_identical_users(self, toy):
        mcs = MultiChannelSet((toy, toy, toy))
        assert cmp_placement_multi(mcs, 1.0, 1e-11).chosen == cmp_placement(toy).chosen

    def test_picks_candidate_with_best_worst_snr(self):
        # user 1 aligns to phase 0, user 2 to phase pi/2; make user 2's
        # candidate the better compromise for the worst receiver
        u1 = ChannelSet(1.0, np.array([[1.0 + 0j, 0.9j]]))
        u2 = ChannelSet(1.0j, np.array([[0.01 + 0j, 1.0j]]))
        mcs = MultiChannelSet((u1, u2))
        cands = [cmp_placement(u) for u in mcs.users]
        scores = [worst_snr(mcs, p, 1.0, 1.0) for p in cands]
        got = cmp_placement_multi(mcs, 1.0, 1.0)
        assert got.chosen == cands[int(np.argmax(scores))].chosen
        assert worst_snr(mcs, got, 1.0, 1.0) == max(scores)


class TestRmpPlacement:
    def test_single_position_is_forced(self):
        cs = ChannelSet(1.0, np.array([[2.0 + 1j], [1.0 - 1j]]))
        assert rmp_placement(cs, 1.0, 1e-11, SeededRng(0)).chosen == (1, 1)

    def test_returned_beats_all_samples_on_replay(self, toy):
        rng = SeededRng(123, 0)
        got = rmp_placement(toy, 1.0, 1e-11, rng)
        best = snr(toy, got, 1.0, 1e-11)
        gen = rng.generator()
        draws = gen.integers(1, 4, size=(6, 2))
        for row in draws:
            assert best >= snr(toy, Placement(tuple(int(c) for c in row)), 1.0, 1e-11)

    def test_toy_seeded_draw_is_reproducible(self, toy):
        got = rmp_placement(toy, 1.0, 1e-11, SeededRng(123, 0))
        assert got.chosen == (3, 1)
        again = rmp_placement(toy, 1.0, 1e-11, SeededRng(123, 0))
        assert again.chosen == got.chosen

    def test_multi_uses_worst_snr(self):
        mcs = simulated_channel_set(71, 0, m_count=3, l_count=3, u_count=3)
        rng = SeededRng(7, 0)
        got = rmp_placement(mcs, 1.0, 1e-11, rng)
        best = worst_snr(mcs, got, 1.0, 1e-11)
        gen = rng.generator()
        draws = gen.integers(1, 4, size=(9, 3))
        for row in draws:
            p = Placement(tuple(int(c) for c in row))
            assert best >= worst_snr(mcs, p, 1.0, 1e-11)

    def test_rejects_bad_powers(self, toy):
        with pytest.raises(ValueError):
            rmp_placement(toy, -1.0, 1e-11, SeededRng(0))


class TestFixPlacement:
    def test_all_first_positions(self, toy):
        assert fix_placement(toy).chosen == (1, 1)

    def test_length_matches_panels(self):
        cs = ChannelSet(0.0, np.zeros((3, 2), dtype=complex))
        assert fix_placement(cs).chosen == (1, 1, 1)

    def test_objective_composes(self, toy):
        p = fix_placement(toy)
        assert evaluate_objective(toy, p) == pytest.approx(
            abs(toy.h0 + toy.reflected[0, 0] + toy.reflected[1, 0]), rel=1e-15
        )


class TestSnrMetrics:
    def test_unit_everything(self):
        cs = ChannelSet(1.0, np.zeros((0, 0), dtype=complex))
        assert snr(cs, Placement(()), 2.0, 2.0) == 1.0

    def test_reference_power_levels(self, toy):
        got = snr(toy, Placement((3, 2)), 1.0, 1e-11)
        assert got == pytest.approx(1e11 * (abs(4.1 - 0.1j) * 1e-6) ** 2, rel=1e-12)
        assert got == pytest.approx(1.682, abs=5e-4)

    def test_linearity_in_power(self, toy):
        p = Placement((3, 2))
        assert snr(toy, p, 2.0, 1e-11) == pytest.approx(
            2 * snr(toy, p, 1.0, 1e-11), rel=1e-15
        )

    def test_snr_rejects_bad_powers(self, toy):
        with pytest.raises(ValueError):
            snr(toy, Placement((1, 1)), 0.0, 1.0)

    def test_boost_identity_and_decade(self):
        assert snr_boost_db(5.0, 5.0) == 0.0
        assert snr_boost_db(10.0, 1.0) == pytest.approx(10.0, rel=1e-12)

    def test_boost_toy_winner(self, toy):
        f = evaluate_objective(toy, Placement((3, 2)))
        got = snr_boost_db(1e11 * f**2, 1e11 * abs(toy.h0) ** 2)
        assert got == pytest.approx(20 * math.log10(f / 2.0e-6), rel=1e-12)
        assert got == pytest.approx(6.2377, abs=1e-3)

    def test_boost_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            snr_boost_db(0.0, 1.0)
        with pytest.raises(ValueError):
            snr_boost_db(1.0, -2.0)

    def test_snr_invariant_under_common_rotation(self):
        rng = np.random.default_rng(47)
        cs = random_channel_set(rng, 3, 3)
        rot = cmath.exp(1j * 1.234)
        rotated = ChannelSet(cs.h0 * rot, cs.reflected * rot)
        p = Placement((2, 1, 3))
        assert snr(rotated, p, 1.0, 1.0) == pytest.approx(
            snr(cs, p, 1.0, 1.0), rel=1e-12
        )


class TestDominance:
    def test_sweep_solver_dominates_baselines(self):
        for trial in range(60):
            cs = simulated_channel_set(73, trial, m_count=4, l_count=4).users[0]
            best = solve_single(cs).objective
            for p in (
                cmp_placement(cs),
                rmp_placement(cs, 1.0, 1e-11, SeededRng(73, trial)),
                fix_placement(cs),
            ):
                assert best >= evaluate_objective(cs, p) * (1 - 1e-12)
