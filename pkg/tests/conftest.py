import numpy as np
import pytest

from mtsplace import (
    ChannelSet,
    FadingParams,
    GeometrySpec,
    SeededRng,
    build_geometry,
    draw_actuator_positions,
    sample_channels,
    toy_channel_set,
)


@pytest.fixture(scope="session")
def toy():
    return toy_channel_set()


def random_channel_set(rng, m_count, l_count, h0_scale=1.0):
    """Dense complex Gaussian instance, no geometric structure."""
    if m_count == 0:
        refl = np.zeros((0, 0), dtype=complex)
    else:
        refl = rng.standard_normal((m_count, l_count)) + 1j * rng.standard_normal(
            (m_count, l_count)
        )
    h0 = h0_scale * complex(rng.standard_normal(), rng.standard_normal())
    return ChannelSet(h0, refl)


def simulated_channel_set(seed, trial, m_count, l_count, n_atoms=16, u_count=1):
    """Small simulator-drawn instance; panels in a single row of cells."""
    spec = GeometrySpec(
        grid_mx=m_count, grid_my=1, l_count=l_count, atoms_per_mts=n_atoms
    )
    acts = draw_actuator_positions(spec, u_count, SeededRng(seed, 4 * trial))
    geometry = build_geometry(spec, acts)
    return sample_channels(geometry, FadingParams(), SeededRng(seed, 4 * trial + 1))


def enumerate_objectives(channels):
    """Independent oracle: every placement's objective by direct summation."""
    import itertools

    out = {}
    m, l = channels.m_count, channels.l_count
    for combo in itertools.product(range(l), repeat=m):
        total = channels.h0 + sum(channels.reflected[i, combo[i]] for i in range(m))
        out[tuple(c + 1 for c in combo)] = abs(total)
    return out
