"""Workshop geometry and stochastic channel generation.

A rectangular ceiling is divided into a grid of cells, one movable reflector
panel per cell with L discrete parking positions along the cell centerline.
Every individual link (controller to receiver, controller to reflecting
element, element to receiver) is Rician: a deterministic distance-phased
line-of-sight term plus circularly symmetric Gaussian scatter, scaled by a
log-distance pathloss.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .multi import MultiChannelSet
from .optimizer import ChannelSet

TWO_PI = 2.0 * math.pi

# At or above this Rician factor the scatter term is dropped entirely and the
# link is pure line-of-sight.
PURE_LOS_DELTA = 1e12


class PathlossModel(Enum):
    LOS_EXP = "los"
    NLOS_EXP = "nlos"


def pathloss(distance_m, model: PathlossModel):
    """Log-distance power pathloss factor.

    LOS_EXP:  10^(-(30   + 22.0 log10 d) / 10)
    NLOS_EXP: 10^(-(32.6 + 36.7 log10 d) / 10)

    Accepts scalars or arrays; strictly decreasing in distance.
    """
    d = np.asarray(distance_m, dtype=np.float64)
    if np.any(d <= 0):
        raise ValueError("distance must be positive")
    if model is PathlossModel.LOS_EXP:
        out = 10.0 ** (-(30.0 + 22.0 * np.log10(d)) / 10.0)
    elif model is PathlossModel.NLOS_EXP:
        out = 10.0 ** (-(32.6 + 36.7 * np.log10(d)) / 10.0)
    else:
        raise ValueError(f"unknown pathloss model {model!r}")
    return float(out) if np.isscalar(distance_m) else out


@dataclass(frozen=True)
class FadingParams:
    """Rician fading configuration.

    ``rician_delta`` and ``pathloss_model`` describe a generic link (and are
    what :func:`sample_link` uses).  In :func:`sample_channels` the reflected
    links always use the LOS pathloss law with ``rician_delta``; setting
    ``direct_nlos`` switches only the direct link to pure scatter (delta 0)
    with the NLOS pathloss law.  ``csi_noise_var`` is the per-entry variance
    of the complex noise used by :func:`perturb_csi`.
    """

    rician_delta: float = 15.0
    pathloss_model: PathlossModel = PathlossModel.LOS_EXP
    csi_noise_var: float = 0.0
    direct_nlos: bool = False

    def __post_init__(self):
        if self.rician_delta < 0:
            raise ValueError(f"Rician factor must be >= 0, got {self.rician_delta}")
        if self.csi_noise_var < 0:
            raise ValueError(f"noise variance must be >= 0, got {self.csi_noise_var}")


@dataclass(frozen=True)
class SeededRng:
    """Value-type RNG handle: (seed, stream) fully determines every draw.

    Each consumer derives a fresh generator, so repeated calls with the same
    handle reproduce identical output regardless of call order or threading.
    """

    seed: int
    stream: int = 0

    def __post_init__(self):
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")
        if self.stream < 0:
            raise ValueError(f"stream must be non-negative, got {self.stream}")

    def generator(self) -> np.random.Generator:
        return np.random.default_rng(
            np.random.SeedSequence(entropy=self.seed, spawn_key=(self.stream,))
        )


@dataclass(frozen=True)
class GeometrySpec:
    """Static layout parameters: ceiling extent, cell grid, panel layout."""

    ceiling_x: float = 100.0
    ceiling_y: float = 20.0
    height: float = 5.0
    grid_mx: int = 6
    grid_my: int = 5
    l_count: int = 6
    atoms_per_mts: int = 100
    wavelength: float = 0.1
    # Wall-mounted at the midpoint of the short edge, below the panel plane:
    # a controller inside the ceiling plane sits ~1.4 m from the nearest
    # candidate position and that single panel then dominates every method.
    controller_pos: tuple[float, float, float] = (0.0, 10.0, 1.0)

    def __post_init__(self):
        for name in ("ceiling_x", "ceiling_y", "height", "wavelength"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        for name in ("grid_mx", "grid_my", "atoms_per_mts"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1")
        if self.l_count < 1:
            raise ValueError(
                "l_count must be >= 1: candidate positions sit at odd "
                "multiples of 1/(2L) of the cell width on the centerline"
            )
        object.__setattr__(
            self, "controller_pos", tuple(float(c) for c in self.controller_pos)
        )

    @property
    def m_count(self) -> int:
        return self.grid_mx * self.grid_my


@dataclass(frozen=True)
class Geometry:
    """Concrete scene: candidate/element coordinates plus receiver positions.

    ``candidate_positions`` has shape (M, L, 3), ``atom_positions``
    (M, L, N, 3), ``actuator_pos`` (U, 3); all in meters.  Panels live on the
    ceiling plane, receivers on the ground plane.
    """

    spec: GeometrySpec
    candidate_positions: np.ndarray
    atom_positions: np.ndarray
    actuator_pos: np.ndarray

    @property
    def u_count(self) -> int:
        return self.actuator_pos.shape[0]


def draw_actuator_positions(
    spec: GeometrySpec, u_count: int, rng: SeededRng
) -> np.ndarray:
    """Receivers drawn uniformly over the ground rectangle under the ceiling."""
    if u_count < 1:
        raise ValueError(f"need at least one receiver, got {u_count}")
    gen = rng.generator()
    pos = np.zeros((u_count, 3))
    pos[:, 0] = gen.uniform(0.0, spec.ceiling_x, u_count)
    pos[:, 1] = gen.uniform(0.0, spec.ceiling_y, u_count)
    return pos


def build_geometry(spec: GeometrySpec, actuator_pos) -> Geometry:
    """Lay out all candidate positions and per-candidate element coordinates.

    Cells tile the ceiling in row-major order (y-rows first).  The L
    candidates of a cell sit on its x-centerline at fractions (2i-1)/(2L) of
    the cell width.  Elements form a ceil(sqrt(N))-square grid at half-
    wavelength spacing, truncated to N and centered on the candidate point.
    """
    actuators = np.asarray(actuator_pos, dtype=np.float64)
    if actuators.ndim != 2 or actuators.shape[1] != 3:
        raise ValueError("actuator positions must have shape (U, 3)")
    if actuators.shape[0] < 1:
        raise ValueError("need at least one receiver position")
    if np.any(actuators[:, 2] != 0.0):
        raise ValueError("receivers must lie on the ground plane (z = 0)")

    cell_w = spec.ceiling_x / spec.grid_mx
    cell_h = spec.ceiling_y / spec.grid_my
    m_count, l_count, n_atoms = spec.m_count, spec.l_count, spec.atoms_per_mts

    candidates = np.zeros((m_count, l_count, 3))
    fracs = (2.0 * np.arange(1, l_count + 1) - 1.0) / (2.0 * l_count)
    m = 0
    for iy in range(spec.grid_my):
        for ix in range(spec.grid_mx):
            candidates[m, :, 0] = ix * cell_w + fracs * cell_w
            candidates[m, :, 1] = (iy + 0.5) * cell_h
            candidates[m, :, 2] = spec.height
            m += 1

    side = math.isqrt(n_atoms)
    if side * side < n_atoms:
        side += 1
    ax, ay = np.meshgrid(np.arange(side), np.arange(side), indexing="ij")
    offsets = np.stack(
        [
            (ax.ravel() - (side - 1) / 2.0) * spec.wavelength / 2.0,
            (ay.ravel() - (side - 1) / 2.0) * spec.wavelength / 2.0,
            np.zeros(side * side),
        ],
        axis=1,
    )[:n_atoms]

    atoms = candidates[:, :, None, :] + offsets[None, None, :, :]
    return Geometry(spec, candidates, atoms, actuators)


def _complex_normal(gen: np.random.Generator, shape) -> np.ndarray:
    """Circularly symmetric complex Gaussian with unit variance per entry."""
    return (gen.standard_normal(shape) + 1j * gen.standard_normal(shape)) / math.sqrt(2.0)


def _rician(distances, scatter, delta: float, model: PathlossModel, wavelength: float):
    """Assemble Rician links from distances and pre-drawn scatter terms."""
    gamma = pathloss(distances, model)
    los = np.exp(-1j * TWO_PI * np.asarray(distances) / wavelength)
    if delta >= PURE_LOS_DELTA:
        return np.sqrt(gamma) * los
    los_w = math.sqrt(delta / (1.0 + delta))
    scat_w = math.sqrt(1.0 / (1.0 + delta))
    return np.sqrt(gamma) * (los_w * los + scat_w * scatter)


def sample_link(
    rng: SeededRng, distance_m: float, params: FadingParams, wavelength: float = 0.1
) -> complex:
    """One Rician link draw for a point-to-point distance."""
    if distance_m <= 0:
        raise ValueError("distance must be positive")
    gen = rng.generator()
    scatter = _complex_normal(gen, ())
    return complex(
        _rician(distance_m, scatter, params.rician_delta, params.pathloss_model, wavelength)
    )


def _sample_components(geometry: Geometry, params: FadingParams, rng: SeededRng):
    """Draw every individual link: direct (U,), inbound (M,L,N), outbound
    (U,M,L,N).

    Inbound links (controller to element) are shared by all receivers.  Draw
    order is fixed (direct, inbound, outbound) so a given (seed, stream)
    always produces the same realization.
    """
    spec = geometry.spec
    ctrl = np.asarray(spec.controller_pos)
    acts = geometry.actuator_pos
    atoms = geometry.atom_positions

    d_direct = np.linalg.norm(acts - ctrl[None, :], axis=1)
    d_in = np.linalg.norm(atoms - ctrl[None, None, None, :], axis=-1)
    d_out = np.linalg.norm(
        atoms[None, :, :, :, :] - acts[:, None, None, None, :], axis=-1
    )

    gen = rng.generator()
    scat_direct = _complex_normal(gen, d_direct.shape)
    scat_in = _complex_normal(gen, d_in.shape)
    scat_out = _complex_normal(gen, d_out.shape)

    if params.direct_nlos:
        direct_delta, direct_model = 0.0, PathlossModel.NLOS_EXP
    else:
        direct_delta, direct_model = params.rician_delta, params.pathloss_model

    wl = spec.wavelength
    h_direct = _rician(d_direct, scat_direct, direct_delta, direct_model, wl)
    # Reflected hops always follow the LOS pathloss law.
    f_in = _rician(d_in, scat_in, params.rician_delta, PathlossModel.LOS_EXP, wl)
    g_out = _rician(d_out, scat_out, params.rician_delta, PathlossModel.LOS_EXP, wl)
    return h_direct, f_in, g_out


def sample_channels(
    geometry: Geometry, params: FadingParams, rng: SeededRng
) -> MultiChannelSet:
    """Composite channel tables for every receiver.

    Each reflected entry is the sum over elements of inbound times outbound
    link gains; the inbound hop is common to all receivers.
    """
    h_direct, f_in, g_out = _sample_components(geometry, params, rng)
    reflected = np.einsum("mln,umln->uml", f_in, g_out)
    return MultiChannelSet(
        tuple(
            ChannelSet(complex(h_direct[u]), reflected[u])
            for u in range(geometry.u_count)
        )
    )


def perturb_csi(
    mcs: MultiChannelSet, variance: float, rng: SeededRng
) -> MultiChannelSet:
    """Fresh channel set with complex Gaussian noise of the given per-entry
    variance added to every direct and composite reflected channel."""
    if variance < 0:
        raise ValueError(f"noise variance must be >= 0, got {variance}")
    gen = rng.generator()
    scale = math.sqrt(variance)
    u, m, l = mcs.u_count, mcs.m_count, mcs.l_count
    noise_direct = scale * _complex_normal(gen, (u,))
    noise_refl = scale * _complex_normal(gen, (u, m, l))
    return MultiChannelSet(
        tuple(
            ChannelSet(
                mcs.users[i].h0 + complex(noise_direct[i]),
                mcs.users[i].reflected + noise_refl[i],
            )
            for i in range(u)
        )
    )
