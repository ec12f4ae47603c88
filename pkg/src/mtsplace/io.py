"""File formats: channel tables, solver results, experiment configs.

Channel files are line-oriented CSV-ish text, one record per channel:

    m,l,re,im          single-receiver file
    u,m,l,re,im        multi-receiver file

Indices are 1-based; the record with m = 0 and l = 0 carries the direct
channel (per receiver ``u`` in the multi-receiver format, where ``u`` runs
from 1 to U).  Floats are written with ``repr`` so a write/read round trip
is bit-exact.  Blank lines and ``#`` comments are ignored.

Experiment configs are flat ``key = value`` text; see
:data:`CONFIG_KEYS` and the commented example shipped under ``configs/``.
"""

from __future__ import annotations

import importlib.resources
from pathlib import Path

import numpy as np

from .harness import ExperimentConfig
from .multi import MultiChannelSet
from .optimizer import ChannelSet, SolveResult
from .simulate import FadingParams, GeometrySpec


def _data_lines(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line


def _parse_record(line: str, ln: int, n_fields: int, path) -> tuple:
    parts = [p.strip() for p in line.split(",")]
    if len(parts) != n_fields:
        raise ValueError(
            f"{path}:{ln}: expected {n_fields} comma-separated fields, got {len(parts)}"
        )
    try:
        idx = [int(p) for p in parts[: n_fields - 2]]
        re_part, im_part = float(parts[-2]), float(parts[-1])
    except ValueError as e:
        raise ValueError(f"{path}:{ln}: {e}") from None
    return (*idx, complex(re_part, im_part))


def _assemble_channel_set(records: list[tuple[int, int, complex]], path) -> ChannelSet:
    h0 = None
    refl = {}
    for m, l, value in records:
        if m == 0 and l == 0:
            if h0 is not None:
                raise ValueError(f"{path}: duplicate direct-channel record")
            h0 = value
        elif m >= 1 and l >= 1:
            if (m, l) in refl:
                raise ValueError(f"{path}: duplicate record for panel {m}, position {l}")
            refl[(m, l)] = value
        else:
            raise ValueError(f"{path}: invalid indices ({m}, {l})")
    if h0 is None:
        raise ValueError(f"{path}: missing direct-channel record (0,0,re,im)")
    if not refl:
        return ChannelSet(h0, np.zeros((0, 0), dtype=np.complex128))
    m_count = max(m for m, _ in refl)
    l_count = max(l for _, l in refl)
    table = np.zeros((m_count, l_count), dtype=np.complex128)
    seen = np.zeros((m_count, l_count), dtype=bool)
    for (m, l), value in refl.items():
        table[m - 1, l - 1] = value
        seen[m - 1, l - 1] = True
    if not seen.all():
        missing = np.argwhere(~seen)[0] + 1
        raise ValueError(
            f"{path}: incomplete table, e.g. no record for panel "
            f"{missing[0]}, position {missing[1]}"
        )
    return ChannelSet(h0, table)


def read_channel_file(path) -> ChannelSet:
    """Parse a single-receiver ``m,l,re,im`` channel file."""
    text = Path(path).read_text()
    records = [_parse_record(line, ln, 4, path) for ln, line in _data_lines(text)]
    return _assemble_channel_set(records, path)


def write_channel_file(channels: ChannelSet, path) -> None:
    """Write a single-receiver channel file (round-trip exact)."""
    lines = [f"0,0,{channels.h0.real!r},{channels.h0.imag!r}"]
    for m in range(channels.m_count):
        for l in range(channels.l_count):
            v = complex(channels.reflected[m, l])
            lines.append(f"{m + 1},{l + 1},{v.real!r},{v.imag!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def read_multi_channel_file(path) -> MultiChannelSet:
    """Parse a multi-receiver ``u,m,l,re,im`` channel file."""
    text = Path(path).read_text()
    per_user: dict[int, list] = {}
    for ln, line in _data_lines(text):
        u, m, l, value = _parse_record(line, ln, 5, path)
        if u < 1:
            raise ValueError(f"{path}:{ln}: receiver index must be >= 1, got {u}")
        per_user.setdefault(u, []).append((m, l, value))
    if not per_user:
        raise ValueError(f"{path}: no channel records")
    u_count = max(per_user)
    if sorted(per_user) != list(range(1, u_count + 1)):
        raise ValueError(f"{path}: receiver indices must be contiguous from 1")
    return MultiChannelSet(
        tuple(_assemble_channel_set(per_user[u], path) for u in range(1, u_count + 1))
    )


def write_multi_channel_file(mcs: MultiChannelSet, path) -> None:
    """Write a multi-receiver channel file (round-trip exact)."""
    lines = []
    for u, cs in enumerate(mcs.users, start=1):
        lines.append(f"{u},0,0,{cs.h0.real!r},{cs.h0.imag!r}")
        for m in range(cs.m_count):
            for l in range(cs.l_count):
                v = complex(cs.reflected[m, l])
                lines.append(f"{u},{m + 1},{l + 1},{v.real!r},{v.imag!r}")
    Path(path).write_text("\n".join(lines) + "\n")


def format_solve_result(result: SolveResult) -> str:
    """Key-value text rendering of a solver result."""
    chosen = ",".join(str(c) for c in result.placement.chosen)
    return (
        f"placement = {chosen}\n"
        f"objective = {result.objective!r}\n"
        f"mu_angle = {result.mu_angle!r}\n"
        f"candidates_evaluated = {result.candidates_evaluated}\n"
    )


def toy_channel_set() -> ChannelSet:
    """The packaged 2-panel, 3-position golden reference instance."""
    text = (
        importlib.resources.files("mtsplace")
        .joinpath("data/toy_channels.txt")
        .read_text()
    )
    records = [
        _parse_record(line, ln, 4, "toy_channels.txt")
        for ln, line in _data_lines(text)
    ]
    return _assemble_channel_set(records, "toy_channels.txt")


# Config schema: key -> (parser, target). Targets: geometry / fading / top.
def _parse_bool(s: str) -> bool:
    v = s.strip().lower()
    if v in ("true", "1", "yes", "on"):
        return True
    if v in ("false", "0", "no", "off"):
        return False
    raise ValueError(f"expected a boolean, got {s!r}")


def _parse_triple(s: str) -> tuple[float, float, float]:
    parts = [float(p) for p in s.split(",")]
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated numbers, got {s!r}")
    return tuple(parts)


def _parse_int_list(s: str) -> tuple[int, ...]:
    return tuple(int(p) for p in s.split(",") if p.strip())


def _parse_str_list(s: str) -> tuple[str, ...]:
    return tuple(p.strip() for p in s.split(",") if p.strip())


CONFIG_KEYS = {
    "ceiling_x": (float, "geometry"),
    "ceiling_y": (float, "geometry"),
    "height": (float, "geometry"),
    "grid_mx": (int, "geometry"),
    "grid_my": (int, "geometry"),
    "l_count": (int, "geometry"),
    "atoms_per_mts": (int, "geometry"),
    "wavelength": (float, "geometry"),
    "controller": (_parse_triple, "geometry:controller_pos"),
    "rician_delta": (float, "fading"),
    "nlos": (_parse_bool, "fading:direct_nlos"),
    "csi_noise_var": (float, "fading"),
    "power_dbm": (float, "top"),
    "noise_dbm": (float, "top"),
    "u_count": (int, "top"),
    "trials": (int, "top"),
    "seed": (int, "top"),
    "sweep": (str, "top:sweep_var"),
    "sweep_values": (_parse_int_list, "top"),
    "methods": (_parse_str_list, "top"),
}


def read_config(path) -> ExperimentConfig:
    """Parse a ``key = value`` experiment config file."""
    text = Path(path).read_text()
    geo_kwargs, fad_kwargs, top_kwargs = {}, {}, {}
    for ln, line in _data_lines(text):
        if "=" not in line:
            raise ValueError(f"{path}:{ln}: expected 'key = value', got {line!r}")
        key, _, raw = line.partition("=")
        key = key.strip()
        if key not in CONFIG_KEYS:
            raise ValueError(f"{path}:{ln}: unknown config key {key!r}")
        parser, target = CONFIG_KEYS[key]
        try:
            value = parser(raw.strip())
        except ValueError as e:
            raise ValueError(f"{path}:{ln}: bad value for {key}: {e}") from None
        section, _, field = target.partition(":")
        field = field or key
        {"geometry": geo_kwargs, "fading": fad_kwargs, "top": top_kwargs}[section][
            field
        ] = value
    return ExperimentConfig(
        geometry=GeometrySpec(**geo_kwargs),
        fading=FadingParams(**fad_kwargs),
        **top_kwargs,
    )
