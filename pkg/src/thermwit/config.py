"""Run configuration: CLI defaults, config-file parsing, serialization.

The file format is flat ``key = value`` pairs under one section per
subsystem (INI syntax), so configs stay trivially parseable from any
language. Command-line flags override file values, which override defaults.
"""
from __future__ import annotations

import configparser
import io
from dataclasses import dataclass, fields, replace
from pathlib import Path

import numpy as np

from .errors import ThermwitError


@dataclass(frozen=True)
class GridSpec:
    """Temperature grid: lo:hi:count:spacing with lin or log spacing."""

    lo: float
    hi: float
    count: int
    spacing: str = "lin"

    def __post_init__(self) -> None:
        if not self.lo > 0:
            raise ThermwitError(f"grid lo must be positive, got {self.lo}")
        if not self.lo < self.hi:
            raise ThermwitError(f"grid needs lo < hi, got {self.lo}:{self.hi}")
        if self.count < 2:
            raise ThermwitError(f"grid needs at least 2 points, got {self.count}")
        if self.spacing not in ("lin", "log"):
            raise ThermwitError(f"grid spacing must be lin or log, got {self.spacing!r}")

    @classmethod
    def parse(cls, text: str) -> "GridSpec":
        parts = text.split(":")
        if len(parts) != 4:
            raise ThermwitError(f"grid spec must be lo:hi:count:spacing, got {text!r}")
        try:
            return cls(
                lo=float(parts[0]),
                hi=float(parts[1]),
                count=int(parts[2]),
                spacing=parts[3],
            )
        except ValueError as exc:
            raise ThermwitError(f"bad grid spec {text!r}: {exc}") from exc

    def spec_string(self) -> str:
        return f"{self.lo!r}:{self.hi!r}:{self.count}:{self.spacing}"

    def values(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)


DEFAULT_GRID = GridSpec(lo=0.1, hi=10.0, count=181, spacing="lin")

_SYSTEMS = ("dimer", "toy", "dicke", "graph")


@dataclass(frozen=True)
class RunConfig:
    """Full parameter set for one CLI invocation."""

    system: str = "dimer"
    seed: int = 0
    k_b: float = 1.0
    grid: GridSpec = DEFAULT_GRID
    out: str | None = None
    oracles: bool = False
    matrix_check: bool = False
    dimer_b: float = 0.0
    dimer_j: float = 1.0
    toy_e0: float = 0.0
    toy_delta: float = 1.0
    toy_alpha: float = 0.0
    toy_d: int = 4
    toy_e_r: float | None = 1.0
    toy_n: int | None = None
    dicke_n: int = 4
    dicke_k: int | None = None
    graph_edges: str | None = None
    graph_b: float = 1.0
    graph_e_r_per_site: float = 0.5

    def __post_init__(self) -> None:
        if self.system not in _SYSTEMS:
            raise ThermwitError(f"unknown system {self.system!r}; pick one of {_SYSTEMS}")


def _put(section: dict[str, str], key: str, value) -> None:
    if value is not None:
        section[key] = str(value)


def serialize_config(cfg: RunConfig) -> str:
    """Render a config as sectioned key = value text. Inverse of load_config."""
    parser = configparser.ConfigParser()
    parser["run"] = {}
    _put(parser["run"], "system", cfg.system)
    _put(parser["run"], "seed", cfg.seed)
    _put(parser["run"], "kB", repr(cfg.k_b))
    parser["grid"] = {
        "lo": repr(cfg.grid.lo),
        "hi": repr(cfg.grid.hi),
        "count": str(cfg.grid.count),
        "spacing": cfg.grid.spacing,
    }
    parser["dimer"] = {"B": repr(cfg.dimer_b), "J": repr(cfg.dimer_j)}
    parser["toy"] = {
        "E0": repr(cfg.toy_e0),
        "delta": repr(cfg.toy_delta),
        "alpha": repr(cfg.toy_alpha),
        "D": str(cfg.toy_d),
    }
    _put(parser["toy"], "eR", None if cfg.toy_e_r is None else repr(cfg.toy_e_r))
    _put(parser["toy"], "n", cfg.toy_n)
    parser["dicke"] = {"n": str(cfg.dicke_n)}
    _put(parser["dicke"], "k", cfg.dicke_k)
    parser["graph"] = {
        "B": repr(cfg.graph_b),
        "eR": repr(cfg.graph_e_r_per_site),
    }
    _put(parser["graph"], "edges", cfg.graph_edges)
    parser["output"] = {
        "oracles": str(cfg.oracles).lower(),
        "matrix_check": str(cfg.matrix_check).lower(),
    }
    _put(parser["output"], "path", cfg.out)
    buf = io.StringIO()
    parser.write(buf)
    return buf.getvalue()


def parse_config_text(text: str) -> RunConfig:
    parser = configparser.ConfigParser()
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ThermwitError(f"bad config: {exc}") from exc

    def get(section: str, key: str, conv, default):
        if parser.has_option(section, key):
            raw = parser.get(section, key)
            try:
                return conv(raw)
            except ValueError as exc:
                raise ThermwitError(f"bad value for [{section}] {key}: {raw!r}") from exc
        return default

    def get_bool(section: str, key: str, default: bool) -> bool:
        if parser.has_option(section, key):
            try:
                return parser.getboolean(section, key)
            except ValueError as exc:
                raise ThermwitError(f"bad boolean for [{section}] {key}") from exc
        return default

    base = RunConfig()
    grid = GridSpec(
        lo=get("grid", "lo", float, base.grid.lo),
        hi=get("grid", "hi", float, base.grid.hi),
        count=get("grid", "count", int, base.grid.count),
        spacing=get("grid", "spacing", str, base.grid.spacing),
    )
    return RunConfig(
        system=get("run", "system", str, base.system),
        seed=get("run", "seed", int, base.seed),
        k_b=get("run", "kB", float, base.k_b),
        grid=grid,
        out=get("output", "path", str, base.out),
        oracles=get_bool("output", "oracles", base.oracles),
        matrix_check=get_bool("output", "matrix_check", base.matrix_check),
        dimer_b=get("dimer", "B", float, base.dimer_b),
        dimer_j=get("dimer", "J", float, base.dimer_j),
        toy_e0=get("toy", "E0", float, base.toy_e0),
        toy_delta=get("toy", "delta", float, base.toy_delta),
        toy_alpha=get("toy", "alpha", float, base.toy_alpha),
        toy_d=get("toy", "D", int, base.toy_d),
        toy_e_r=get("toy", "eR", float, base.toy_e_r),
        toy_n=get("toy", "n", int, base.toy_n),
        dicke_n=get("dicke", "n", int, base.dicke_n),
        dicke_k=get("dicke", "k", int, base.dicke_k),
        graph_edges=get("graph", "edges", str, base.graph_edges),
        graph_b=get("graph", "B", float, base.graph_b),
        graph_e_r_per_site=get("graph", "eR", float, base.graph_e_r_per_site),
    )


def load_config(path: str | Path) -> RunConfig:
    p = Path(path)
    if not p.is_file():
        raise ThermwitError(f"config file not found: {p}")
    return parse_config_text(p.read_text())


def apply_overrides(cfg: RunConfig, **overrides) -> RunConfig:
    """Replace fields whose override value is not None."""
    updates = {}
    valid = {f.name for f in fields(RunConfig)}
    for key, value in overrides.items():
        if key not in valid:
            raise ThermwitError(f"unknown config field {key!r}")
        if value is not None:
            updates[key] = value
    return replace(cfg, **updates) if updates else cfg
