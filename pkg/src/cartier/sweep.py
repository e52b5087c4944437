"""Parameter sweeps over (p, s, m) grids."""

from __future__ import annotations

import json
import os
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Iterator

from .curve import CurveParams, validate_params
from .engine import verify
from .errors import ParameterError
from .report import SkipRecord, csv_header, emit_report

DEFAULT_GENUS_CAP = 2000
WORKERS_ENV = "CARTIER_WORKERS"

_P_POWER = re.compile(r"^p_power[:(](\d+)\)?$")


@dataclass
class SweepSpec:
    primes: list[int]
    s_values: list[int]
    m_modes: list[str]
    strict_hypotheses: bool = True
    output_path: str | None = None
    format: str = "json"
    genus_cap: int = DEFAULT_GENUS_CAP
    points: bool = True
    workers: int | None = None
    rejected: list[str] = field(default_factory=list, repr=False)

    @classmethod
    def from_dict(cls, d: dict) -> SweepSpec:
        known = {"primes", "s_values", "m_modes", "strict_hypotheses", "output_path",
                 "format", "genus_cap", "points", "workers"}
        extra = set(d) - known
        if extra:
            raise ParameterError(f"unknown sweep spec keys: {sorted(extra)}")
        spec = cls(**d)
        if spec.format not in ("json", "csv"):
            raise ParameterError(f"format must be json or csv, got {spec.format!r}")
        for mode in spec.m_modes:
            m_from_mode(5, mode)
        return spec

    @classmethod
    def load(cls, path: str | Path) -> SweepSpec:
        try:
            return cls.from_dict(json.loads(Path(path).read_text()))
        except (OSError, json.JSONDecodeError, TypeError) as exc:
            raise ParameterError(f"cannot read sweep spec {path}: {exc}") from exc


def m_from_mode(p: int, mode: str) -> int:
    if mode == "two":
        return 2
    if mode == "three":
        return 3
    match = _P_POWER.match(mode)
    if match:
        return p ** int(match.group(1))
    raise ParameterError(f"unknown m mode {mode!r} (use two, three or p_power:b)")


def expand(spec: SweepSpec) -> list[CurveParams]:
    """Grid instances in (p, s, m_mode) order.

    Structurally invalid triples are dropped (and noted in ``spec.rejected``);
    hypothesis failures are dropped only in strict mode.
    """
    seen = set()
    out = []
    for p in spec.primes:
        for s in spec.s_values:
            for mode in spec.m_modes:
                try:
                    m = m_from_mode(p, mode)
                    params = validate_params(p, s, m, strict=spec.strict_hypotheses)
                except ParameterError as exc:
                    spec.rejected.append(f"p={p} s={s} m_mode={mode}: {exc}")
                    continue
                if params.triple not in seen:
                    seen.add(params.triple)
                    out.append(params)
    return out


def run_instance(params: CurveParams, genus_cap: int, points: bool):
    if params.g is None:
        return SkipRecord(*params.triple, "gcd(n, m) > 1: no genus formula")
    if params.g > genus_cap:
        return SkipRecord(*params.triple, f"genus {params.g} exceeds cap {genus_cap}")
    return verify(params, points=points)


def _worker_count(spec: SweepSpec) -> int:
    env = os.environ.get(WORKERS_ENV)
    if env:
        return max(1, int(env))
    return max(1, spec.workers or 1)


def run_sweep(spec: SweepSpec) -> Iterator:
    """Yield one report (or skip record) per grid instance, in grid order."""
    instances = expand(spec)
    workers = _worker_count(spec)
    args = [(params, spec.genus_cap, spec.points) for params in instances]
    if workers == 1 or len(instances) < 2:
        for a in args:
            yield run_instance(*a)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, so output order is the grid order
        yield from pool.map(run_instance, *zip(*args))


def write_sweep(spec: SweepSpec, write: Callable[[bytes], object], header: bool = True) -> int:
    """Send every record through the single ``write`` callable; returns the record count."""
    count = 0
    if spec.format == "csv" and header:
        write(csv_header())
    for rec in run_sweep(spec):
        write(emit_report(rec, spec.format, header=False))
        count += 1
    return count
