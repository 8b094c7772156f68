"""Distance selection and qubit/time trade-off for bus-based routing.

The failure model is the standard scaling P_L = A0 * (p/p_th)**((d+1)/2)
with defaults A0=0.1, p_th=0.01, and a computation of space-time volume V
succeeds with probability (1 - P_L)**V.  Replacing ancilla routing patches
by a bus multiplies the volume by the bus distance d_b (one bus use costs
d_b**2 cycle-volume per patch instead of a lattice-surgery step), so the
bus distance is found iteratively: bump d_b until the scaled volume fits
and the integer safety margin beats the original computation's.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field, asdict

import numpy as np

from .layout import LayoutModel, qc_with_bus, qc_without_bus

D_MAX = 201
SAFETY_CAP = 10**18


@dataclass
class ErrorModel:
    a0: float = 0.1
    p_th: float = 0.01

    def __post_init__(self) -> None:
        if self.a0 <= 0:
            raise ValueError("a0 must be positive")
        if not 0 < self.p_th <= 1:
            raise ValueError("p_th must lie in (0, 1]")


@dataclass
class ComputationProfile:
    """One circuit to estimate: patch counts, volume, rates, budget."""

    q: int
    a: int
    volume: float
    p_phys: float = 1e-3
    epsilon: float = 1e-2
    t_cycle: float = 1e-6

    def __post_init__(self) -> None:
        if self.q < 1 or self.a < 0:
            raise ValueError("need at least one data patch and a non-negative ancilla count")
        if self.volume < 1:
            raise ValueError("volume must be at least 1")
        if not 0 < self.epsilon < 1:
            raise ValueError("epsilon must lie in (0, 1)")
        if self.p_phys <= 0:
            raise ValueError("p_phys must be positive")

    @property
    def routing_factor(self) -> float:
        return self.a / self.q


CSV_COLUMNS = [
    "scale", "d_wo", "d_with", "qc_wo", "qc_with",
    "improvement", "hours_wo", "hours_with", "safety_wo", "safety_with",
]


@dataclass
class TradeoffReport:
    scale: float
    d_wo: int
    d_with: int
    qc_wo: int
    qc_with: int
    improvement: float
    hours_wo: float
    hours_with: float
    safety_wo: int
    safety_with: int
    v_a: float
    v_b: float

    def to_dict(self) -> dict:
        return asdict(self)


def logical_error_rate(d: int, p: float, model: ErrorModel | None = None) -> float:
    """Per-logical-qubit, per-unit-time failure probability at distance d."""
    model = model or ErrorModel()
    if d < 3 or d % 2 == 0:
        raise ValueError("distance must be an odd integer >= 3")
    return model.a0 * (p / model.p_th) ** ((d + 1) / 2)


def total_failure(volume: float, p_l: float) -> float:
    """1 - (1 - P_L)**V, evaluated stably for tiny P_L and huge V."""
    if p_l == 0:
        return 0.0
    if p_l >= 1:
        return 1.0
    return -math.expm1(volume * math.log1p(-p_l))


def required_distance(
    volume: float, p: float, epsilon: float, model: ErrorModel | None = None
) -> int:
    """Smallest odd distance keeping the whole computation within budget."""
    model = model or ErrorModel()
    if p >= model.p_th:
        raise ValueError("p_phys must be below threshold for the distance to converge")
    for d in range(3, D_MAX + 1, 2):
        if total_failure(volume, logical_error_rate(d, p, model)) <= epsilon:
            return d
    raise ValueError(f"failure budget unreachable with distance capped at {D_MAX}")


def safety_factor(
    volume: float, d: int, p: float, epsilon: float, model: ErrorModel | None = None
) -> int:
    """How many times the achieved failure probability fits into the budget."""
    tf = total_failure(volume, logical_error_rate(d, p, model))
    if tf <= 0:
        return SAFETY_CAP
    return min(SAFETY_CAP, math.floor(epsilon / tf))


def solve_bus_distance(
    profile: ComputationProfile,
    d_a: int,
    scale: float = 0.5,
    model: ErrorModel | None = None,
) -> tuple[int, int]:
    """Bus distance d_b for a computation that needed d_a without the bus.

    Iterates: the bus-augmented volume is V_b = V_a * d_b; a scaled volume
    V_s = scale * V_a * d_b must not demand a distance beyond d_b, and the
    safety factor at (V_b, d_b) must exceed the original at (V_a, d_a).
    Either failure bumps d_b to the next odd value.
    """
    model = model or ErrorModel()
    base_safety = safety_factor(profile.volume, d_a, profile.p_phys, profile.epsilon, model)
    d_b = d_a
    iterations = 0
    while d_b <= D_MAX:
        iterations += 1
        v_s = scale * profile.volume * d_b
        d_s = required_distance(v_s, profile.p_phys, profile.epsilon, model)
        if d_s <= d_b:
            v_b = profile.volume * d_b
            margin = safety_factor(v_b, d_b, profile.p_phys, profile.epsilon, model)
            # both margins saturating the cap counts as "no worse"
            if margin > base_safety or margin == base_safety == SAFETY_CAP:
                return d_b, iterations
        d_b += 2
    raise ValueError(f"no bus distance below the {D_MAX} cap satisfies the budget")


def estimate(
    profile: ComputationProfile,
    force_d_wo: int | None = None,
    force_d_with: int | None = None,
    scale: float = 0.5,
    model: ErrorModel | None = None,
    layout: LayoutModel | None = None,
    volume_scale: float = 1.0,
) -> TradeoffReport:
    """Full with/without-bus comparison for one profile."""
    model = model or ErrorModel()
    volume = profile.volume * volume_scale
    scaled = ComputationProfile(
        profile.q, profile.a, volume, profile.p_phys, profile.epsilon, profile.t_cycle
    )
    d_wo = force_d_wo or required_distance(volume, profile.p_phys, profile.epsilon, model)
    d_with = force_d_with or solve_bus_distance(scaled, d_wo, scale, model)[0]
    qc_wo = qc_without_bus(profile.q, profile.a, d_wo, layout)
    qc_w = qc_with_bus(profile.q, d_with, layout)
    hours_wo = volume / (profile.q + profile.a) * d_wo * profile.t_cycle / 3600.0
    v_b = volume * d_with
    return TradeoffReport(
        scale=volume_scale,
        d_wo=d_wo,
        d_with=d_with,
        qc_wo=qc_wo,
        qc_with=qc_w,
        improvement=qc_w / qc_wo,
        hours_wo=hours_wo,
        hours_with=hours_wo * d_with,
        safety_wo=safety_factor(volume, d_wo, profile.p_phys, profile.epsilon, model),
        safety_with=safety_factor(v_b, d_with, profile.p_phys, profile.epsilon, model),
        v_a=volume,
        v_b=v_b,
    )


@dataclass
class BinBoundary:
    """Volume scale at which the required distance jumps from d to d + 2."""

    d: int
    scale: float


@dataclass
class SweepResult:
    points: list[TradeoffReport]
    boundaries: list[BinBoundary]

    def to_dict(self) -> dict:
        return {
            "points": [p.to_dict() for p in self.points],
            "boundaries": [asdict(b) for b in self.boundaries],
        }


def max_volume_at(d: int, p: float, epsilon: float, model: ErrorModel | None = None) -> float:
    """Largest volume still within budget at distance d (bin right edge)."""
    p_l = logical_error_rate(d, p, model)
    return math.log1p(-epsilon) / math.log1p(-p_l)


def sweep(
    profile: ComputationProfile,
    scale_min: float,
    scale_max: float,
    steps: int,
    scale: float = 0.5,
    model: ErrorModel | None = None,
    layout: LayoutModel | None = None,
) -> SweepResult:
    """Estimates over geometrically spaced volume multipliers, plus bin edges."""
    if steps < 1:
        raise ValueError("steps must be at least 1")
    if not 0 < scale_min <= scale_max:
        raise ValueError("need 0 < scale_min <= scale_max")
    model = model or ErrorModel()
    if steps == 1:
        scales = [scale_min]
    else:
        scales = list(np.geomspace(scale_min, scale_max, steps))
    points = [
        estimate(profile, scale=scale, model=model, layout=layout, volume_scale=float(s))
        for s in scales
    ]
    boundaries = []
    for d in range(points[0].d_wo, points[-1].d_wo + 2, 2):
        edge = max_volume_at(d, profile.p_phys, profile.epsilon, model) / profile.volume
        if scale_min <= edge <= scale_max:
            boundaries.append(BinBoundary(d, edge))
    return SweepResult(points, boundaries)


@dataclass
class CounterExampleRow:
    d_a: int
    d_b: int
    qc_wo: int
    qc_with: int
    improved: bool


def counterexample(
    d_min: int = 15,
    d_max: int = 45,
    q: int = 7,
    a: int = 4,
    volume: float = 253,
    scale: float = 0.5,
    model: ErrorModel | None = None,
) -> list[CounterExampleRow]:
    """Bus-vs-baseline qubit counts for every forced odd baseline distance.

    Whether the bus loses for the *whole* range depends on the chosen error
    model; callers should treat per-row flags as model-dependent output, not
    a universal claim.
    """
    profile = ComputationProfile(q, a, volume)
    rows = []
    for d_a in range(d_min if d_min % 2 else d_min + 1, d_max + 1, 2):
        d_b, _ = solve_bus_distance(profile, d_a, scale, model)
        wo = qc_without_bus(q, a, d_a)
        with_ = qc_with_bus(q, d_b)
        rows.append(CounterExampleRow(d_a, d_b, wo, with_, with_ < wo))
    return rows


# ---------------------------------------------------------------------------
# Serialization

def reports_to_csv(reports: list[TradeoffReport]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in reports:
        d = r.to_dict()
        writer.writerow([d[c] for c in CSV_COLUMNS])
    return out.getvalue()


def reports_to_json(reports: list[TradeoffReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2)
