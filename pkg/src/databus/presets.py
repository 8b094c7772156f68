"""Benchmark circuit profiles and their published reference numbers.

The reference values (distances, qubit counts, runtimes) are the published
comparison points for five example computations plus one large grid used in
a figure caption; they let the estimator's output be checked row by row.
The chemistry rows carry a known residual: the published with-bus counts
exceed 2*d**2*Q + 2*Q*(2d+1) by exactly 2*(d+1)**2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .tradeoff import ComputationProfile


@dataclass
class Preset:
    name: str
    profile: ComputationProfile
    ref_d_wo: int
    ref_d_with: int
    ref_qc_wo: int
    ref_qc_with: int
    ref_improvement: float
    ref_hours_wo: float | None = None

    def to_dict(self) -> dict:
        d = {
            "name": self.name,
            "q": self.profile.q,
            "a": self.profile.a,
            "volume": self.profile.volume,
            "p_phys": self.profile.p_phys,
            "epsilon": self.profile.epsilon,
            "ref": {
                "d_wo": self.ref_d_wo,
                "d_with": self.ref_d_with,
                "qc_wo": self.ref_qc_wo,
                "qc_with": self.ref_qc_with,
                "improvement": self.ref_improvement,
                "hours_wo": self.ref_hours_wo,
            },
        }
        return d


def table_presets() -> list[Preset]:
    """The five benchmark circuits of the published comparison table."""
    return [
        Preset("Q100", ComputationProfile(100, 50, 1.31e11), 29, 31, 252300, 204800, 0.81, 7.53),
        Preset("Chem 54", ComputationProfile(123, 62, 4.59e9), 23, 25, 195730, 167648, 0.86, 0.21),
        Preset("Chem 250", ComputationProfile(341, 171, 7.56e11), 29, 31, 861184, 700416, 0.81, 12.7),
        Preset("Shor 1024", ComputationProfile(3082, 1541, 3.27e14), 31, 35, 8885406, 7988544, 0.90, None),
        Preset("Shor 4096", ComputationProfile(12298, 6149, 8.37e16), 35, 39, 45195150, 39353600, 0.87, 49100.0),
    ]


def grid_preset() -> Preset:
    """4096-patch grid with distances 23/25: the 15%-reduction example."""
    return Preset(
        "Grid 4096", ComputationProfile(4096, 2048, 5e10), 23, 25, 6500352, 5537792, 0.85, None
    )


def all_presets() -> list[Preset]:
    return table_presets() + [grid_preset()]


def find_preset(name: str) -> Preset:
    for p in all_presets():
        if p.name.lower().replace(" ", "") == name.lower().replace(" ", ""):
            return p
    raise KeyError(f"unknown preset {name!r}")
