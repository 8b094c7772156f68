"""Physical-qubit accounting for patch grids and bus corridors.

Two patch-size conventions coexist: ``standard`` uses 2*d**2 physical
qubits per logical patch and is the default; ``worstcase`` uses
4*d**2 and yields the conservative worst-case totals.  Both are exposed
because published resource counts mix them.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class LayoutModel:
    """Patch tile size and bus size as functions of the code distance."""

    variant: str = "standard"

    def __post_init__(self) -> None:
        if self.variant not in ("standard", "worstcase"):
            raise ValueError(f"unknown layout variant {self.variant!r}")

    def patch_tile(self, d: int) -> int:
        per = 2 if self.variant == "standard" else 4
        return per * d * d

    def bus_per_data_patch(self, q: int, d: int) -> int:
        return 2 * q * (2 * d + 1)


def qc_without_bus(q: int, a: int, d: int, model: LayoutModel | None = None) -> int:
    """Physical qubits for q data patches plus a routing ancilla patches."""
    _positive(q=q, a=a, d=d)
    model = model or LayoutModel()
    return model.patch_tile(d) * (q + a)


def qc_with_bus(q: int, d: int, model: LayoutModel | None = None) -> int:
    """Physical qubits when a one-qubit-wide bus replaces the ancilla patches."""
    _positive(q=q, d=d)
    model = model or LayoutModel()
    return model.patch_tile(d) * q + model.bus_per_data_patch(q, d)


def worstcase_total(q: int, d: int) -> tuple[int, int]:
    """(bus qubits B, total T) under the conservative 4*d**2 patch tile."""
    _positive(q=q, d=d)
    model = LayoutModel("worstcase")
    b = model.bus_per_data_patch(q, d)
    return b, model.patch_tile(d) * q + b


_NISQ_WITHOUT_BUS = {2: 77, 3: 151}


def nisq_counts(d: int, with_bus: bool) -> int:
    """Small-demonstrator qubit counts: two patches joined by a bus ring.

    With the bus: two rotated patches of 2*d**2 - 1 qubits each plus a
    7*d-qubit bus ring (a fitted decomposition reproducing the published 28
    and 55 counts).  Without the bus the counts are reference constants for
    a full lattice-surgery layout.
    """
    if d not in (2, 3):
        raise ValueError("demonstrator counts are defined for d in {2, 3} only")
    if with_bus:
        return 2 * (2 * d * d - 1) + 7 * d
    return _NISQ_WITHOUT_BUS[d]


def rotated_bus_path(rows: int, cols: int, d: int) -> list[tuple[int, int]]:
    """Zig-zag bus corridor threading a rows x cols grid of rotated patches.

    Patches occupy d x d blocks separated by one-site corridors; the path
    serpentines down/up every vertical corridor, linked along the horizontal
    corridors, so each patch borders at least two path segments and only
    merge/split corridor sites are used.
    """
    if rows < 1 or cols < 1:
        raise ValueError("grid must have at least one row and one column")
    if d < 2:
        raise ValueError("distance must be at least 2")
    height = rows * (d + 1) + 1
    path: list[tuple[int, int]] = []
    for k in range(cols + 1):
        x = k * (d + 1)
        ys = range(height) if k % 2 == 0 else range(height - 1, -1, -1)
        path.extend((y, x) for y in ys)
        if k < cols:
            y_link = height - 1 if k % 2 == 0 else 0
            path.extend((y_link, x + dx) for dx in range(1, d + 1))
    return path


def _positive(**kwargs: int) -> None:
    for name, value in kwargs.items():
        if value < 1:
            raise ValueError(f"{name} must be positive")
