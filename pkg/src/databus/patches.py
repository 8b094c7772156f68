"""Planar-code patch descriptions: stabilizer generators and logical chains.

Patches are described over local qubit indices 0..n-1; protocol code embeds
them at a global offset.  The d=2 five-qubit patch used throughout the tests
is the smallest instance of the generic builder.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .pauli import PauliString


@dataclass
class PatchSpec:
    """One logical qubit encoded in a planar patch.

    ``stabilizers`` are n-1 independent generators over the local data
    qubits; ``logical_x``/``logical_z`` are anticommuting chain operators
    commuting with every stabilizer.
    """

    d: int
    rotated: bool
    data_qubits: list[int]
    stabilizers: list[PauliString] = field(repr=False)
    logical_x: PauliString = field(repr=False)
    logical_z: PauliString = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.data_qubits)

    @property
    def x_chain(self) -> list[int]:
        return [q for q in range(self.n) if self.logical_x.x[q] or self.logical_x.z[q]]

    @property
    def z_chain(self) -> list[int]:
        return [q for q in range(self.n) if self.logical_z.x[q] or self.logical_z.z[q]]

    @property
    def logical_y(self) -> PauliString:
        """i * logical_x * logical_z (Hermitian by the anticommutation invariant)."""
        y = self.logical_x * self.logical_z
        y.phase = (y.phase + 1) % 4
        return y

    def validate(self) -> None:
        if len(self.stabilizers) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} stabilizer generators, got {len(self.stabilizers)}")
        for i, s in enumerate(self.stabilizers):
            if s.n != self.n or s.phase != 0:
                raise ValueError(f"stabilizer {i} malformed")
            for j in range(i + 1, len(self.stabilizers)):
                if not s.commutes(self.stabilizers[j]):
                    raise ValueError(f"stabilizers {i} and {j} anticommute")
            for name, op in (("X", self.logical_x), ("Z", self.logical_z)):
                if not op.commutes(s):
                    raise ValueError(f"logical {name} anticommutes with stabilizer {i}")
        if self.logical_x.commutes(self.logical_z):
            raise ValueError("logical X and Z chains must anticommute")
        if not self.logical_y.is_hermitian():
            raise ValueError("logical Y is not Hermitian")

    def embedded(self, n_total: int, offset: int) -> "PatchSpec":
        """The same patch with all operators placed at ``offset`` in a larger register."""

        def emb(p: PauliString) -> PauliString:
            out = PauliString.identity(n_total)
            out.x[offset:offset + self.n] = p.x
            out.z[offset:offset + self.n] = p.z
            out.phase = p.phase
            return out

        return replace(
            self,
            data_qubits=[q + offset for q in self.data_qubits],
            stabilizers=[emb(s) for s in self.stabilizers],
            logical_x=emb(self.logical_x),
            logical_z=emb(self.logical_z),
        )


def planar_patch(d: int, dual: bool = False) -> PatchSpec:
    """Unrotated planar patch of distance d (d**2 + (d-1)**2 data qubits).

    Data qubits live on the even sites of a (2d-1) x (2d-1) grid; plaquette
    and vertex checks sit on the odd sites.  ``dual=True`` swaps the X/Z
    roles (and the logical chains with them), which is how a patch rotated
    by 90 degrees presents its boundaries to a bus.
    """
    if d < 2:
        raise ValueError("distance must be at least 2")
    size = 2 * d - 1
    index = {}
    for r in range(size):
        for c in range(size):
            if (r + c) % 2 == 0:
                index[(r, c)] = len(index)
    n = len(index)

    def neighbors(r: int, c: int) -> list[int]:
        out = []
        for rr, cc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if (rr, cc) in index:
                out.append(index[(rr, cc)])
        return out

    x_checks = []
    z_checks = []
    for r in range(size):
        for c in range(size):
            if (r + c) % 2 == 1:
                ops = neighbors(r, c)
                if r % 2 == 1:  # between rows: X-type vertex check
                    x_checks.append(PauliString.from_ops(n, {q: "X" for q in ops}))
                else:  # between columns: Z-type plaquette check
                    z_checks.append(PauliString.from_ops(n, {q: "Z" for q in ops}))
    x_row = [index[(size - 1, c)] for c in range(0, size, 2)]
    z_col = [index[(r, size - 1)] for r in range(0, size, 2)]
    logical_x = PauliString.from_ops(n, {q: "X" for q in x_row})
    logical_z = PauliString.from_ops(n, {q: "Z" for q in z_col})
    if dual:
        x_checks, z_checks = ([s.copy() for s in z_checks], [s.copy() for s in x_checks])
        for s in x_checks + z_checks:
            s.x, s.z = s.z, s.x
        logical_x, logical_z = (
            PauliString(logical_z.z.copy(), logical_z.x.copy()),
            PauliString(logical_x.z.copy(), logical_x.x.copy()),
        )
    patch = PatchSpec(
        d=d,
        rotated=dual,
        data_qubits=list(range(n)),
        stabilizers=x_checks + z_checks,
        logical_x=logical_x,
        logical_z=logical_z,
    )
    patch.validate()
    return patch


def with_logical_x(patch: PatchSpec, qubits: list[int]) -> PatchSpec:
    """Replace the logical X chain by an equivalent representative on ``qubits``."""
    out = replace(patch, logical_x=PauliString.from_ops(patch.n, {q: "X" for q in qubits}))
    out.validate()
    return out
