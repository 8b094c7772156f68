"""Signed n-qubit Pauli operators with exact phase tracking.

Operators are stored in binary symplectic form: per-qubit X/Z bits plus a
global phase exponent e with the operator equal to i**e times the tensor
product of literal I/X/Y/Z factors.  All products and Clifford conjugations
track the phase exactly, which is what makes signed stabilizer-group
comparisons possible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_CHARS = "IXZY"  # index = x + 2*z

# i-exponent contributed by multiplying single-qubit Paulis a*b,
# indexed [a][b] with a, b in {I=0, X=1, Z=2, Y=3}.
# X*Z = -iY, Z*X = iY, X*Y = iZ, Y*X = -iZ, Z*Y = -iX, Y*Z = iX.
_MUL_PHASE = np.array(
    [
        [0, 0, 0, 0],
        [0, 0, 3, 1],
        [0, 1, 0, 3],
        [0, 3, 1, 0],
    ],
    dtype=np.int64,
)

PHASE_LABELS = {0: "+", 1: "+i", 2: "-", 3: "-i"}


@dataclass
class PauliString:
    """A signed Pauli operator on ``n`` qubits."""

    x: np.ndarray  # uint8, shape (n,)
    z: np.ndarray  # uint8, shape (n,)
    phase: int = 0  # exponent of i, mod 4

    def __post_init__(self) -> None:
        self.x = np.asarray(self.x, dtype=np.uint8)
        self.z = np.asarray(self.z, dtype=np.uint8)
        if self.x.shape != self.z.shape or self.x.ndim != 1:
            raise ValueError("x and z bit vectors must be 1-D and equal length")
        self.phase = int(self.phase) % 4

    # -- construction ------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> "PauliString":
        return cls(np.zeros(n, dtype=np.uint8), np.zeros(n, dtype=np.uint8), 0)

    @classmethod
    def single(cls, n: int, qubit: int, kind: str, phase: int = 0) -> "PauliString":
        """A single-qubit X, Y or Z embedded in an n-qubit identity."""
        p = cls.identity(n)
        p.phase = phase % 4
        if kind == "X":
            p.x[qubit] = 1
        elif kind == "Z":
            p.z[qubit] = 1
        elif kind == "Y":
            p.x[qubit] = 1
            p.z[qubit] = 1
        else:
            raise ValueError(f"unknown Pauli kind {kind!r}")
        return p

    @classmethod
    def from_ops(cls, n: int, ops: dict[int, str], phase: int = 0) -> "PauliString":
        """Build from a {qubit: 'X'|'Y'|'Z'} mapping (0-based qubits)."""
        p = cls.identity(n)
        p.phase = phase % 4
        for q, kind in ops.items():
            if not 0 <= q < n:
                raise ValueError(f"qubit {q} out of range for n={n}")
            if kind in ("X", "Y"):
                p.x[q] = 1
            if kind in ("Z", "Y"):
                p.z[q] = 1
            if kind not in ("X", "Y", "Z"):
                raise ValueError(f"unknown Pauli kind {kind!r}")
        return p

    @classmethod
    def from_label(cls, label: str) -> "PauliString":
        """Parse e.g. ``-XZIIY`` or ``+iZZ``. Bare strings mean phase +1."""
        s = label.strip()
        phase = 0
        if s.startswith(("+", "-")):
            sign = s[0]
            s = s[1:]
            if s.startswith(("i", "j")):
                phase = 1
                s = s[1:]
            if sign == "-":
                phase = (phase + 2) % 4
        body = s
        x = np.zeros(len(body), dtype=np.uint8)
        z = np.zeros(len(body), dtype=np.uint8)
        for j, c in enumerate(body):
            if c == "X":
                x[j] = 1
            elif c == "Z":
                z[j] = 1
            elif c == "Y":
                x[j] = 1
                z[j] = 1
            elif c != "I":
                raise ValueError(f"invalid Pauli character {c!r} in {label!r}")
        return cls(x, z, phase)

    # -- views -------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.x.shape[0]

    @property
    def codes(self) -> np.ndarray:
        """Per-qubit codes in {I=0, X=1, Z=2, Y=3}."""
        return (self.x + 2 * self.z).astype(np.int64)

    def label(self) -> str:
        body = "".join(_CHARS[c] for c in self.codes)
        return PHASE_LABELS[self.phase] + body

    def __str__(self) -> str:
        return self.label()

    def copy(self) -> "PauliString":
        return PauliString(self.x.copy(), self.z.copy(), self.phase)

    def weight(self) -> int:
        return int(np.count_nonzero(self.x | self.z))

    def is_identity(self) -> bool:
        return self.weight() == 0

    def is_hermitian(self) -> bool:
        return self.phase % 2 == 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PauliString):
            return NotImplemented
        return (
            self.phase == other.phase
            and np.array_equal(self.x, other.x)
            and np.array_equal(self.z, other.z)
        )

    def __hash__(self) -> int:
        return hash((self.phase, self.x.tobytes(), self.z.tobytes()))

    # -- algebra -----------------------------------------------------------

    def __mul__(self, other: "PauliString") -> "PauliString":
        if self.n != other.n:
            raise ValueError("cannot multiply Pauli strings of different length")
        phase = self.phase + other.phase + int(_MUL_PHASE[self.codes, other.codes].sum())
        return PauliString(self.x ^ other.x, self.z ^ other.z, phase % 4)

    def commutes(self, other: "PauliString") -> bool:
        if self.n != other.n:
            raise ValueError("cannot compare Pauli strings of different length")
        anti = int((self.x & other.z).sum() + (self.z & other.x).sum())
        return anti % 2 == 0

    # -- Clifford conjugation ---------------------------------------------

    def conjugate_cnot(self, control: int, target: int) -> None:
        """In place P -> CNOT P CNOT with exact sign (e.g. Y(c)Y(t) -> -X(c)Z(t))."""
        xc, zc = int(self.x[control]), int(self.z[control])
        xt, zt = int(self.x[target]), int(self.z[target])
        if xc & zt & (xt ^ zc ^ 1):
            self.phase = (self.phase + 2) % 4
        self.x[target] ^= xc
        self.z[control] ^= zt

    def conjugate_h(self, qubit: int) -> None:
        """In place P -> H P H: swaps X and Z, Y -> -Y."""
        if self.x[qubit] & self.z[qubit]:
            self.phase = (self.phase + 2) % 4
        self.x[qubit], self.z[qubit] = self.z[qubit], self.x[qubit]


def parse_generators(text: str) -> list[PauliString]:
    """Parse one signed generator per non-empty line."""
    gens = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            gens.append(PauliString.from_label(line))
    if gens and len({g.n for g in gens}) != 1:
        raise ValueError("generators have inconsistent qubit counts")
    return gens


def format_generators(gens: list[PauliString]) -> str:
    return "\n".join(g.label() for g in gens)
