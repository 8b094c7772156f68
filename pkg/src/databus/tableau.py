"""Stabilizer tableau simulator (CNOT, H, arbitrary Pauli measurement).

The tableau keeps n stabilizer generators plus n destabilizers.  Destabilizer
i anticommutes with stabilizer i and commutes with every other stabilizer;
this pairing is what lets measurement outcomes be resolved in polynomial
time, and also gives a cheap "forced projection" used to prepare eigenstates.
"""

from __future__ import annotations

import numpy as np

from .pauli import PauliString


class StabilizerTableau:
    """An n-qubit stabilizer state with seedable measurement randomness."""

    def __init__(self, n: int, basis=None, rng_seed: int = 0):
        """Initialize qubit i to |0> ('Z0') or |+> ('Xp') per ``basis``.

        ``basis`` may be a sequence of 'Z0'/'Xp' (or shorthand 'Z'/'X'),
        defaulting to all |0>.
        """
        if n < 1:
            raise ValueError("tableau needs at least one qubit")
        self.n = n
        self.rng_seed = rng_seed
        self._rng = np.random.default_rng(rng_seed)
        if basis is None:
            basis = ["Z0"] * n
        basis = list(basis)
        if len(basis) != n:
            raise ValueError(f"basis has {len(basis)} entries for n={n}")
        # Rows 0..n-1 are destabilizers, n..2n-1 stabilizers.
        self.x = np.zeros((2 * n, n), dtype=np.uint8)
        self.z = np.zeros((2 * n, n), dtype=np.uint8)
        self.phase = np.zeros(2 * n, dtype=np.uint8)  # i-exponent, 0 or 2
        for i, b in enumerate(basis):
            if b in ("Z0", "Z"):
                self.z[n + i, i] = 1
                self.x[i, i] = 1
            elif b in ("Xp", "X"):
                self.x[n + i, i] = 1
                self.z[i, i] = 1
            else:
                raise ValueError(f"unknown initial basis {b!r}")

    # -- row helpers -------------------------------------------------------

    def _row(self, i: int) -> PauliString:
        return PauliString(self.x[i].copy(), self.z[i].copy(), int(self.phase[i]))

    def stabilizers(self) -> list[PauliString]:
        return [self._row(self.n + i) for i in range(self.n)]

    def destabilizers(self) -> list[PauliString]:
        return [self._row(i) for i in range(self.n)]

    def _rowmult(self, h: int, i: int) -> None:
        """Row h <- row h * row i with exact phase."""
        r = self._row(h) * self._row(i)
        self.x[h] = r.x
        self.z[h] = r.z
        self.phase[h] = r.phase

    def _anticommutes(self, i: int, p: PauliString) -> bool:
        anti = int((self.x[i] & p.z).sum() + (self.z[i] & p.x).sum())
        return anti % 2 == 1

    # -- gates -------------------------------------------------------------

    def apply_cnot(self, control: int, target: int) -> None:
        self._check_qubit(control)
        self._check_qubit(target)
        if control == target:
            raise ValueError("CNOT control and target must differ")
        xc = self.x[:, control]
        zc = self.z[:, control]
        xt = self.x[:, target]
        zt = self.z[:, target]
        flip = xc & zt & (xt ^ zc ^ 1)
        self.phase = (self.phase + 2 * flip) % 4
        xt ^= xc
        zc ^= zt

    def apply_h(self, qubit: int) -> None:
        self._check_qubit(qubit)
        xq = self.x[:, qubit]
        zq = self.z[:, qubit]
        self.phase = (self.phase + 2 * (xq & zq)) % 4
        self.x[:, qubit], self.z[:, qubit] = zq.copy(), xq.copy()

    def apply_pauli(self, p: PauliString) -> None:
        """Conjugate the state by a Pauli: flips signs of anticommuting rows."""
        if p.n != self.n:
            raise ValueError("Pauli length does not match tableau")
        anti = ((self.x @ p.z.astype(np.int64)) + (self.z @ p.x.astype(np.int64))) % 2
        self.phase = (self.phase + 2 * anti.astype(np.uint8)) % 4

    def apply_x(self, qubit: int) -> None:
        self.apply_pauli(PauliString.single(self.n, qubit, "X"))

    def apply_z(self, qubit: int) -> None:
        self.apply_pauli(PauliString.single(self.n, qubit, "Z"))

    def _check_qubit(self, q: int) -> None:
        if not 0 <= q < self.n:
            raise ValueError(f"qubit index {q} out of range for n={self.n}")

    # -- measurement -------------------------------------------------------

    def measure_pauli(self, obs: PauliString) -> tuple[int, bool]:
        """Measure a Hermitian Pauli observable.

        Returns (outcome, deterministic) with outcome in {+1, -1}.  A random
        outcome collapses the state; a deterministic one leaves it unchanged.
        """
        out, det, _ = self._measure(obs)
        return out, det

    def project(self, obs: PauliString, desired: int = +1) -> None:
        """Measure ``obs`` and force the outcome to ``desired`` by applying
        the paired destabilizer when the random outcome came out wrong."""
        if desired not in (+1, -1):
            raise ValueError("desired eigenvalue must be +1 or -1")
        out, det, p = self._measure(obs)
        if out == desired:
            return
        if det:
            raise ValueError("cannot project onto the opposite deterministic eigenvalue")
        # Destabilizer p anticommutes with stabilizer p only; applying it as
        # a correction flips exactly that outcome sign.
        self.apply_pauli(self._row(p - self.n))

    def _measure(self, obs: PauliString) -> tuple[int, bool, int]:
        if obs.n != self.n:
            raise ValueError("observable length does not match tableau")
        if obs.phase % 2 != 0:
            raise ValueError("observable phase must be +1 or -1, not imaginary")
        n = self.n
        anti_stab = [i for i in range(n, 2 * n) if self._anticommutes(i, obs)]
        if not anti_stab:
            # Deterministic: obs = +/- product of stabilizers flagged by the
            # destabilizers that anticommute with obs.
            prod = PauliString.identity(n)
            for i in range(n):
                if self._anticommutes(i, obs):
                    prod = prod * self._row(n + i)
            if not (np.array_equal(prod.x, obs.x) and np.array_equal(prod.z, obs.z)):
                raise AssertionError("deterministic measurement decomposition failed")
            outcome = +1 if prod.phase == obs.phase else -1
            return outcome, True, -1
        p = anti_stab[0]
        # All other anticommuting rows (stabilizer or destabilizer) absorb row p.
        for i in range(2 * n):
            if i != p and self._anticommutes(i, obs):
                self._rowmult(i, p)
        # Old stabilizer p becomes the destabilizer; obs (with the measured
        # sign) becomes the new stabilizer.
        d = p - n
        self.x[d] = self.x[p]
        self.z[d] = self.z[p]
        self.phase[d] = self.phase[p]
        outcome = 1 if self._rng.integers(2) == 0 else -1
        self.x[p] = obs.x
        self.z[p] = obs.z
        self.phase[p] = (obs.phase + (0 if outcome == 1 else 2)) % 4
        return outcome, False, p

    # -- validation --------------------------------------------------------

    def check_invariants(self) -> None:
        """Raise if the stabilizer/destabilizer structure has been corrupted."""
        n = self.n
        stabs = self.stabilizers()
        destabs = self.destabilizers()
        for i, s in enumerate(stabs):
            if s.phase % 2 != 0:
                raise AssertionError(f"stabilizer {i} has imaginary phase")
            for j in range(i + 1, n):
                if not s.commutes(stabs[j]):
                    raise AssertionError(f"stabilizers {i} and {j} anticommute")
        for i, d in enumerate(destabs):
            for j, s in enumerate(stabs):
                want = i != j
                if d.commutes(s) != want:
                    raise AssertionError(f"destabilizer {i} vs stabilizer {j} pairing broken")


def new_tableau(n: int, basis=None, rng_seed: int = 0) -> StabilizerTableau:
    """Convenience constructor mirroring StabilizerTableau(...)."""
    return StabilizerTableau(n, basis=basis, rng_seed=rng_seed)


def canonical_form(gens: list[PauliString]) -> list[PauliString]:
    """Row-reduced canonical generator set for the signed group <gens>.

    Gaussian elimination over the binary symplectic representation, pivoting
    column-major on the X block first and then the Z block; phases are
    carried through every row multiplication.  The result depends only on
    the generated group, and the map is idempotent.
    """
    if not gens:
        return []
    n = gens[0].n
    rows = [g.copy() for g in gens if not _drop_identity(g)]
    r = 0
    for j in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i].x[j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i].x[j]:
                rows[i] = rows[i] * rows[r]
        r += 1
    for j in range(n):
        piv = next((i for i in range(r, len(rows)) if rows[i].z[j]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i].z[j]:
                rows[i] = rows[i] * rows[r]
        r += 1
    out = []
    for row in rows:
        if row.is_identity():
            if row.phase != 0:
                raise ValueError("generator set multiplies to -I or +/-iI: not a stabilizer group")
        else:
            if row.phase % 2 != 0:
                raise ValueError("group contains an imaginary-phase element")
            out.append(row)
    return out


def _drop_identity(g: PauliString) -> bool:
    if g.is_identity():
        if g.phase != 0:
            raise ValueError("generator set contains -I or +/-iI")
        return True
    return False


def group_equals(a: list[PauliString], b: list[PauliString]) -> bool:
    """True iff the signed groups generated by a and b are identical."""
    if a and b and a[0].n != b[0].n:
        raise ValueError("generator lists act on different qubit counts")
    ca = [g.label() for g in canonical_form(a)]
    cb = [g.label() for g in canonical_form(b)]
    return ca == cb
