"""Repetition-code verification of the bus chain.

The chain's nearest-neighbor checks form a 1-D repetition code.  Each check
is measured for several rounds to suppress readout errors; per-check
majority votes give a defect pattern, which on a line decodes exactly by
flipping whichever of the two consistent flip patterns is lighter
(nearest-boundary matching).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .bus import BusSpec, NoiseModel, chain_check_operators
from .tableau import StabilizerTableau
from .pauli import PauliString


def decode_defects(defects: list[bool] | np.ndarray) -> np.ndarray:
    """Flip pattern (length n = len(defects)+1) explaining the defect string.

    Of the two complementary solutions, the lighter one is returned; ties go
    to the pattern leaving the first qubit unflipped.
    """
    defects = np.asarray(defects, dtype=bool)
    n = defects.size + 1
    a = np.zeros(n, dtype=bool)
    for j in range(n - 1):
        a[j + 1] = a[j] ^ defects[j]
    b = ~a
    return a if a.sum() <= b.sum() else b


def majority(bits: list[int]) -> int:
    """Majority of a list of +1/-1 readings (ties resolve to +1)."""
    return -1 if sum(1 for b in bits if b == -1) * 2 > len(bits) else +1


@dataclass
class VerificationRecord:
    rounds: int
    readings: np.ndarray  # shape (rounds, n_checks), +1/-1
    voted: np.ndarray  # shape (n_checks,), +1/-1
    correction: np.ndarray  # shape (n_data,), bool


def verify_ghz(
    t: StabilizerTableau,
    bus: BusSpec,
    rounds: int,
    noise: NoiseModel | None = None,
) -> VerificationRecord:
    """Measure every chain check ``rounds`` times, vote, and correct the chain.

    With ``noise``, chain flips are injected once before the first round
    (bit flips in the segment basis: X on a Z-basis qubit, Z on an X-basis
    qubit) and every individual readout lies with probability p_phys.
    """
    if rounds < 1:
        raise ValueError("rounds must be at least 1")
    rng = np.random.default_rng(noise.seed) if noise is not None else None
    if noise is not None and noise.p_phys > 0:
        for pos, q in enumerate(bus.data_qubits):
            if rng.random() < noise.p_phys:
                _flip(t, bus, pos)
    checks = chain_check_operators(t.n, bus)
    readings = np.ones((rounds, len(checks)), dtype=np.int8)
    for r in range(rounds):
        for c, check in enumerate(checks):
            out, _ = t.measure_pauli(check)
            if rng is not None and rng.random() < noise.p_phys:
                out = -out
            readings[r, c] = out
    voted = np.array([majority(list(readings[:, c])) for c in range(len(checks))], dtype=np.int8)
    correction = decode_defects(voted == -1)
    for pos in np.flatnonzero(correction):
        _flip(t, bus, int(pos))
    return VerificationRecord(rounds, readings, voted, correction)


def _flip(t: StabilizerTableau, bus: BusSpec, pos: int) -> None:
    kind = "X" if bus.basis_at(pos) == "Z" else "Z"
    t.apply_pauli(PauliString.single(t.n, bus.data_qubits[pos], kind))


def repetition_failure_rate(
    n: int, p: float, rounds: int, trials: int, seed: int = 0
) -> float:
    """Monte-Carlo residual odd-parity rate of the voted-and-decoded chain.

    Classical phenomenological model: each of the n chain qubits flips once
    with probability p, then every syndrome is read ``rounds`` times with
    readout-lie probability p; per-syndrome majority vote, line decoding,
    and the residual is (flips XOR correction) having odd weight, which is
    exactly a corrupted bus parity.
    """
    NoiseModel(p)
    if rounds < 1 or trials < 1:
        raise ValueError("rounds and trials must be at least 1")
    rng = np.random.default_rng(seed)
    flips = rng.random((trials, n)) < p
    syndrome = flips[:, :-1] ^ flips[:, 1:]
    lies = rng.random((trials, rounds, n - 1)) < p
    observed = syndrome[:, None, :] ^ lies
    voted = observed.sum(axis=1) * 2 > rounds
    failures = 0
    for trial in range(trials):
        residual = flips[trial] ^ decode_defects(voted[trial])
        failures += int(residual.sum() % 2)
    return failures / trials
