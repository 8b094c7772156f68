"""GHZ data-bus joint parity checks between planar-code patches.

A bus is a chain of data qubits holding a GHZ state, split into basis
segments: a Z-basis segment (|0..0>+|1..1>) collects logical-X parities and
is read out in the X basis, an X-basis segment (|+..+>+|-..->) collects
logical-Z parities and is read out in the Z basis.  Transversal CNOTs pair
each patch's logical chain with a contiguous sub-range of the bus; X-chain
attachments put the bus on the control side, Z-chain attachments invert the
CNOTs.  A logical-Y readout of a single patch uses both of its chains on a
mixed-basis bus; the bus qubit that the Z-chain pairs with the patch qubit
shared by both chains is read out in the Y basis, and the reported parity is
flipped to account for reordering X and Z on that shared qubit.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .pauli import PauliString
from .patches import PatchSpec
from .tableau import StabilizerTableau


@dataclass
class Segment:
    """Half-open range [start, stop) of bus chain positions in one basis."""

    basis: str  # "Z" or "X"
    start: int
    stop: int

    def __post_init__(self) -> None:
        if self.basis not in ("Z", "X"):
            raise ValueError(f"segment basis must be Z or X, not {self.basis!r}")
        if not 0 <= self.start < self.stop:
            raise ValueError("segment range is empty or negative")

    def __contains__(self, pos: int) -> bool:
        return self.start <= pos < self.stop


@dataclass
class Attachment:
    """Transversal coupling of one patch chain to a bus sub-range."""

    patch_index: int
    chain: str  # "X" or "Z"
    pairing: dict[int, int]  # global patch qubit -> bus chain position

    def __post_init__(self) -> None:
        if self.chain not in ("X", "Z"):
            raise ValueError(f"attachment chain must be X or Z, not {self.chain!r}")

    @property
    def direction(self) -> str:
        return "bus_is_control" if self.chain == "X" else "bus_is_target"


@dataclass
class NoiseModel:
    """I.i.d. parity-corrupting flips on bus data qubits, one per use."""

    p_phys: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 <= self.p_phys < 0.5:
            raise ValueError("p_phys must lie in [0, 0.5)")


@dataclass
class BusSpec:
    """Bus chain wiring: qubit indices, basis segments, patch attachments."""

    data_qubits: list[int]
    syndrome_qubits: list[int]
    segments: list[Segment]
    attachments: list[Attachment]

    @property
    def n_data(self) -> int:
        return len(self.data_qubits)

    def basis_at(self, pos: int) -> str:
        for seg in self.segments:
            if pos in seg:
                return seg.basis
        raise ValueError(f"chain position {pos} not covered by any segment")

    def validate(self) -> None:
        if self.n_data < 2:
            raise ValueError("bus needs at least two data qubits")
        if self.syndrome_qubits and len(self.syndrome_qubits) != self.n_data - 1:
            raise ValueError("expected one syndrome qubit between neighboring data qubits")
        covered = sorted((s.start, s.stop) for s in self.segments)
        edge = 0
        for start, stop in covered:
            if start != edge:
                raise ValueError("segments must partition the chain without gaps or overlap")
            edge = stop
        if edge != self.n_data:
            raise ValueError("segments must cover the whole chain")
        used: set[int] = set()
        for att in self.attachments:
            positions = sorted(att.pairing.values())
            if len(positions) != len(set(positions)) or len(set(att.pairing)) != len(att.pairing):
                raise ValueError("attachment pairing is not bijective")
            if positions != list(range(positions[0], positions[-1] + 1)):
                raise ValueError("attachment must cover a contiguous bus sub-range")
            if used.intersection(positions):
                raise ValueError("attachments overlap on the bus")
            used.update(positions)
            want = "Z" if att.chain == "X" else "X"
            for pos in positions:
                if self.basis_at(pos) != want:
                    raise ValueError(
                        f"{att.chain}-chain attachment requires a {want}-basis segment"
                    )


# ---------------------------------------------------------------------------
# GHZ preparation circuit

def build_ghz_circuit(n_data: int, segments: list[Segment]) -> list[tuple]:
    """Gate/measure list preparing a (mixed-basis) GHZ chain with syndromes.

    Qubit layout: data qubit i at 2i, syndrome qubit between i and i+1 at
    2i+1, for 2*n_data - 1 qubits total.  Syndrome readouts check the
    nearest-neighbor parity in the prepared basis.
    """
    if n_data < 2:
        raise ValueError("GHZ chain needs at least two data qubits")
    probe = BusSpec(list(range(n_data)), list(range(n_data - 1)), segments, [])
    probe.validate()

    def basis(i: int) -> str:
        return probe.basis_at(i)

    ops: list[tuple] = [("prep", q, "0") for q in range(2 * n_data - 1)]
    ops.append(("h", 0))
    for i in range(n_data - 1):
        ops.append(("cnot", 2 * i, 2 * (i + 1)))
    for i in range(n_data):
        if basis(i) == "X":
            ops.append(("h", 2 * i))
    # Each syndrome qubit measures the two-qubit check straddling it:
    # a controlled-Z (for a Z-basis neighbor) or controlled-X (X-basis
    # neighbor) from the syndrome qubit in |+>, read out in the X basis.
    for i in range(n_data - 1):
        s = 2 * i + 1
        ops.append(("h", s))
        for q in (2 * i, 2 * (i + 1)):
            if basis(q // 2) == "Z":
                ops.append(("h", q))
                ops.append(("cnot", s, q))
                ops.append(("h", q))
            else:
                ops.append(("cnot", s, q))
        ops.append(("h", s))
        ops.append(("mz", s))
    return ops


def run_circuit(ops: list[tuple], n_qubits: int, rng_seed: int = 0) -> tuple[StabilizerTableau, dict[int, int]]:
    """Execute a build_ghz_circuit-style op list; returns (state, {qubit: outcome})."""
    basis = ["Z0"] * n_qubits
    for op in ops:
        if op[0] == "prep":
            basis[op[1]] = "Z0" if op[2] == "0" else "Xp"
    t = StabilizerTableau(n_qubits, basis, rng_seed=rng_seed)
    results: dict[int, int] = {}
    for op in ops:
        if op[0] == "prep":
            continue
        if op[0] == "h":
            t.apply_h(op[1])
        elif op[0] == "cnot":
            t.apply_cnot(op[1], op[2])
        elif op[0] == "mz":
            results[op[1]], _ = t.measure_pauli(PauliString.single(n_qubits, op[1], "Z"))
        elif op[0] == "mx":
            results[op[1]], _ = t.measure_pauli(PauliString.single(n_qubits, op[1], "X"))
        else:
            raise ValueError(f"unknown circuit op {op[0]!r}")
    return t, results


# ---------------------------------------------------------------------------
# Protocol assembly

@dataclass
class BusPlan:
    """Embedded patches plus the bus wiring over one global register."""

    n_total: int
    patches: list[PatchSpec]
    bases: list[str]
    bus: BusSpec
    junctions: dict[int, int]  # patch index -> bus chain position read in Y


def plan_bus(patches: list[PatchSpec], bases: list[str]) -> BusPlan:
    """Lay out patches and a bus serving the requested per-patch bases.

    Patch measured in X -> its X chain attaches to a Z-basis segment;
    measured in Z -> Z chain to an X-basis segment; measured in Y -> both.
    Z-basis segments come first on the chain, in patch order.
    """
    if not patches:
        raise ValueError("at least one patch required")
    if len(bases) != len(patches):
        raise ValueError("one basis per patch required")
    for b in bases:
        if b not in ("X", "Z", "Y"):
            raise ValueError(f"basis must be X, Z or Y, not {b!r}")
    offsets = []
    n_total = 0
    for p in patches:
        offsets.append(n_total)
        n_total += p.n
    embedded = []
    x_jobs: list[tuple[int, list[int]]] = []  # (patch index, global chain qubits)
    z_jobs: list[tuple[int, list[int]]] = []
    for i, (p, b) in enumerate(zip(patches, bases)):
        if b in ("X", "Y"):
            x_jobs.append((i, sorted(q + offsets[i] for q in p.x_chain)))
        if b in ("Z", "Y"):
            z_jobs.append((i, sorted(q + offsets[i] for q in p.z_chain)))
    chain_len = sum(len(c) for _, c in x_jobs) + sum(len(c) for _, c in z_jobs)
    bus_offset = n_total
    n_total += chain_len
    embedded = [p.embedded(n_total, off) for p, off in zip(patches, offsets)]
    segments = []
    attachments = []
    pos = 0
    for i, chain in x_jobs:
        segments.append(Segment("Z", pos, pos + len(chain)))
        attachments.append(Attachment(i, "X", {q: pos + k for k, q in enumerate(chain)}))
        pos += len(chain)
    for i, chain in z_jobs:
        segments.append(Segment("X", pos, pos + len(chain)))
        attachments.append(Attachment(i, "Z", {q: pos + k for k, q in enumerate(chain)}))
        pos += len(chain)
    bus = BusSpec(
        data_qubits=list(range(bus_offset, bus_offset + chain_len)),
        syndrome_qubits=[],
        segments=segments,
        attachments=attachments,
    )
    bus.validate()
    junctions: dict[int, int] = {}
    for i, b in enumerate(bases):
        if b != "Y":
            continue
        p = patches[i]
        shared = set(p.x_chain) & set(p.z_chain)
        if len(shared) != 1:
            raise ValueError("Y readout needs chains sharing exactly one patch qubit")
        shared_global = shared.pop() + offsets[i]
        z_att = next(a for a in attachments if a.patch_index == i and a.chain == "Z")
        junctions[i] = z_att.pairing[shared_global]
    return BusPlan(n_total, embedded, list(bases), bus, junctions)


def prepare_patches(t: StabilizerTableau, plan: BusPlan, prep: list[int]) -> None:
    """Project every patch into its stabilizer space and logical eigenstate."""
    for patch, basis, eigen in zip(plan.patches, plan.bases, prep):
        for s in patch.stabilizers:
            t.project(s, +1)
        op = {"X": patch.logical_x, "Z": patch.logical_z, "Y": patch.logical_y}[basis]
        out, _ = t.measure_pauli(op)
        if out != eigen:
            # conditional logical correction: the conjugate logical operator
            # anticommutes with op and commutes with every patch stabilizer
            partner = patch.logical_z if basis == "X" else patch.logical_x
            t.apply_pauli(partner)


def prepare_bus_state(t: StabilizerTableau, bus: BusSpec) -> None:
    """Entangle the bus data qubits into the segment-basis GHZ state."""
    qs = bus.data_qubits
    t.apply_h(qs[0])
    for a, b in zip(qs, qs[1:]):
        t.apply_cnot(a, b)
    for pos, q in enumerate(qs):
        if bus.basis_at(pos) == "X":
            t.apply_h(q)


def chain_check_operators(t_n: int, bus: BusSpec) -> list[PauliString]:
    """Nearest-neighbor parity checks of the prepared chain."""
    checks = []
    for pos in range(bus.n_data - 1):
        ops = {}
        for p in (pos, pos + 1):
            ops[bus.data_qubits[p]] = "Z" if bus.basis_at(p) == "Z" else "X"
        checks.append(PauliString.from_ops(t_n, ops))
    return checks


def attach_transversal(t: StabilizerTableau, bus: BusSpec, z_chain_first: bool = False) -> None:
    """Apply the transversal CNOTs of every attachment, X chains first.

    ``z_chain_first`` reverses the schedule; for Y readouts this inverts the
    reported parity and exists so that tests can pin the ordering rule down.
    """
    atts = sorted(bus.attachments, key=lambda a: (a.chain != "X") ^ z_chain_first)
    for att in atts:
        for patch_q in sorted(att.pairing, key=att.pairing.get):
            bus_q = bus.data_qubits[att.pairing[patch_q]]
            if att.direction == "bus_is_control":
                t.apply_cnot(bus_q, patch_q)
            else:
                t.apply_cnot(patch_q, bus_q)


# ---------------------------------------------------------------------------
# Joint parity measurement

@dataclass
class RepetitionRecord:
    syndromes: list[int]
    bus_bits: list[int]
    parity: int


@dataclass
class ProtocolRecord:
    repetitions: list[RepetitionRecord] = field(default_factory=list)
    parity: int = 0

    def to_json(self) -> str:
        return json.dumps(
            {
                "parity": self.parity,
                "repetitions": [
                    {"syndromes": r.syndromes, "bus_bits": r.bus_bits, "parity": r.parity}
                    for r in self.repetitions
                ],
            }
        )


def joint_parity(
    patches: list[PatchSpec],
    bases: list[str],
    prep: list[int],
    noise: NoiseModel | None = None,
    repetitions: int = 1,
    rng_seed: int = 0,
    verify_rounds: int = 1,
    z_chain_first: bool = False,
    apply_y_flip: bool = True,
) -> tuple[int, ProtocolRecord]:
    """Measure the joint logical parity of ``patches`` via a fresh bus per repetition.

    Returns (majority-vote parity, full trace).  ``prep`` holds the logical
    eigenvalue each patch is prepared in.  The bus carries no state between
    repetitions: every repetition re-prepares, re-verifies, re-attaches and
    measures it out completely.
    """
    if repetitions < 1:
        raise ValueError("repetitions must be at least 1")
    if any(e not in (+1, -1) for e in prep):
        raise ValueError("prep eigenvalues must be +1 or -1")
    plan = plan_bus(patches, bases)
    seeds = np.random.SeedSequence(rng_seed).generate_state(2 * repetitions, dtype=np.uint64)
    n_flips = sum(1 for b in bases if b == "Y") if apply_y_flip else 0
    record = ProtocolRecord()
    junction_positions = set(plan.junctions.values())
    for rep in range(repetitions):
        t = StabilizerTableau(plan.n_total, rng_seed=int(seeds[2 * rep]))
        prepare_patches(t, plan, prep)
        prepare_bus_state(t, plan.bus)
        syndromes = []
        for _ in range(verify_rounds):
            for check in chain_check_operators(plan.n_total, plan.bus):
                out, _ = t.measure_pauli(check)
                syndromes.append(out)
        attach_transversal(t, plan.bus, z_chain_first=z_chain_first)
        if noise is not None and noise.p_phys > 0:
            rng = np.random.default_rng(int(seeds[2 * rep + 1]) ^ noise.seed)
            for pos, q in enumerate(plan.bus.data_qubits):
                if rng.random() < noise.p_phys:
                    # corrupts the readout basis at this position
                    if plan.bus.basis_at(pos) == "Z":
                        t.apply_z(q)
                    else:
                        t.apply_x(q)
        bits = []
        parity = 1
        for pos, q in enumerate(plan.bus.data_qubits):
            if pos in junction_positions:
                kind = "Y"
            elif plan.bus.basis_at(pos) == "Z":
                kind = "X"  # Z-basis GHZ segment is read out transversally in X
            else:
                kind = "Z"
            out, _ = t.measure_pauli(PauliString.single(plan.n_total, q, kind))
            bits.append(out)
            parity *= out
        parity *= (-1) ** n_flips
        record.repetitions.append(RepetitionRecord(syndromes, bits, parity))
    votes = sum(1 for r in record.repetitions if r.parity == -1)
    record.parity = -1 if 2 * votes > repetitions else +1
    return record.parity, record


def oracle_parity(
    patches: list[PatchSpec], bases: list[str], prep: list[int], rng_seed: int = 0
) -> int:
    """Direct logical-product measurement on an identically prepared register."""
    plan = plan_bus(patches, bases)
    t = StabilizerTableau(plan.n_total, rng_seed=rng_seed)
    prepare_patches(t, plan, prep)
    product = PauliString.identity(plan.n_total)
    for patch, basis in zip(plan.patches, plan.bases):
        op = {"X": patch.logical_x, "Z": patch.logical_z, "Y": patch.logical_y}[basis]
        product = product * op
    out, deterministic = t.measure_pauli(product)
    if not deterministic:
        raise AssertionError("logical product should be fixed by the preparation")
    return out


# ---------------------------------------------------------------------------
# Analytic and sampled error statistics

@dataclass
class ParityStats:
    empirical_odd: float
    analytic_odd: float
    vote_failure: float


def analytic_odd_probability(n: int, p: float) -> float:
    """P(odd number of flips) for n i.i.d. flips of probability p."""
    return 0.5 * (1.0 - (1.0 - 2.0 * p) ** n)


def majority_failure(q: float, repetitions: int) -> float:
    """P(at least ceil(r/2) of r repetitions come out flipped)."""
    k0 = math.ceil(repetitions / 2)
    return sum(
        math.comb(repetitions, k) * q**k * (1 - q) ** (repetitions - k)
        for k in range(k0, repetitions + 1)
    )


def parity_error_stats(
    n: int, p: float, trials: int, repetitions: int, seed: int = 0
) -> ParityStats:
    """Sampled vs closed-form odd-flip probability, plus the vote failure rate."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    NoiseModel(p)  # range check
    rng = np.random.default_rng(seed)
    flips = rng.random((trials, n)) < p
    empirical = float((flips.sum(axis=1) % 2).mean())
    analytic = analytic_odd_probability(n, p)
    return ParityStats(empirical, analytic, majority_failure(analytic, repetitions))
