"""Reference parity-check configurations with known stabilizer tables.

Three small setups exercise every wiring rule once: an XX check between two
d=2 planar patches over an all-Z bus, a mixed XZ check between a planar and
a dual-oriented patch over a mixed-basis bus, and a single-patch Y readout.
For each, the stabilizer group after every CNOT stage is pinned against a
signed generator table shipped as package data.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from .bus import Segment, build_ghz_circuit, run_circuit
from .patches import PatchSpec, planar_patch, with_logical_x
from .pauli import PauliString, parse_generators
from .tableau import canonical_form, group_equals


@dataclass
class TableScenario:
    """Initial generator set plus CNOT stages and their expected tables."""

    name: str
    n: int
    initial: list[PauliString]
    stages: list[list[tuple[int, int]]]  # each stage: ordered (control, target)
    expected: list[str]  # fixture name per stage; expected[0] may cover stage 0 etc.
    initial_fixture: str | None = None


def conjugate_generators(gens: list[PauliString], cnots: list[tuple[int, int]]) -> list[PauliString]:
    out = [g.copy() for g in gens]
    for control, target in cnots:
        for g in out:
            g.conjugate_cnot(control, target)
    return out


def load_table(name: str) -> list[PauliString]:
    text = resources.files("databus").joinpath(f"reference_tables/{name}.txt").read_text()
    return parse_generators(text)


def _bus_generators(n_total: int, offset: int, segments: list[Segment]) -> list[PauliString]:
    """Stabilizers of the simulated GHZ chain, embedded at ``offset``."""
    n_data = segments[-1].stop
    ops = [op for op in build_ghz_circuit(n_data, segments) if op[0] in ("prep", "h", "cnot")]
    # data qubits only: drop syndrome couplings, keep the state preparation
    ops = [op for op in ops if all(q % 2 == 0 for q in op[1:] if isinstance(q, int))]
    t, _ = run_circuit(ops, 2 * n_data - 1)
    gens = []
    for s in t.stabilizers():
        if any(s.x[1::2]) or any(s.z[1::2]):
            continue  # syndrome-qubit stabilizer, not part of the chain state
        g = PauliString.identity(n_total)
        g.x[offset:offset + n_data] = s.x[0::2]
        g.z[offset:offset + n_data] = s.z[0::2]
        g.phase = s.phase
        gens.append(g)
    return gens


def _embed_patch_generators(patch: PatchSpec, n_total: int, offset: int) -> list[PauliString]:
    return patch.embedded(n_total, offset).stabilizers


def xx_pair_scenario() -> TableScenario:
    """XX check: two planar d=2 patches, 4-qubit all-Z bus, bus-controlled CNOTs."""
    patch = planar_patch(2)
    n = 14
    gens = (
        _embed_patch_generators(patch, n, 0)
        + _embed_patch_generators(patch, n, 5)
        + _bus_generators(n, 10, [Segment("Z", 0, 4)])
    )
    stage = [(10, 3), (11, 4), (12, 8), (13, 9)]
    return TableScenario("xx_pair", n, gens, [stage], ["xx_pair_attached"])


def mixed_pair_scenario() -> TableScenario:
    """XZ check: planar patch (X chain) and dual patch (Z chain) on a mixed bus."""
    left = planar_patch(2)
    right = planar_patch(2, dual=True)
    n = 14
    gens = (
        _embed_patch_generators(left, n, 0)
        + _embed_patch_generators(right, n, 5)
        + _bus_generators(n, 10, [Segment("Z", 0, 2), Segment("X", 2, 4)])
    )
    stage = [(10, 3), (11, 4), (8, 12), (9, 13)]
    return TableScenario(
        "mixed_pair", n, gens, [stage], ["mixed_pair_attached"], initial_fixture="mixed_pair_initial"
    )


def y_readout_scenario() -> TableScenario:
    """Single-patch Y readout: both chains attach to a mixed 4-qubit bus.

    Stage order follows the reference tables (Z-chain couplings first); the
    live protocol applies X chains first, which flips the junction parity —
    see bus.attach_transversal.
    """
    patch = with_logical_x(planar_patch(2, dual=True), [0, 3])
    n = 9
    gens = _embed_patch_generators(patch, n, 0) + _bus_generators(
        n, 5, [Segment("Z", 0, 2), Segment("X", 2, 4)]
    )
    stages = [[(3, 7), (4, 8)], [(5, 0), (6, 3)]]
    return TableScenario(
        "y_readout", n, gens, stages, ["y_readout_stage1", "y_readout_attached"],
        initial_fixture="y_readout_initial",
    )


def all_scenarios() -> list[TableScenario]:
    return [xx_pair_scenario(), mixed_pair_scenario(), y_readout_scenario()]


@dataclass
class TableCheckResult:
    scenario: str
    fixture: str
    passed: bool
    computed: list[str]
    expected: list[str]


def run_table_checks() -> list[TableCheckResult]:
    """Group-equality of every scenario stage against its reference table."""
    results = []
    for sc in all_scenarios():
        gens = sc.initial
        if sc.initial_fixture:
            results.append(_compare(sc.name, sc.initial_fixture, gens))
        for stage, fixture in zip(sc.stages, sc.expected):
            gens = conjugate_generators(gens, stage)
            results.append(_compare(sc.name, fixture, gens))
    return results


def oracle_suite(d: int = 2, trials: int = 1000, seed: int = 0) -> tuple[int, int]:
    """Noiseless bus parity vs direct logical measurement, all 16 combinations.

    Trials cycle through every (basis, basis, eigenvalue, eigenvalue)
    combination for two patches of distance ``d``; returns (mismatches,
    trials run).
    """
    from .bus import joint_parity, oracle_parity

    patch = planar_patch(d)
    combos = [
        (b1, b2, e1, e2)
        for b1 in "XZ" for b2 in "XZ" for e1 in (+1, -1) for e2 in (+1, -1)
    ]
    mismatches = 0
    for trial in range(trials):
        b1, b2, e1, e2 = combos[trial % len(combos)]
        rng_seed = seed * 1_000_003 + trial
        parity, _ = joint_parity([patch, patch], [b1, b2], [e1, e2], rng_seed=rng_seed)
        reference = oracle_parity([patch, patch], [b1, b2], [e1, e2], rng_seed=rng_seed)
        if parity != reference or reference != e1 * e2:
            mismatches += 1
    return mismatches, trials


def y_flip_suite(trials: int = 50, seed: int = 0) -> tuple[int, int]:
    """Y readouts: count correct results with the parity flip and without it.

    A healthy implementation returns (trials, 0): always right with the
    flip, always wrong (anti-correlated) without it.
    """
    from .bus import joint_parity, oracle_parity

    patch = with_logical_x(planar_patch(2, dual=True), [0, 3])
    with_flip = without_flip = 0
    for trial in range(trials):
        eigen = +1 if trial % 2 == 0 else -1
        rng_seed = seed * 1_000_003 + trial
        reference = oracle_parity([patch], ["Y"], [eigen], rng_seed=rng_seed)
        parity, _ = joint_parity([patch], ["Y"], [eigen], rng_seed=rng_seed)
        bare, _ = joint_parity([patch], ["Y"], [eigen], rng_seed=rng_seed, apply_y_flip=False)
        with_flip += parity == reference
        without_flip += bare == reference
    return with_flip, without_flip


def _compare(name: str, fixture: str, gens: list[PauliString]) -> TableCheckResult:
    expected = load_table(fixture)
    passed = group_equals(gens, expected)
    return TableCheckResult(
        name,
        fixture,
        passed,
        [g.label() for g in canonical_form(gens)],
        [g.label() for g in canonical_form(expected)],
    )
