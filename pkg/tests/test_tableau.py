import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from databus.pauli import PauliString, parse_generators
from databus.tableau import StabilizerTableau, canonical_form, group_equals, new_tableau

from dense_oracle import cnot_matrix, conjugate, pauli_matrix, same_operator, single_gate, H


def labels(gens):
    return [g.label() for g in gens]


class TestConstruction:
    def test_default_all_zero(self):
        t = new_tableau(3)
        assert labels(t.stabilizers()) == ["+ZII", "+IZI", "+IIZ"]

    def test_mixed_basis(self):
        t = new_tableau(3, ["Z0", "Xp", "Z0"])
        assert labels(t.stabilizers()) == ["+ZII", "+IXI", "+IIZ"]

    def test_plus_states(self):
        t = new_tableau(2, ["Xp", "Xp"])
        assert labels(t.stabilizers()) == ["+XI", "+IX"]

    def test_zero_qubits_rejected(self):
        with pytest.raises(ValueError):
            new_tableau(0)

    def test_bad_basis_rejected(self):
        with pytest.raises(ValueError):
            new_tableau(1, ["Yp"])


class TestGates:
    def test_cnot_trivial_rules(self):
        t = new_tableau(2, ["Xp", "Z0"])
        t.apply_cnot(0, 1)
        assert labels(t.stabilizers()) == ["+XX", "+ZZ"]

    def test_cnot_yy_sign_on_tableau(self):
        # prepare the -1 eigenstate bookkeeping via direct stabilizer rows:
        # conjugating Y(x)Y must give -X(x)Z, confirmed independently by the
        # 4x4 dense conjugation in test_pauli; here the tableau path.
        t = new_tableau(2)
        t.apply_h(0)  # |+0>
        # stabilizers {XI, IZ}; product with phases tracked
        t.apply_cnot(0, 1)
        t.check_invariants()
        p = PauliString.from_label("YY")
        u = cnot_matrix(2, 0, 1)
        expected = conjugate(u, pauli_matrix(p))
        q = p.copy()
        q.conjugate_cnot(0, 1)
        assert same_operator(pauli_matrix(q), expected)
        assert q.label() == "-XZ"

    def test_cnot_same_qubit_rejected(self):
        t = new_tableau(2)
        with pytest.raises(ValueError):
            t.apply_cnot(1, 1)
        with pytest.raises(ValueError):
            t.apply_cnot(0, 2)

    def test_h_rules(self):
        t = new_tableau(2, ["Z0", "Xp"])
        t.apply_h(0)
        t.apply_h(1)
        assert labels(t.stabilizers()) == ["+XI", "+IZ"]

    def test_h_out_of_range(self):
        with pytest.raises(ValueError):
            new_tableau(1).apply_h(1)


class TestMeasurement:
    def test_deterministic_z_on_zero(self):
        t = new_tableau(1)
        out, det = t.measure_pauli(PauliString.from_label("Z"))
        assert (out, det) == (+1, True)

    def test_ghz_parity_deterministic(self):
        t = new_tableau(2, ["Xp", "Z0"])
        t.apply_cnot(0, 1)  # Bell pair: {XX, ZZ}
        out, det = t.measure_pauli(PauliString.from_label("ZZ"))
        assert (out, det) == (+1, True)
        out, det = t.measure_pauli(PauliString.from_label("XX"))
        assert (out, det) == (+1, True)

    def test_random_then_idempotent(self):
        t = new_tableau(1, rng_seed=11)
        x = PauliString.from_label("X")
        out1, det1 = t.measure_pauli(x)
        out2, det2 = t.measure_pauli(x)
        assert det1 is False and det2 is True
        assert out1 == out2

    def test_random_outcomes_reproducible_by_seed(self):
        outs = [new_tableau(1, rng_seed=7).measure_pauli(PauliString.from_label("X"))[0] for _ in range(3)]
        assert len(set(outs)) == 1
        # different seeds eventually give both outcomes
        seen = {new_tableau(1, rng_seed=s).measure_pauli(PauliString.from_label("X"))[0] for s in range(20)}
        assert seen == {+1, -1}

    def test_imaginary_phase_rejected(self):
        t = new_tableau(1)
        with pytest.raises(ValueError):
            t.measure_pauli(PauliString.from_label("+iX"))

    def test_project_forces_eigenvalue(self):
        for seed in range(10):
            t = new_tableau(1, rng_seed=seed)
            t.project(PauliString.from_label("X"), -1)
            out, det = t.measure_pauli(PauliString.from_label("X"))
            assert (out, det) == (-1, True)

    def test_project_against_deterministic_rejected(self):
        t = new_tableau(1)
        with pytest.raises(ValueError):
            t.project(PauliString.from_label("Z"), -1)


class TestCanonicalForm:
    def test_same_group_same_form(self):
        a = parse_generators("+ZZ\n+ZI")
        b = parse_generators("+IZ\n+ZI")
        assert labels(canonical_form(a)) == labels(canonical_form(b))

    def test_signed_product_recognized(self):
        a = parse_generators("+XX\n+ZZ")
        b = parse_generators("+XX\n-YY")
        assert group_equals(a, b)

    def test_idempotent(self):
        gens = parse_generators("+XZI\n-ZZZ\n+IIX")
        once = canonical_form(gens)
        assert labels(canonical_form(once)) == labels(once)

    def test_sign_matters(self):
        assert not group_equals(parse_generators("+Z"), parse_generators("-Z"))

    def test_minus_identity_rejected(self):
        with pytest.raises(ValueError):
            canonical_form(parse_generators("+XX\n+ZZ\n+YY"))  # product is -I

    def test_mismatched_lengths_rejected(self):
        with pytest.raises(ValueError):
            group_equals(parse_generators("+Z"), parse_generators("+ZZ"))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 3), st.integers(0, 2**32 - 1), st.data())
def test_invariants_hold_under_random_circuits(n, seed, data):
    t = new_tableau(n, rng_seed=seed)
    rng = np.random.default_rng(seed)
    for _ in range(data.draw(st.integers(0, 12))):
        kind = rng.integers(3)
        if kind == 0 and n > 1:
            c, tgt = rng.choice(n, size=2, replace=False)
            t.apply_cnot(int(c), int(tgt))
        elif kind == 1:
            t.apply_h(int(rng.integers(n)))
        else:
            q = int(rng.integers(n))
            t.measure_pauli(PauliString.single(n, q, "XZY"[rng.integers(3)]))
    t.check_invariants()


def test_small_circuit_matches_dense_simulation():
    """Full-state check: tableau stabilizers really stabilize the dense state."""
    n = 3
    t = new_tableau(n, rng_seed=0)
    state = np.zeros(2**n, dtype=complex)
    state[0] = 1.0
    circuit = [("h", 0), ("cnot", 0, 1), ("h", 2), ("cnot", 2, 1), ("h", 0)]
    for op in circuit:
        if op[0] == "h":
            t.apply_h(op[1])
            state = single_gate(n, op[1], H) @ state
        else:
            t.apply_cnot(op[1], op[2])
            state = cnot_matrix(n, op[1], op[2]) @ state
    for s in t.stabilizers():
        assert np.allclose(pauli_matrix(s) @ state, state)
