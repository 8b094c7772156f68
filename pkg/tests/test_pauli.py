import numpy as np
import pytest
from hypothesis import given, strategies as st

from databus.pauli import PauliString, format_generators, parse_generators

from dense_oracle import conjugate, cnot_matrix, pauli_matrix, same_operator, single_gate, H


def random_pauli(draw_codes, phase):
    n = len(draw_codes)
    p = PauliString.identity(n)
    for j, c in enumerate(draw_codes):
        p.x[j] = c in (1, 3)
        p.z[j] = c in (2, 3)
    p.phase = phase
    return p


pauli_strings = st.builds(
    random_pauli,
    st.lists(st.integers(0, 3), min_size=1, max_size=5),
    st.integers(0, 3),
)


def same_length_pairs():
    return st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.builds(random_pauli, st.lists(st.integers(0, 3), min_size=n, max_size=n), st.integers(0, 3)),
            st.builds(random_pauli, st.lists(st.integers(0, 3), min_size=n, max_size=n), st.integers(0, 3)),
        )
    )


class TestConstruction:
    def test_label_round_trip(self):
        for label in ["+XZIIY", "-XZIIY", "+iZZ", "-iY", "+IIII"]:
            assert PauliString.from_label(label).label() == label

    def test_bare_label_means_plus(self):
        assert PauliString.from_label("XYZ").label() == "+XYZ"

    def test_from_ops(self):
        p = PauliString.from_ops(4, {0: "X", 2: "Y", 3: "Z"})
        assert p.label() == "+XIYZ"

    def test_bad_character_rejected(self):
        with pytest.raises(ValueError):
            PauliString.from_label("XQZ")

    def test_parse_format_generators(self):
        text = "+XX\n-ZZ  # a comment\n\n+YY\n"
        gens = parse_generators(text)
        assert [g.label() for g in gens] == ["+XX", "-ZZ", "+YY"]
        assert format_generators(gens) == "+XX\n-ZZ\n+YY"

    def test_parse_rejects_ragged_lengths(self):
        with pytest.raises(ValueError):
            parse_generators("+XX\n+XXX")


class TestAlgebra:
    def test_single_qubit_products(self):
        X = PauliString.from_label("X")
        Y = PauliString.from_label("Y")
        Z = PauliString.from_label("Z")
        assert (X * Z).label() == "-iY"
        assert (Z * X).label() == "+iY"
        assert (X * Y).label() == "+iZ"
        assert (Y * Z).label() == "+iX"
        assert (X * X).label() == "+I"

    def test_product_of_stabilizer_pair(self):
        xx = PauliString.from_label("XX")
        zz = PauliString.from_label("ZZ")
        assert (xx * zz).label() == "-YY"

    @given(same_length_pairs())
    def test_product_matches_dense(self, pair):
        a, b = pair
        assert same_operator(pauli_matrix(a * b), pauli_matrix(a) @ pauli_matrix(b))

    @given(same_length_pairs())
    def test_commutes_is_symmetric(self, pair):
        a, b = pair
        assert a.commutes(b) == b.commutes(a)

    @given(same_length_pairs())
    def test_commutes_matches_dense(self, pair):
        a, b = pair
        ma, mb = pauli_matrix(a), pauli_matrix(b)
        assert a.commutes(b) == same_operator(ma @ mb, mb @ ma)

    def test_length_mismatch_rejected(self):
        with pytest.raises(ValueError):
            PauliString.from_label("XX") * PauliString.from_label("X")

    @given(pauli_strings)
    def test_weight_and_identity(self, p):
        assert p.weight() == sum(c != 0 for c in p.codes)
        assert p.is_identity() == (p.weight() == 0)


class TestConjugation:
    def test_cnot_spreads_x_and_z(self):
        p = PauliString.from_label("XI")
        p.conjugate_cnot(0, 1)
        assert p.label() == "+XX"
        p = PauliString.from_label("IZ")
        p.conjugate_cnot(0, 1)
        assert p.label() == "+ZZ"

    def test_cnot_yy_picks_up_sign(self):
        p = PauliString.from_label("YY")
        p.conjugate_cnot(0, 1)
        assert p.label() == "-XZ"

    def test_h_swaps_x_z(self):
        p = PauliString.from_label("ZX")
        p.conjugate_h(1)
        assert p.label() == "+ZZ"
        p = PauliString.from_label("Y")
        p.conjugate_h(0)
        assert p.label() == "-Y"

    @given(st.builds(random_pauli, st.lists(st.integers(0, 3), min_size=2, max_size=2), st.integers(0, 3)))
    def test_cnot_matches_dense(self, p):
        u = cnot_matrix(2, 0, 1)
        expected = conjugate(u, pauli_matrix(p))
        q = p.copy()
        q.conjugate_cnot(0, 1)
        assert same_operator(pauli_matrix(q), expected)

    @given(st.builds(random_pauli, st.lists(st.integers(0, 3), min_size=1, max_size=1), st.integers(0, 3)))
    def test_h_matches_dense(self, p):
        u = single_gate(1, 0, H)
        expected = conjugate(u, pauli_matrix(p))
        q = p.copy()
        q.conjugate_h(0)
        assert same_operator(pauli_matrix(q), expected)
