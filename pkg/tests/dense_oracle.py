"""Brute-force dense-matrix reference for small-qubit stabilizer claims.

Qubit 0 is the most significant factor in every Kronecker product, matching
the left-to-right order of Pauli labels.
"""

import numpy as np

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)

_SINGLE = {0: I2, 1: X, 2: Z, 3: Y}


def kron_all(mats):
    out = np.array([[1.0 + 0j]])
    for m in mats:
        out = np.kron(out, m)
    return out


def pauli_matrix(p):
    """Dense matrix of a PauliString, phase included."""
    return (1j) ** p.phase * kron_all(_SINGLE[int(c)] for c in p.codes)


def single_gate(n, q, gate):
    return kron_all(gate if i == q else I2 for i in range(n))


def cnot_matrix(n, control, target):
    dim = 2**n
    m = np.zeros((dim, dim), dtype=complex)
    for b in range(dim):
        cbit = (b >> (n - 1 - control)) & 1
        out = b ^ (cbit << (n - 1 - target))
        m[out, b] = 1
    return m


def conjugate(u, m):
    return u @ m @ u.conj().T


def same_operator(a, b, tol=1e-9):
    return np.allclose(a, b, atol=tol)
