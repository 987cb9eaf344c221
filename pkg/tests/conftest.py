"""Shared dense-matrix oracles, independent of the library's algebra paths.

Everything here builds explicit 2^n x 2^n matrices with numpy only, so the
symbolic Pauli algebra, the circuit builders, and the statevector engine can
each be checked against brute force.
"""

import numpy as np
import pytest

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)
H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2.0)
AXIS = {"I": I2, "X": X, "Y": Y, "Z": Z}


def kron_chain(single_qubit_ops):
    """Tensor product with qubit 0 as the leftmost (most significant) factor."""
    out = np.array([[1.0 + 0j]])
    for op in single_qubit_ops:
        out = np.kron(out, op)
    return out


def dense_pauli_string(string, n_qubits):
    """Dense matrix of a PauliString on n qubits."""
    factor_map = string.factor_map()
    ops = [AXIS[factor_map.get(q, "I")] for q in range(n_qubits)]
    return string.coefficient * kron_chain(ops)


def dense_pauli_sum(terms, n_qubits):
    total = np.zeros((2**n_qubits, 2**n_qubits), dtype=complex)
    for term in terms:
        total += dense_pauli_string(term, n_qubits)
    return total


def dense_jw_ladder(orbital, n_modes, kind):
    """Brute-force JW ladder operator on 1-based orbital index."""
    sign = -1j if kind == "create" else 1j
    chain_x = [Z if q < orbital - 1 else (X if q == orbital - 1 else I2)
               for q in range(n_modes)]
    chain_y = [Z if q < orbital - 1 else (Y if q == orbital - 1 else I2)
               for q in range(n_modes)]
    return 0.5 * (kron_chain(chain_x) + sign * kron_chain(chain_y))


def dense_single_excitation(i, alpha, n_modes):
    a = dense_jw_ladder(i, n_modes, "create") @ dense_jw_ladder(alpha, n_modes, "annihilate")
    return a - a.conj().T


def dense_double_excitation(i, j, alpha, beta, n_modes):
    a = (dense_jw_ladder(i, n_modes, "create")
         @ dense_jw_ladder(j, n_modes, "create")
         @ dense_jw_ladder(alpha, n_modes, "annihilate")
         @ dense_jw_ladder(beta, n_modes, "annihilate"))
    return a - a.conj().T


def rotation_matrix(axis, angle):
    c, s = np.cos(angle / 2.0), np.sin(angle / 2.0)
    if axis == "Z":
        return np.array([[c - 1j * s, 0], [0, c + 1j * s]])
    if axis == "X":
        return np.array([[c, -1j * s], [-1j * s, c]])
    raise ValueError(axis)


def dense_gate(gate, theta, n_qubits):
    """Dense unitary of one Gate at parameter vector theta."""
    if gate.kind == "cnot":
        control, target = gate.qubits
        dim = 2**n_qubits
        mat = np.zeros((dim, dim), dtype=complex)
        for idx in range(dim):
            bits = [(idx >> (n_qubits - 1 - q)) & 1 for q in range(n_qubits)]
            if bits[control]:
                bits[target] ^= 1
            out = 0
            for b in bits:
                out = (out << 1) | b
            mat[out, idx] = 1.0
        return mat
    if gate.kind == "h":
        single = H
    elif gate.kind == "x":
        single = X
    elif gate.kind == "rx_fixed":
        single = rotation_matrix("X", -gate.angle)  # rx_fixed(a) = exp(+i a X/2)
    elif gate.kind == "rz_param":
        single = rotation_matrix("Z", gate.multiplier * theta[gate.param_index])
    elif gate.kind == "rot_param":
        single = rotation_matrix(gate.axis, gate.multiplier * theta[gate.param_index])
    else:
        raise ValueError(gate.kind)
    ops = [single if q == gate.qubits[0] else I2 for q in range(n_qubits)]
    return kron_chain(ops)


def dense_circuit_unitary(circuit, theta):
    """Product of dense gate matrices in application order."""
    dim = 2**circuit.n_qubits
    unitary = np.eye(dim, dtype=complex)
    for gate in circuit.gates:
        unitary = dense_gate(gate, theta, circuit.n_qubits) @ unitary
    return unitary


def hermitian_expm(anti_hermitian):
    """exp(A) for anti-Hermitian A via eigendecomposition of iA."""
    herm = 1j * anti_hermitian
    values, vectors = np.linalg.eigh(herm)
    return vectors @ np.diag(np.exp(-1j * values)) @ vectors.conj().T


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)
