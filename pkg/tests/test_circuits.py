"""Circuit builders: template structure, parameter counts, gate tallies."""

from math import comb, pi

import numpy as np
import pytest

from vqacost.circuits import (
    CircuitError,
    HeaSpec,
    UccsdSpec,
    build_hea,
    build_uccsd,
    cnot,
    count_gates,
    dump_circuit,
    exp_pauli_circuit,
    hadamard,
    pauli_x,
    rz_param,
)
from vqacost.pauli import PauliString

from conftest import dense_circuit_unitary, dense_pauli_sum, hermitian_expm


def ps(coeff, *factors):
    return PauliString(coeff, tuple(factors))


class TestExpPauliTemplate:
    def test_figure_sequence(self):
        # P = X0 Y2 Z3: H(0), RX(-pi/2)(2), CNOT(0,3), CNOT(2,3), RZ(2theta)(3),
        # CNOT(2,3), CNOT(0,3), RX(pi/2)(2), H(0).
        gates = exp_pauli_circuit(0, 1.0, ps(1, (0, "X"), (2, "Y"), (3, "Z")))
        kinds = [(g.kind, g.qubits) for g in gates]
        assert kinds == [
            ("h", (0,)),
            ("rx_fixed", (2,)),
            ("cnot", (0, 3)),
            ("cnot", (2, 3)),
            ("rz_param", (3,)),
            ("cnot", (2, 3)),
            ("cnot", (0, 3)),
            ("rx_fixed", (2,)),
            ("h", (0,)),
        ]
        assert gates[1].angle == -pi / 2
        assert gates[7].angle == pi / 2
        rz = gates[4]
        assert rz.param_index == 0 and rz.multiplier == 2.0

    def test_single_z_is_bare_rotation(self):
        gates = exp_pauli_circuit(0, 1.0, ps(1, (0, "Z")))
        assert [(g.kind, g.qubits) for g in gates] == [("rz_param", (0,))]

    def test_two_qubit_gate_count_scales_with_locality(self):
        for k in range(2, 6):
            string = ps(1, *(((q, "X") for q in range(k))))
            gates = exp_pauli_circuit(0, 1.0, string)
            assert sum(1 for g in gates if g.kind == "cnot") == 2 * (k - 1)

    def test_rejects_empty_and_non_unit(self):
        with pytest.raises(CircuitError):
            exp_pauli_circuit(0, 1.0, PauliString.identity())
        with pytest.raises(CircuitError):
            exp_pauli_circuit(0, 1.0, ps(0.5, (0, "X")))

    @pytest.mark.parametrize("factors,mult", [
        (((0, "X"),), 1.0),
        (((0, "Y"), (1, "Z")), -0.5),
        (((0, "X"), (1, "Y"), (2, "Z")), 0.25),
    ])
    def test_unitary_equals_matrix_exponential(self, factors, mult):
        from vqacost.circuits import ParamCircuit

        string = ps(1, *factors)
        n = max(q for q, _ in factors) + 1
        gates = exp_pauli_circuit(0, mult, string)
        circuit = ParamCircuit(n, tuple(gates), 1, ((0, len(gates)),))
        theta = 0.73
        got = dense_circuit_unitary(circuit, np.array([theta]))
        want = hermitian_expm(-1j * mult * theta * dense_pauli_sum([string], n))
        assert np.allclose(got, want, atol=1e-12)


class TestBuildUccsd:
    def test_small_structure(self):
        circuit = build_uccsd(UccsdSpec(4, 2))
        assert circuit.L == 5
        assert len(circuit.blocks) == 2 * 4 + 8 * 1
        prep = circuit.gates[: circuit.blocks[0][0]]
        assert [(g.kind, g.qubits) for g in prep] == [("x", (0,)), ("x", (1,))]

    def test_parameter_count_formula(self):
        assert UccsdSpec(6, 3).parameter_count() == 18

    @pytest.mark.parametrize("n_o", range(3, 13))
    def test_count_matches_enumeration(self, n_o):
        for n_e in range(1, n_o):
            spec = UccsdSpec(n_o, n_e)
            enumerated = len(spec.single_excitations()) + len(spec.double_excitations())
            formula = comb(n_e, 1) * comb(n_o - n_e, 1) + comb(n_e, 2) * comb(n_o - n_e, 2)
            assert spec.parameter_count() == enumerated == formula

    def test_blocks_share_parameters_per_excitation(self):
        spec = UccsdSpec(4, 2)
        circuit = build_uccsd(spec)
        by_param = {}
        for index, block in enumerate(circuit.blocks):
            params = {g.param_index for g in circuit.block_gates(block)
                      if g.param_index is not None}
            assert len(params) == 1
            by_param.setdefault(params.pop(), []).append(index)
        counts = sorted(len(v) for v in by_param.values())
        assert counts == [2, 2, 2, 2, 8]

    def test_gate_tallies_match_per_template_arithmetic(self):
        spec = UccsdSpec(4, 2)
        n_single, n_two = count_gates(build_uccsd(spec))
        expect_single = spec.n_electrons
        expect_two = 0
        for i, a in spec.single_excitations():
            expect_single += 2 * 5
            expect_two += 2 * 2 * (i - a)
        for i, j, a, b in spec.double_excitations():
            k = (a - b + 1) + (i - j + 1)
            expect_single += 8 * 9
            expect_two += 8 * 2 * (k - 1)
        assert (n_single, n_two) == (expect_single, expect_two)

    def test_rejects_bad_spec(self):
        with pytest.raises(CircuitError):
            UccsdSpec(4, 4)
        with pytest.raises(CircuitError):
            UccsdSpec(4, 0)


class TestBuildHea:
    def test_small_counts(self):
        circuit = build_hea(HeaSpec(4, 1))
        assert circuit.L == 12
        assert count_gates(circuit) == (12, 4)

    def test_l_formula(self):
        assert build_hea(HeaSpec(3, 2)).L == 18

    def test_two_blocks_counts(self):
        assert count_gates(build_hea(HeaSpec(4, 2))) == (24, 8)

    def test_entangler_is_cyclic_chain(self):
        circuit = build_hea(HeaSpec(4, 1))
        cnots = [g.qubits for g in circuit.gates if g.kind == "cnot"]
        assert cnots == [(0, 1), (1, 2), (2, 3), (3, 0)]

    def test_rotation_pattern(self):
        circuit = build_hea(HeaSpec(2, 1))
        rotations = [(g.axis, g.qubits[0], g.param_index) for g in circuit.gates
                     if g.kind == "rot_param"]
        assert rotations == [
            ("Z", 0, 0), ("Z", 1, 3),
            ("X", 0, 1), ("X", 1, 4),
            ("Z", 0, 2), ("Z", 1, 5),
        ]

    def test_rejects_bad_spec(self):
        with pytest.raises(CircuitError):
            HeaSpec(1, 1)
        with pytest.raises(CircuitError):
            HeaSpec(3, 0)


class TestCountGatesAndDump:
    def test_empty_circuit(self):
        from vqacost.circuits import ParamCircuit

        circuit = ParamCircuit(2, (), 0, ())
        assert count_gates(circuit) == (0, 0)

    def test_dump_round_trips_gate_lines(self):
        from vqacost.circuits import ParamCircuit

        gates = (pauli_x(0), hadamard(1), cnot(0, 1), rz_param(1, 0, 2.0))
        circuit = ParamCircuit(2, gates, 1, ((3, 4),))
        assert dump_circuit(circuit) == "X 0\nH 1\nCNOT 0 1\nRZP 1 0 2.0\n"

    def test_uccsd_dump_golden_head(self):
        lines = dump_circuit(build_uccsd(UccsdSpec(4, 2))).splitlines()
        # Prep, then the first single-excitation block (alpha=1, i=3):
        # strings on qubits {0,1,2} with X/Y endpoints and a Z in between.
        assert lines[:9] == [
            "X 0",
            "X 1",
            "H 0",
            "RXF 2 -1.5707963267948966",
            "CNOT 0 2",
            "CNOT 1 2",
            "RZP 2 0 1.0",
            "CNOT 1 2",
            "CNOT 0 2",
        ]
