"""Gate-level circuit IR and builders for exp(-i*theta*P) blocks, UCCSD, HEA.

Gate set (mirrors the compilation template of rotation-by-Pauli blocks):

* ``h``         - Hadamard basis change for X factors
* ``rx_fixed``  - fixed-angle X rotation (+-pi/2 only), basis change for Y
* ``rz_param``  - parameterized Z rotation, angle = multiplier * theta[param]
* ``rot_param`` - parameterized rotation about X or Z (HEA layers)
* ``x``         - Pauli X (reference-state preparation)
* ``cnot``      - controlled NOT

Rotation conventions: parameterized rotations apply ``exp(-i a A / 2)`` at
angle ``a``, so an ``rz_param`` gate with multiplier ``2m`` inside a
basis-changed CNOT ladder implements ``exp(-i (m theta) P)`` exactly.  The
fixed basis-change rotation follows the template's labeling instead and
applies ``exp(+i a X / 2)``: RotX(-pi/2) before and RotX(+pi/2) after the
ladder map Y factors onto Z.  (Under the minus convention the same labels
would implement ``exp(+i theta P)`` on strings with an odd Y count.)

Parameterized gates are grouped into ``blocks`` (gate-index ranges): one per
exp-Pauli block for Trotterized ansatzes, one per sub-layer for HEA.  Blocks
partition the parameterized portion of the gate list; preparation gates sit
before the first block.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, pi

from .pauli import PauliString, PauliSum, double_excitation_strings, single_excitation_strings

HALF_PI = pi / 2


class CircuitError(ValueError):
    """Raised for malformed gates, circuits, or builder specs."""


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]
    param_index: int | None = None
    multiplier: float = 0.0
    angle: float = 0.0
    axis: str = ""

    def __post_init__(self) -> None:
        if self.kind == "cnot":
            if len(self.qubits) != 2 or self.qubits[0] == self.qubits[1]:
                raise CircuitError(f"CNOT needs two distinct qubits, got {self.qubits}")
        elif len(self.qubits) != 1:
            raise CircuitError(f"{self.kind} acts on one qubit, got {self.qubits}")
        if self.kind == "rx_fixed" and abs(abs(self.angle) - HALF_PI) > 1e-15:
            raise CircuitError("rx_fixed supports only +-pi/2 angles")
        if self.kind == "rot_param" and self.axis not in ("X", "Z"):
            raise CircuitError(f"rot_param axis must be X or Z, got {self.axis!r}")

    def is_parameterized(self) -> bool:
        return self.param_index is not None

    def is_two_qubit(self) -> bool:
        return self.kind == "cnot"


def hadamard(q: int) -> Gate:
    return Gate("h", (q,))


def rx_fixed(q: int, angle: float) -> Gate:
    return Gate("rx_fixed", (q,), angle=angle)


def rz_param(q: int, param_index: int, multiplier: float) -> Gate:
    return Gate("rz_param", (q,), param_index=param_index, multiplier=multiplier)


def rot_param(axis: str, q: int, param_index: int, multiplier: float = 1.0) -> Gate:
    return Gate("rot_param", (q,), param_index=param_index, multiplier=multiplier, axis=axis)


def pauli_x(q: int) -> Gate:
    return Gate("x", (q,))


def cnot(control: int, target: int) -> Gate:
    return Gate("cnot", (control, target))


@dataclass(frozen=True)
class ParamCircuit:
    """Ordered gate list with parameter slots and block boundaries.

    ``blocks`` holds ``(start, stop)`` gate-index ranges; they are in order,
    non-overlapping, and cover exactly the parameterized portion of ``gates``.
    Immutable after construction; safe to share across threads.
    """

    n_qubits: int
    gates: tuple[Gate, ...]
    n_params: int
    blocks: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        used: set[int] = set()
        for gate in self.gates:
            if any(q >= self.n_qubits or q < 0 for q in gate.qubits):
                raise CircuitError(f"gate {gate} out of range for {self.n_qubits} qubits")
            if gate.param_index is not None:
                if not 0 <= gate.param_index < self.n_params:
                    raise CircuitError(
                        f"param index {gate.param_index} outside [0, {self.n_params})"
                    )
                used.add(gate.param_index)
        if used != set(range(self.n_params)):
            missing = sorted(set(range(self.n_params)) - used)
            raise CircuitError(f"unused parameter indices: {missing}")
        prev_stop = None
        for start, stop in self.blocks:
            if not 0 <= start < stop <= len(self.gates):
                raise CircuitError(f"bad block range ({start}, {stop})")
            if prev_stop is not None and start < prev_stop:
                raise CircuitError("blocks overlap or are out of order")
            prev_stop = stop

    @property
    def L(self) -> int:
        """Parameter count."""
        return self.n_params

    def block_gates(self, block: tuple[int, int]) -> tuple[Gate, ...]:
        return self.gates[block[0]:block[1]]

    def params_of_gate_kind(self) -> dict[int, list[Gate]]:
        """Map param index -> gates consuming it (for gradient validation)."""
        out: dict[int, list[Gate]] = {l: [] for l in range(self.n_params)}
        for gate in self.gates:
            if gate.param_index is not None:
                out[gate.param_index].append(gate)
        return out


@dataclass(frozen=True)
class UccsdSpec:
    """Problem size for the Trotterized UCCSD builder."""

    n_orbitals: int
    n_electrons: int

    def __post_init__(self) -> None:
        if not 1 <= self.n_electrons < self.n_orbitals:
            raise CircuitError(
                f"need 1 <= n_electrons < n_orbitals, got "
                f"({self.n_orbitals}, {self.n_electrons})"
            )

    @property
    def n_virtual(self) -> int:
        return self.n_orbitals - self.n_electrons

    def parameter_count(self) -> int:
        """Closed-form count: singles C(ne,1)C(nv,1) plus doubles C(ne,2)C(nv,2)."""
        ne, nv = self.n_electrons, self.n_virtual
        return comb(ne, 1) * comb(nv, 1) + comb(ne, 2) * comb(nv, 2)

    def single_excitations(self) -> list[tuple[int, int]]:
        """(i, alpha) pairs in lexicographic (alpha, i) order."""
        ne, no = self.n_electrons, self.n_orbitals
        return [(i, a) for a in range(1, ne + 1) for i in range(ne + 1, no + 1)]

    def double_excitations(self) -> list[tuple[int, int, int, int]]:
        """(i, j, alpha, beta) tuples in lexicographic (beta, alpha, j, i) order."""
        ne, no = self.n_electrons, self.n_orbitals
        return [
            (i, j, a, b)
            for b in range(1, ne + 1)
            for a in range(b + 1, ne + 1)
            for j in range(ne + 1, no + 1)
            for i in range(j + 1, no + 1)
        ]


@dataclass(frozen=True)
class HeaSpec:
    """Problem size for the hardware-efficient ansatz builder."""

    n_qubits: int
    n_blocks: int

    def __post_init__(self) -> None:
        if self.n_qubits < 2:
            raise CircuitError(f"HEA needs >= 2 qubits, got {self.n_qubits}")
        if self.n_blocks < 1:
            raise CircuitError(f"HEA needs >= 1 block, got {self.n_blocks}")

    def parameter_count(self) -> int:
        return 3 * self.n_qubits * self.n_blocks


def exp_pauli_circuit(param_index: int, multiplier: float, string: PauliString) -> list[Gate]:
    """Gate template for ``exp(-i (multiplier * theta) P)``.

    Basis changes map X factors via Hadamard and Y factors via RotX(-pi/2);
    a CNOT ladder (acted qubits ascending) accumulates parity onto the
    highest-index acted qubit; RotZ with angle ``2 * multiplier * theta``
    applies the rotation; the ladder and basis changes are then mirrored.

    For locality k >= 2 with at least one non-Z factor the block has
    single-qubit layer depth 3 and two-qubit layer depth 2k - 2.
    """
    if string.locality() == 0:
        raise CircuitError("cannot exponentiate the empty (identity) string")
    if abs(abs(string.coefficient) - 1.0) > 1e-12:
        raise CircuitError(
            f"exp-Pauli template needs a unit-modulus coefficient, got {string.coefficient}"
        )
    qubits = string.qubits()
    target = qubits[-1]
    basis_in: list[Gate] = []
    basis_out: list[Gate] = []
    for qubit, axis in string.factors:
        if axis == "X":
            basis_in.append(hadamard(qubit))
            basis_out.append(hadamard(qubit))
        elif axis == "Y":
            basis_in.append(rx_fixed(qubit, -HALF_PI))
            basis_out.append(rx_fixed(qubit, HALF_PI))
    ladder = [cnot(q, target) for q in qubits[:-1]]
    gates = list(basis_in)
    gates.extend(ladder)
    gates.append(rz_param(target, param_index, 2.0 * multiplier))
    gates.extend(reversed(ladder))
    gates.extend(reversed(basis_out))
    return gates


def _trotter_multiplier(coefficient: complex) -> float:
    """Multiplier m such that exp(theta * c * P_hat) = exp(-i (m theta) P_hat).

    Excitation sums have purely imaginary string coefficients (anti-Hermitian
    operators), for which m = -Im(c).
    """
    if abs(coefficient.real) > 1e-12:
        raise CircuitError(
            f"expected a purely imaginary string coefficient, got {coefficient}"
        )
    return -coefficient.imag


def _excitation_blocks(gates: list[Gate], blocks: list[tuple[int, int]],
                       operator: PauliSum, param_index: int) -> None:
    """Append one exp-Pauli block per string of ``operator``, sharing one parameter."""
    for term in operator:
        multiplier = _trotter_multiplier(term.coefficient)
        unit = term.with_coefficient(1.0)
        start = len(gates)
        gates.extend(exp_pauli_circuit(param_index, multiplier, unit))
        blocks.append((start, len(gates)))


def build_uccsd(spec: UccsdSpec) -> ParamCircuit:
    """First-order Trotterized UCCSD ansatz circuit.

    Reference-state X gates on qubits ``0 .. n_electrons - 1`` are followed by
    one exp-Pauli block per string of every single and double excitation; the
    2 (resp. 8) strings of one excitation share one parameter.  Term order is
    all singles in lexicographic (alpha, i), then all doubles in lexicographic
    (beta, alpha, j, i).
    """
    gates: list[Gate] = [pauli_x(q) for q in range(spec.n_electrons)]
    blocks: list[tuple[int, int]] = []
    param = 0
    for i, alpha in spec.single_excitations():
        _excitation_blocks(gates, blocks, single_excitation_strings(i, alpha), param)
        param += 1
    for i, j, alpha, beta in spec.double_excitations():
        _excitation_blocks(gates, blocks, double_excitation_strings(i, j, alpha, beta), param)
        param += 1
    assert param == spec.parameter_count()
    return ParamCircuit(spec.n_orbitals, tuple(gates), param, tuple(blocks))


def build_hea(spec: HeaSpec) -> ParamCircuit:
    """Hardware-efficient ansatz: P repetitions of per-qubit RotZ RotX RotZ
    rotations (three fresh parameters per qubit per repetition) followed by
    the cyclic CNOT chain (0,1), (1,2), ..., (n-2,n-1), (n-1,0)."""
    n = spec.n_qubits
    gates: list[Gate] = []
    blocks: list[tuple[int, int]] = []
    param = 0
    for _ in range(spec.n_blocks):
        for axis_pos, axis in enumerate(("Z", "X", "Z")):
            start = len(gates)
            for q in range(n):
                gates.append(rot_param(axis, q, param + 3 * q + axis_pos))
            blocks.append((start, len(gates)))
        param += 3 * n
        start = len(gates)
        gates.extend(cnot(q, q + 1) for q in range(n - 1))
        gates.append(cnot(n - 1, 0))
        blocks.append((start, len(gates)))
    assert param == spec.parameter_count()
    return ParamCircuit(n, tuple(gates), param, tuple(blocks))


def count_gates(circuit: ParamCircuit) -> tuple[int, int]:
    """Exact (single-qubit, two-qubit) gate tallies by arity."""
    n_two = sum(1 for g in circuit.gates if g.is_two_qubit())
    return len(circuit.gates) - n_two, n_two


def dump_circuit(circuit: ParamCircuit) -> str:
    """Line-oriented text dump: ``GATE qubit(s) [param_index multiplier]``.

    Used by golden-file tests; one gate per line, blocks not marked.
    """
    lines = []
    for gate in circuit.gates:
        if gate.kind == "h":
            lines.append(f"H {gate.qubits[0]}")
        elif gate.kind == "x":
            lines.append(f"X {gate.qubits[0]}")
        elif gate.kind == "cnot":
            lines.append(f"CNOT {gate.qubits[0]} {gate.qubits[1]}")
        elif gate.kind == "rx_fixed":
            lines.append(f"RXF {gate.qubits[0]} {gate.angle!r}")
        elif gate.kind == "rz_param":
            lines.append(f"RZP {gate.qubits[0]} {gate.param_index} {gate.multiplier!r}")
        elif gate.kind == "rot_param":
            lines.append(
                f"R{gate.axis}P {gate.qubits[0]} {gate.param_index} {gate.multiplier!r}"
            )
        else:  # pragma: no cover - exhaustive over gate kinds
            raise CircuitError(f"unknown gate kind {gate.kind!r}")
    return "\n".join(lines) + "\n"
