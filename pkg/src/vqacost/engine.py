"""Desk-scale statevector simulation, gradients, training, and rank probes.

Basis convention: qubit 0 is the most significant bit of the flat state
index, so for n = 4 the computational state |1100> sits at index 12.

Parameterized gates are rotations ``exp(-i (multiplier * theta) A / 2)``.
A parameter that feeds exactly one gate therefore enters the cost function
as ``A cos(w theta) + B sin(w theta) + D`` with frequency ``w = |multiplier|``,
and the shift rule

    dC/dtheta = (w / 2) * [C(theta + pi/(2w)) - C(theta - pi/(2w))]

is exact.  The two named conventions fall out as special cases:

* exp-Pauli blocks carry ``|multiplier| = 2`` (RotZ(2 theta) implements
  ``exp(-i theta P)``), giving the quarter-shift unit-prefactor rule
  ``C(theta + pi/4) - C(theta - pi/4)``;
* plain rotation gates carry ``|multiplier| = 1``, giving the half-angle rule
  ``(1/2) [C(theta + pi/2) - C(theta - pi/2)]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import cos, pi, sin, sqrt

import numpy as np

from .circuits import Gate, ParamCircuit
from .pauli import PauliString, PauliSum

MAX_QUBITS = 20

_H = np.array([[1, 1], [1, -1]], dtype=complex) / sqrt(2.0)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_AXIS_MATRIX = {"X": _X, "Y": _Y, "Z": _Z}


class StateSizeError(ValueError):
    """Raised when a statevector beyond the desk-scale limit is requested."""


class GradientConventionError(ValueError):
    """Raised when a parameter does not admit an exact shift rule."""


@dataclass
class StateVector:
    """Complex amplitudes over n qubits; L2 norm 1 within 1e-10 after gates."""

    n_qubits: int
    amplitudes: np.ndarray

    @classmethod
    def zero_state(cls, n_qubits: int) -> "StateVector":
        if n_qubits > MAX_QUBITS:
            raise StateSizeError(
                f"{n_qubits} qubits exceeds the {MAX_QUBITS}-qubit statevector limit"
            )
        if n_qubits < 1:
            raise ValueError("need at least one qubit")
        amp = np.zeros(2**n_qubits, dtype=complex)
        amp[0] = 1.0
        return cls(n_qubits, amp)

    def copy(self) -> "StateVector":
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _rotation(axis: str, angle: float) -> np.ndarray:
    c, s = cos(angle / 2.0), sin(angle / 2.0)
    if axis == "Z":
        return np.array([[c - 1j * s, 0], [0, c + 1j * s]], dtype=complex)
    if axis == "X":
        return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    raise ValueError(f"unsupported rotation axis {axis!r}")


def _apply_single(amp: np.ndarray, n: int, q: int, matrix: np.ndarray) -> np.ndarray:
    tensor = amp.reshape((2,) * n)
    tensor = np.tensordot(matrix, tensor, axes=([1], [q]))
    return np.moveaxis(tensor, 0, q).reshape(-1)

def _apply_cnot(amp: np.ndarray, n: int, control: int, target: int) -> np.ndarray:
    tensor = amp.reshape((2,) * n)
    view = np.moveaxis(tensor, (control, target), (0, 1))
    view[1] = view[1, ::-1]
    return amp


def _gate_matrix(gate: Gate, theta: np.ndarray) -> np.ndarray:
    if gate.kind == "h":
        return _H
    if gate.kind == "x":
        return _X
    if gate.kind == "rx_fixed":
        # Basis-change convention: rx_fixed(a) applies exp(+i a X / 2).
        return _rotation("X", -gate.angle)
    if gate.kind == "rz_param":
        return _rotation("Z", gate.multiplier * theta[gate.param_index])
    if gate.kind == "rot_param":
        return _rotation(gate.axis, gate.multiplier * theta[gate.param_index])
    raise ValueError(f"unknown gate kind {gate.kind!r}")


def apply_circuit(circuit: ParamCircuit, theta: np.ndarray | list[float],
                  state: StateVector | None = None) -> StateVector:
    """Apply the circuit at parameter vector ``theta`` to ``state`` (default
    |0...0>), returning a new StateVector.  Norm is preserved."""
    theta = np.asarray(theta, dtype=float)
    if theta.shape != (circuit.n_params,):
        raise ValueError(
            f"theta has shape {theta.shape}, circuit expects ({circuit.n_params},)"
        )
    if state is None:
        state = StateVector.zero_state(circuit.n_qubits)
    elif state.n_qubits != circuit.n_qubits:
        raise ValueError(
            f"state has {state.n_qubits} qubits, circuit has {circuit.n_qubits}"
        )
    amp = state.amplitudes.copy()
    n = circuit.n_qubits
    for gate in circuit.gates:
        if gate.kind == "cnot":
            amp = _apply_cnot(amp, n, gate.qubits[0], gate.qubits[1])
        else:
            amp = _apply_single(amp, n, gate.qubits[0], _gate_matrix(gate, theta))
    return StateVector(n, amp)


def apply_inverse_circuit(circuit: ParamCircuit, theta: np.ndarray | list[float],
                          state: StateVector) -> StateVector:
    """Apply the inverse circuit (gates reversed, each inverted)."""
    theta = np.asarray(theta, dtype=float)
    amp = state.amplitudes.copy()
    n = circuit.n_qubits
    for gate in reversed(circuit.gates):
        if gate.kind == "cnot":
            amp = _apply_cnot(amp, n, gate.qubits[0], gate.qubits[1])
        else:
            amp = _apply_single(amp, n, gate.qubits[0],
                                _gate_matrix(gate, theta).conj().T)
    return StateVector(n, amp)


def _apply_pauli_string(state: StateVector, string: PauliString) -> np.ndarray:
    amp = state.amplitudes.copy()
    for qubit, axis in string.factors:
        amp = _apply_single(amp, state.n_qubits, qubit, _AXIS_MATRIX[axis])
    return amp


def expectation(state: StateVector, hamiltonian: PauliSum) -> float:
    """Exact expectation value of a Hermitian PauliSum.

    Raises ValueError for non-Hermitian input; the (tiny) imaginary part of
    the computed value is asserted small and discarded.
    """
    if not hamiltonian.is_hermitian():
        raise ValueError("expectation requires a Hermitian operator")
    value = 0.0 + 0.0j
    for term in hamiltonian:
        value += term.coefficient * np.vdot(state.amplitudes,
                                            _apply_pauli_string(state, term))
    if abs(value.imag) > 1e-10:
        raise AssertionError(f"expectation has imaginary part {value.imag}")
    return float(value.real)


def term_expectations(state: StateVector, hamiltonian: PauliSum) -> list[float]:
    """Per-term expectation of the unit-coefficient string of each term."""
    out = []
    for term in hamiltonian:
        v = np.vdot(state.amplitudes, _apply_pauli_string(state, term))
        out.append(float(v.real))
    return out


def sample_expectation(state: StateVector, hamiltonian: PauliSum, shots: int,
                       rng: np.random.Generator) -> float:
    """Shot-sampled expectation: each Pauli term with exact expectation v is
    measured independently ``shots`` times via Binomial(shots, (1+v)/2) and
    estimated as ``2k/shots - 1``.  Unbiased; per-term std <= 1/sqrt(shots).
    """
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    if not hamiltonian.is_hermitian():
        raise ValueError("sample_expectation requires a Hermitian operator")
    total = 0.0
    for term, v in zip(hamiltonian, term_expectations(state, hamiltonian)):
        p = min(1.0, max(0.0, (1.0 + v) / 2.0))
        k = rng.binomial(shots, p)
        total += term.coefficient.real * (2.0 * k / shots - 1.0)
    return total


class CostEvaluator:
    """Cost-function evaluations C(theta) = <psi(theta)|H|psi(theta)>, with a
    counter so gradient evaluation budgets can be asserted."""

    def __init__(self, circuit: ParamCircuit, hamiltonian: PauliSum,
                 shots: int = 0, rng: np.random.Generator | None = None,
                 initial_state: StateVector | None = None):
        if not hamiltonian.is_hermitian():
            raise ValueError("cost function requires a Hermitian operator")
        if shots > 0 and rng is None:
            raise ValueError("shot-sampled evaluation needs an rng")
        self.circuit = circuit
        self.hamiltonian = hamiltonian
        self.shots = shots
        self.rng = rng
        self.initial_state = initial_state
        self.evaluations = 0

    def __call__(self, theta: np.ndarray) -> float:
        self.evaluations += 1
        state = apply_circuit(self.circuit, theta, self.initial_state)
        if self.shots > 0:
            return sample_expectation(state, self.hamiltonian, self.shots, self.rng)
        return expectation(state, self.hamiltonian)


def shift_rule_frequency(circuit: ParamCircuit, j: int) -> float:
    """Validate that parameter ``j`` admits an exact two-point shift rule and
    return its frequency w = |multiplier| of the single gate using it."""
    gates = [g for g in circuit.gates if g.param_index == j]
    if len(gates) != 1:
        raise GradientConventionError(
            f"parameter {j} feeds {len(gates)} gates; the two-point shift rule "
            "is exact only for single-use parameters"
        )
    gate = gates[0]
    if gate.kind not in ("rz_param", "rot_param"):
        raise GradientConventionError(
            f"parameter {j} feeds a {gate.kind} gate, not a Pauli-exponential rotation"
        )
    w = abs(gate.multiplier)
    if w == 0.0:
        raise GradientConventionError(f"parameter {j} has zero angle multiplier")
    return w


def grad_parameter_shift(cost: CostEvaluator, theta: np.ndarray, j: int) -> float:
    """Exact partial derivative via two shifted cost evaluations.

    For exp-Pauli blocks (frequency 2) this is the quarter-shift rule
    ``C(theta + pi/4) - C(theta - pi/4)``; for plain rotations (frequency 1)
    it is the half-angle rule with prefactor 1/2.
    """
    w = shift_rule_frequency(cost.circuit, j)
    shift = pi / (2.0 * w)
    plus = np.array(theta, dtype=float)
    minus = np.array(theta, dtype=float)
    plus[j] += shift
    minus[j] -= shift
    return (w / 2.0) * (cost(plus) - cost(minus))


def grad_finite_difference(cost: CostEvaluator, theta: np.ndarray, j: int,
                           delta: float) -> float:
    """Central finite difference ``[C(theta_j + d) - C(theta_j - d)] / 2d``."""
    if delta <= 0:
        raise ValueError(f"delta must be positive, got {delta}")
    plus = np.array(theta, dtype=float)
    minus = np.array(theta, dtype=float)
    plus[j] += delta
    minus[j] -= delta
    return (cost(plus) - cost(minus)) / (2.0 * delta)


@dataclass
class GradientRecord:
    values: np.ndarray
    method: str
    evaluations_used: int


def gradient(cost: CostEvaluator, theta: np.ndarray, method: str = "parameter_shift",
             delta: float = 1e-5) -> GradientRecord:
    """Full gradient by either method; both use exactly 2L cost evaluations."""
    theta = np.asarray(theta, dtype=float)
    before = cost.evaluations
    values = np.empty(cost.circuit.n_params)
    for j in range(cost.circuit.n_params):
        if method == "parameter_shift":
            values[j] = grad_parameter_shift(cost, theta, j)
        elif method == "finite_difference":
            values[j] = grad_finite_difference(cost, theta, j, delta)
        else:
            raise ValueError(f"unknown gradient method {method!r}")
    used = cost.evaluations - before
    assert used == 2 * cost.circuit.n_params
    return GradientRecord(values, method, used)


@dataclass
class TrainConfig:
    """Plain gradient-descent configuration.

    ``shots = 0`` means exact expectations; otherwise each cost evaluation
    samples every Pauli term ``shots`` times.  All randomness flows from
    ``rng_seed``, so runs are deterministic.
    """

    learning_rate: float = 0.1
    max_iterations: int = 200
    delta: float = 1e-5
    shots: int = 0
    rng_seed: int = 0
    tolerance: float = 0.0
    method: str = "parameter_shift"

    def __post_init__(self) -> None:
        if self.learning_rate <= 0:
            raise ValueError("learning rate must be positive")
        if self.delta <= 0:
            raise ValueError("finite-difference step must be positive")


@dataclass
class TrainResult:
    theta: np.ndarray
    trace: list[tuple[int, float, float]] = field(default_factory=list)

    @property
    def final_cost(self) -> float:
        return self.trace[-1][1]


def train(circuit: ParamCircuit, hamiltonian: PauliSum, config: TrainConfig,
          theta0: np.ndarray | None = None,
          initial_state: StateVector | None = None) -> TrainResult:
    """Gradient descent ``theta <- theta - eta * grad C`` until
    ``max_iterations`` or ``|delta C| < tolerance``.

    Returns the full (iteration, cost, grad norm) trace; iteration 0 records
    the starting point with the norm of the first gradient.
    """
    rng = np.random.default_rng(config.rng_seed)
    if theta0 is None:
        theta = rng.uniform(0.0, 2.0 * pi, size=circuit.n_params)
    else:
        theta = np.array(theta0, dtype=float)
    cost = CostEvaluator(circuit, hamiltonian, config.shots, rng, initial_state)
    trace: list[tuple[int, float, float]] = []
    current = cost(theta)
    for iteration in range(config.max_iterations):
        record = gradient(cost, theta, config.method, config.delta)
        grad_norm = float(np.linalg.norm(record.values))
        trace.append((iteration, current, grad_norm))
        theta = theta - config.learning_rate * record.values
        new_cost = cost(theta)
        if abs(new_cost - current) < config.tolerance:
            current = new_cost
            trace.append((iteration + 1, current, grad_norm))
            break
        current = new_cost
    else:
        trace.append((config.max_iterations, current, trace[-1][2] if trace else 0.0))
    return TrainResult(theta, trace)


@dataclass
class RankProbeResult:
    rank: int
    singular_values: np.ndarray
    n_params: int


def gradient_rank_probe(circuit: ParamCircuit, hamiltonian: PauliSum, k_samples: int,
                        rng: np.random.Generator, rel_threshold: float = 1e-8,
                        abs_threshold: float = 1e-10) -> RankProbeResult:
    """Numerical rank of the K x L matrix of exact gradients at K random
    parameter draws (uniform over [0, 2pi)^L).

    A singular value counts toward the rank when it exceeds both
    ``rel_threshold * sigma_max`` and ``abs_threshold`` (the absolute floor
    keeps identically-zero gradients from registering as rank through float
    noise).
    """
    if k_samples < circuit.n_params:
        raise ValueError(f"need k_samples >= L = {circuit.n_params}, got {k_samples}")
    cost = CostEvaluator(circuit, hamiltonian)
    rows = []
    for _ in range(k_samples):
        theta = rng.uniform(0.0, 2.0 * pi, size=circuit.n_params)
        rows.append(gradient(cost, theta).values)
    matrix = np.array(rows)
    sigma = np.linalg.svd(matrix, compute_uv=False)
    cut = max(rel_threshold * (sigma[0] if len(sigma) else 0.0), abs_threshold)
    rank = int(np.sum(sigma > cut))
    return RankProbeResult(rank, sigma, circuit.n_params)


@dataclass
class MonomialFit:
    """Per-parameter sinusoid coefficients and the global monomial residual."""

    per_param: list[tuple[float, float, float, float]]  # (A, B, D, residual)
    grid_residual: float


def _require_exp_pauli_form(circuit: ParamCircuit) -> None:
    for j in range(circuit.n_params):
        w = shift_rule_frequency(circuit, j)
        if abs(w - 2.0) > 1e-12:
            raise GradientConventionError(
                f"parameter {j} has frequency {w}; the monomial expansion "
                "applies to exp(-i theta P) blocks (frequency 2)"
            )


def trig_monomial_check(circuit: ParamCircuit, hamiltonian: PauliSum,
                        rng: np.random.Generator, grid: int = 16) -> MonomialFit:
    """Verify the trigonometric-monomial structure of the cost function.

    Every parameterized gate must be an exp(-i theta P) block.  Restricted to
    one parameter (others frozen at a random draw), the cost must fit
    ``A cos 2t + B sin 2t + D``; jointly, the cost on an L-dim grid must be
    reproduced by the 4^L products of {cos^2, cos sin, sin cos, sin^2} per
    parameter.  Returns the fits; callers assert the residual bounds.
    """
    _require_exp_pauli_form(circuit)
    L = circuit.n_params
    if L > 3:
        raise ValueError("monomial check is intended for L <= 3 circuits")
    cost = CostEvaluator(circuit, hamiltonian)
    base = rng.uniform(0.0, 2.0 * pi, size=L)
    ts = np.linspace(0.0, 2.0 * pi, grid, endpoint=False)

    per_param = []
    for j in range(L):
        values = []
        for t in ts:
            theta = base.copy()
            theta[j] = t
            values.append(cost(theta))
        design = np.column_stack([np.cos(2 * ts), np.sin(2 * ts), np.ones_like(ts)])
        coef, *_ = np.linalg.lstsq(design, np.array(values), rcond=None)
        residual = float(np.max(np.abs(design @ coef - values)))
        per_param.append((float(coef[0]), float(coef[1]), float(coef[2]), residual))

    axes = [ts] * L
    mesh = np.meshgrid(*axes, indexing="ij")
    points = np.stack([m.reshape(-1) for m in mesh], axis=1)
    values = np.array([cost(p) for p in points])
    columns = []
    for combo in range(4**L):
        col = np.ones(len(points))
        c = combo
        for axis in range(L):
            pick = c % 4
            c //= 4
            t = points[:, axis]
            if pick == 0:
                col = col * np.cos(t) ** 2
            elif pick in (1, 2):
                col = col * np.cos(t) * np.sin(t)
            else:
                col = col * np.sin(t) ** 2
        columns.append(col)
    design = np.column_stack(columns)
    coef, *_ = np.linalg.lstsq(design, values, rcond=None)
    grid_residual = float(np.max(np.abs(design @ coef - values)))
    return MonomialFit(per_param, grid_residual)


def random_pauli_rotation_circuit(n_qubits: int, n_params: int,
                                  rng: np.random.Generator,
                                  generic: bool = True) -> ParamCircuit:
    """Random chain of exp(-i theta_l P_l) blocks, one fresh parameter each.

    With ``generic`` the draw avoids the structurally degenerate patterns
    that make gradient components linearly dependent for every theta:

    * a Hadamard layer precedes the blocks, and no string places an X factor
      on a qubit no earlier block has touched (such factors act on the +1
      X-eigenstate, aliasing the block onto a smaller string);
    * no string repeats an earlier one (repeats with commuting interiors
      merge their parameters);
    * no X-product stabilizer of the scrambled start state commutes with
      every block string (a surviving stabilizer symmetry zeroes whole
      gradient components).

    Tiny systems can still harbor exact algebraic dependencies among few-qubit
    generators, so rank-L certifications should probe each instance.
    """
    from .circuits import exp_pauli_circuit, hadamard

    gates: list[Gate] = []
    blocks: list[tuple[int, int]] = []
    if generic:
        gates.extend(hadamard(q) for q in range(n_qubits))
    strings = _draw_generic_strings(n_qubits, n_params, rng) if generic else [
        _draw_string(n_qubits, rng) for _ in range(n_params)
    ]
    for l, factors in enumerate(strings):
        start = len(gates)
        gates.extend(exp_pauli_circuit(l, 1.0, PauliString(1.0, factors)))
        blocks.append((start, len(gates)))
    return ParamCircuit(n_qubits, tuple(gates), n_params, tuple(blocks))


def _draw_string(n_qubits: int, rng: np.random.Generator) -> tuple[tuple[int, str], ...]:
    k = int(rng.integers(1, min(n_qubits, 3) + 1))
    qubits = sorted(rng.choice(n_qubits, size=k, replace=False).tolist())
    axes = [str(a) for a in rng.choice(("X", "Y", "Z"), size=k)]
    return tuple(zip(qubits, axes))


def _surviving_x_stabilizer(n_qubits: int,
                            strings: list[tuple[tuple[int, str], ...]]) -> bool:
    """True when some non-trivial product of X's commutes with every string."""
    for mask in range(1, 2**n_qubits):
        if all(
            sum(1 for q, a in factors if (mask >> q) & 1 and a != "X") % 2 == 0
            for factors in strings
        ):
            return True
    return False


def _draw_generic_strings(n_qubits: int, n_params: int,
                          rng: np.random.Generator) -> list[tuple[tuple[int, str], ...]]:
    for _ in range(200):
        drawn: list[tuple[tuple[int, str], ...]] = []
        touched: set[int] = set()
        ok = True
        for _ in range(n_params):
            for _ in range(1000):
                factors = _draw_string(n_qubits, rng)
                if any(a == "X" and q not in touched for q, a in factors):
                    continue
                if factors in drawn:
                    continue
                break
            else:
                ok = False
                break
            drawn.append(factors)
            touched.update(q for q, _ in factors)
        if ok and not _surviving_x_stabilizer(n_qubits, drawn):
            return drawn
    raise ValueError(
        f"could not draw {n_params} generic strings on {n_qubits} qubits"
    )


def random_dense_hermitian_sum(n_qubits: int, n_extra_terms: int,
                               rng: np.random.Generator) -> PauliSum:
    """Random Hermitian PauliSum containing every single-qubit X/Y/Z term
    (so no Pauli string commutes with all of it) plus random k-local terms."""
    terms = [
        PauliString(float(rng.normal()), ((q, axis),))
        for q in range(n_qubits)
        for axis in ("X", "Y", "Z")
    ]
    for _ in range(n_extra_terms):
        k = int(rng.integers(2, n_qubits + 1))
        qubits = sorted(rng.choice(n_qubits, size=k, replace=False).tolist())
        axes = [str(a) for a in rng.choice(("X", "Y", "Z"), size=k)]
        terms.append(PauliString(float(rng.normal()), tuple(zip(qubits, axes))))
    return PauliSum(tuple(terms))
