"""Wall-clock cost models: quantum execution, classical simulation, crossover.

The quantum total decomposes as

    t_total = t_sample * N_sample * N_gradient * N_iterate

with ``t_sample`` the per-shot circuit time (layer depths times per-layer gate
times), ``N_sample`` the shots per cost evaluation, ``N_gradient`` the cost
evaluations per gradient, and ``N_iterate`` the optimization steps.

Two ``N_gradient`` conventions are supported.  The shift-rule and central
finite-difference gradients use two cost evaluations per parameter, so the
default is ``2L``; the closed-form time expressions correspond to one
evaluation per parameter (``L``), re-enabled with the paper convention flag.

The classical-simulation model charges ``t_10 * 2^(n-10)`` seconds per gate,
needs no sampling (``N_sample = 1``), and pays the same gradient and
iteration counts as the quantum run; adjoint-style classical gradient
shortcuts are deliberately out of scope.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, comb

from .circuits import HeaSpec, UccsdSpec
from .depth import hea_depth_formula, uccsd_constructed_depths, uccsd_depth_formula
from .pauli import double_excitation_locality, single_excitation_locality

SECONDS_PER_YEAR = 3.1536e7  # 365 days

CONVENTIONS = ("two_point", "paper")
DEPTH_VARIANTS = ("printed", "reconstructed", "constructed")


@dataclass(frozen=True)
class HardwareParams:
    """Per-layer gate times; init/readout recorded but excluded by default."""

    t_single: float = 30e-9
    t_double: float = 60e-9
    t_init_read: float = 1e-6
    include_init_read: bool = False

    def __post_init__(self) -> None:
        if self.t_single < 0 or self.t_double < 0 or self.t_init_read < 0:
            raise ValueError("gate times must be non-negative")


@dataclass(frozen=True)
class ClassicalSimParams:
    """Per-gate simulation time doubling with every qubit beyond ten."""

    t_10: float = 1e-3

    def gate_time(self, n_qubits: int) -> float:
        return self.t_10 * 2.0 ** (n_qubits - 10)


@dataclass(frozen=True)
class CostBreakdown:
    t_sample: float
    n_sample: int
    n_gradient: int
    n_iterate: int

    @property
    def n_si(self) -> int:
        return self.n_sample * self.n_iterate

    @property
    def t_total(self) -> float:
        return self.t_sample * self.n_sample * self.n_gradient * self.n_iterate


def n_gradient(n_params: int, convention: str = "two_point") -> int:
    """Cost evaluations needed per gradient: 2L by default (two evaluations
    per shift-rule/finite-difference element), L under the paper convention."""
    if n_params < 1:
        raise ValueError(f"need at least one parameter, got {n_params}")
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}; expected {CONVENTIONS}")
    return 2 * n_params if convention == "two_point" else n_params


def t_gate_time(depths: tuple[int, int], hw: HardwareParams) -> float:
    """Circuit running time: l_single * t_single + l_double * t_double."""
    l_single, l_double = depths
    return l_single * hw.t_single + l_double * hw.t_double


def t_sample_time(depths: tuple[int, int], hw: HardwareParams) -> float:
    t = t_gate_time(depths, hw)
    if hw.include_init_read:
        t += hw.t_init_read
    return t


def n_sample_for_accuracy(epsilon: float) -> int:
    """ceil(1 / epsilon^2) shots for sampling error epsilon (constant 1)."""
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    return ceil(1.0 / epsilon**2)


def t_vqa(depths: tuple[int, int], n_params: int, n_si: float,
          hw: HardwareParams = HardwareParams(),
          convention: str = "two_point") -> float:
    """Quantum wall-clock total from components:
    t_sample * N_si * N_gradient."""
    return t_sample_time(depths, hw) * n_si * n_gradient(n_params, convention)


def cost_breakdown(depths: tuple[int, int], n_params: int, n_sample: int,
                   n_iterate: int, hw: HardwareParams = HardwareParams(),
                   convention: str = "two_point") -> CostBreakdown:
    return CostBreakdown(
        t_sample=t_sample_time(depths, hw),
        n_sample=n_sample,
        n_gradient=n_gradient(n_params, convention),
        n_iterate=n_iterate,
    )


def uccsd_depths(spec: UccsdSpec, variant: str = "printed") -> tuple[int, int]:
    """Depths under any of the three accountings (see depth module)."""
    if variant == "constructed":
        return uccsd_constructed_depths(spec)
    return uccsd_depth_formula(spec, variant)


def t_vqa_uccsd_closed(spec: UccsdSpec, n_si: float, variant: str = "printed") -> float:
    """Closed-form UCCSD total (one cost evaluation per parameter).

    ``printed`` evaluates the closed form verbatim, with the (16 n_o + 88)
    double-excitation coefficient; ``reconstructed`` uses (32 n_o + 88), the
    value implied by composing the printed depth formulas with the component
    expression, and is algebraically identical to ``t_vqa`` at printed depths
    under the paper convention.
    """
    if variant not in ("printed", "reconstructed"):
        raise ValueError(f"unknown closed-form variant {variant!r}")
    ne, nv = spec.n_electrons, spec.n_virtual
    c1c1 = comb(ne, 1) * comb(nv, 1)
    c2c2 = comb(ne, 2) * comb(nv, 2)
    double_coeff = (16 if variant == "printed" else 32) * spec.n_orbitals + 88
    core = (c1c1 + c2c2) * ((12 * spec.n_orbitals + 18) * c1c1 + double_coeff * c2c2)
    return 1e-8 * n_si * core


def t_vqa_hea_closed(spec: HeaSpec, n_si: float) -> float:
    """Closed-form HEA total: 9e-8 * N_si * (2 n^2 + 3 n) P^2."""
    n, p = spec.n_qubits, spec.n_blocks
    return 9e-8 * n_si * (2 * n * n + 3 * n) * p * p


def uccsd_gate_counts(spec: UccsdSpec) -> tuple[int, int]:
    """(single-qubit, two-qubit) gate totals of the built UCCSD circuit,
    by tuple enumeration (reference-state X gates included).

    Per k-local excitation string: 2m + 1 single-qubit gates for m non-Z
    factors (m = 2 for singles, 4 for doubles) and 2(k - 1) CNOTs.
    """
    n_single = spec.n_electrons
    n_two = 0
    for i, alpha in spec.single_excitations():
        k = single_excitation_locality(i, alpha)
        n_single += 2 * 5
        n_two += 2 * 2 * (k - 1)
    for i, j, alpha, beta in spec.double_excitations():
        k = double_excitation_locality(i, j, alpha, beta)
        n_single += 8 * 9
        n_two += 8 * 2 * (k - 1)
    return n_single, n_two


def hea_gate_counts(spec: HeaSpec) -> tuple[int, int]:
    """(3nP rotations, nP CNOTs)."""
    n, p = spec.n_qubits, spec.n_blocks
    return 3 * n * p, n * p


def t_classical(n_qubits: int, gate_count_total: int, n_params: int,
                n_iterate: int, params: ClassicalSimParams = ClassicalSimParams(),
                convention: str = "two_point") -> float:
    """Classical statevector-simulation total: per-gate time times the gate
    count, times the same N_gradient and N_iterate as the quantum run, with
    N_sample = 1 (expectations are exact classically)."""
    if n_qubits < 1:
        raise ValueError(f"need at least one qubit, got {n_qubits}")
    return (
        params.gate_time(n_qubits)
        * gate_count_total
        * n_gradient(n_params, convention)
        * n_iterate
    )


@dataclass(frozen=True)
class CrossoverPoint:
    n_qubits: int
    t_quantum: float
    t_classical: float


@dataclass(frozen=True)
class CrossoverReport:
    status: str  # "found" | "none_in_range"
    n_cross: int | None
    t_cross: float | None  # quantum-curve value at the crossing, seconds
    scan: tuple[CrossoverPoint, ...]

    @property
    def t_cross_years(self) -> float | None:
        return None if self.t_cross is None else self.t_cross / SECONDS_PER_YEAR


def _resolve_p(p_rule: str, n: int, fixed_p: int | None) -> int:
    if p_rule == "n":
        return n
    if p_rule == "n_squared":
        return n * n
    if p_rule == "fixed":
        if fixed_p is None or fixed_p < 1:
            raise ValueError("fixed P rule needs a positive block count")
        return fixed_p
    raise ValueError(f"unknown P rule {p_rule!r}")


def point_times(ansatz: str, n: int, n_sample: int, n_iterate: int,
                p_rule: str = "n", fixed_p: int | None = None,
                depth_variant: str = "printed",
                convention: str = "two_point",
                hw: HardwareParams = HardwareParams(),
                classical: ClassicalSimParams = ClassicalSimParams()) -> tuple[float, float, dict]:
    """Quantum and classical totals for one grid point, plus row metadata."""
    if depth_variant not in DEPTH_VARIANTS:
        raise ValueError(f"unknown depth variant {depth_variant!r}")
    n_si = n_sample * n_iterate
    if ansatz == "uccsd":
        if n % 2 != 0:
            raise ValueError(f"UCCSD sweep uses n_e = n/2; qubit count {n} is odd")
        spec = UccsdSpec(n, n // 2)
        depths = uccsd_depths(spec, depth_variant)
        n_params = spec.parameter_count()
        gates = uccsd_gate_counts(spec)
        meta = {"n_e": spec.n_electrons, "P": ""}
    elif ansatz == "hea":
        p = _resolve_p(p_rule, n, fixed_p)
        spec = HeaSpec(n, p)
        depths = hea_depth_formula(spec)
        n_params = spec.parameter_count()
        gates = hea_gate_counts(spec)
        meta = {"n_e": "", "P": p}
    else:
        raise ValueError(f"unknown ansatz {ansatz!r}")
    tq = t_vqa(depths, n_params, n_si, hw, convention)
    tc = t_classical(n, gates[0] + gates[1], n_params, n_iterate, classical, convention)
    return tq, tc, meta


def find_crossover(ansatz: str, n_sample: int, n_iterate: int,
                   n_range: tuple[int, int],
                   p_rule: str = "n", fixed_p: int | None = None,
                   depth_variant: str = "printed",
                   convention: str = "two_point",
                   hw: HardwareParams = HardwareParams(),
                   classical: ClassicalSimParams = ClassicalSimParams()) -> CrossoverReport:
    """Scan integer qubit counts (even only for UCCSD) and report the first n
    where the quantum total drops strictly below the classical total."""
    lo, hi = n_range
    if lo > hi:
        raise ValueError(f"empty qubit range {n_range}")
    step = 2 if ansatz == "uccsd" else 1
    if ansatz == "uccsd" and lo % 2 != 0:
        lo += 1
    scan = []
    found = None
    for n in range(lo, hi + 1, step):
        tq, tc, _ = point_times(ansatz, n, n_sample, n_iterate, p_rule, fixed_p,
                                depth_variant, convention, hw, classical)
        scan.append(CrossoverPoint(n, tq, tc))
        if found is None and tq < tc:
            found = (n, tq)
    if found is None:
        return CrossoverReport("none_in_range", None, None, tuple(scan))
    return CrossoverReport("found", found[0], found[1], tuple(scan))


def format_duration(seconds: float) -> str:
    """Human-readable rendering alongside raw seconds."""
    if seconds >= SECONDS_PER_YEAR:
        return f"{seconds / SECONDS_PER_YEAR:.3g} years"
    if seconds >= 86400.0:
        return f"{seconds / 86400.0:.3g} days"
    if seconds >= 3600.0:
        return f"{seconds / 3600.0:.3g} hours"
    return f"{seconds:.3g} s"
