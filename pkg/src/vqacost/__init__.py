"""Variational-circuit construction, depth counting, and wall-clock costing.

The package builds Trotterized UCCSD and hardware-efficient ansatz circuits
from first principles, counts their gate-layer depths, models quantum and
classical-simulation wall-clock totals (including the quantum/classical
crossover), and runs desk-scale VQE training with exact or shot-sampled
gradients.
"""

from .circuits import (
    CircuitError,
    Gate,
    HeaSpec,
    ParamCircuit,
    UccsdSpec,
    build_hea,
    build_uccsd,
    count_gates,
    dump_circuit,
    exp_pauli_circuit,
)
from .cost import (
    ClassicalSimParams,
    CostBreakdown,
    CrossoverReport,
    HardwareParams,
    SECONDS_PER_YEAR,
    find_crossover,
    n_gradient,
    n_sample_for_accuracy,
    t_classical,
    t_gate_time,
    t_vqa,
    t_vqa_hea_closed,
    t_vqa_uccsd_closed,
)
from .depth import (
    DepthReport,
    hea_depth_formula,
    layer_depths,
    uccsd_constructed_depths,
    uccsd_depth_formula,
    verify_depths,
)
from .engine import (
    CostEvaluator,
    GradientConventionError,
    StateSizeError,
    StateVector,
    TrainConfig,
    apply_circuit,
    expectation,
    grad_finite_difference,
    grad_parameter_shift,
    gradient,
    gradient_rank_probe,
    sample_expectation,
    train,
    trig_monomial_check,
)
from .hamiltonians import (
    HamiltonianFormatError,
    format_hamiltonian,
    load_hamiltonian,
    parse_hamiltonian,
    transverse_field_ising,
)
from .pauli import PauliString, PauliSum, jw_ladder, pauli_mul
from .pauli import double_excitation_strings, single_excitation_strings

__version__ = "0.1.0"
