"""Numerical laboratory for the quasi-classical limit of particle-field dynamics.

Two sides of the same limit are implemented and compared at desk scale:

* a microscopic side: a regularized particle-field Hamiltonian on a truncated
  symmetric Fock space carrying an epsilon-scaled representation of the
  canonical commutation relations, evolved unitarily;
* an effective side: hybrid quantum/classical dynamics on state-valued
  measures (weighted ensembles of classical field points, each carrying a
  particle density matrix), evolved by field-configuration-dependent
  Schroedinger propagators.

The harness sweeps epsilon downward and measures the distance between the
noncommutative Fourier transform of the microscopic state and the Fourier
transform of the effective measure.
"""

from qclimit.fock import (
    FockSpec,
    FockBasis,
    SparseComplexOperator,
    build_basis,
    annihilator,
    creator,
    second_quantize,
    field_operator,
    weyl_operator,
    coherent_state,
    partial_trace_field,
)
from qclimit.symbols import (
    FormFactor,
    SymbolSpec,
    SimpleSymbol,
    evaluate_symbol,
    simple_approximate,
    wick_quantize,
)
from qclimit.models import (
    ParticleGrid,
    ModelConfig,
    build_K0,
    build_nelson_hamiltonian,
    effective_potential,
    classical_field_flow,
)
from qclimit.measures import StateValuedMeasure, MeasureSample
from qclimit.qc_dynamics import (
    PropagatorConfig,
    propagate_sample,
    evolve_measure,
    interaction_picture_measure,
    transport_residual,
)
from qclimit.micro_dynamics import (
    HybridState,
    propagate_micro,
    nc_fourier_transform,
    number_moment,
    check_prop12,
    duhamel_residual,
    check_PIK,
)

__all__ = [
    "FockSpec",
    "FockBasis",
    "SparseComplexOperator",
    "build_basis",
    "annihilator",
    "creator",
    "second_quantize",
    "field_operator",
    "weyl_operator",
    "coherent_state",
    "partial_trace_field",
    "FormFactor",
    "SymbolSpec",
    "SimpleSymbol",
    "evaluate_symbol",
    "simple_approximate",
    "wick_quantize",
    "ParticleGrid",
    "ModelConfig",
    "build_K0",
    "build_nelson_hamiltonian",
    "effective_potential",
    "classical_field_flow",
    "StateValuedMeasure",
    "MeasureSample",
    "PropagatorConfig",
    "propagate_sample",
    "evolve_measure",
    "interaction_picture_measure",
    "transport_residual",
    "HybridState",
    "propagate_micro",
    "nc_fourier_transform",
    "number_moment",
    "check_prop12",
    "duhamel_residual",
    "check_PIK",
]

__version__ = "0.1.0"
