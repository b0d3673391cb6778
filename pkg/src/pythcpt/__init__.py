"""pythcpt: Pythagorean-triple couplings and complete population
transfer between maximally entangled states in multi-level systems.

The package builds coupled two-factor Hamiltonians whose detunings and
Rabi frequencies come from Pythagorean triples, constructs the
symmetric orthogonal entangled frames that turn them into sparse
lab-frame systems, and certifies the resulting complete population
transfers numerically, including the doubled-space (retrograde)
generalizations.
"""

from .linalg import (
    complete_orthogonal,
    kron,
    matexp_unitary,
    unvectorize,
    vectorize,
)
from .su2 import SigmaSet, SpinRep, sigma_set, spin_generators, y_matrix
from .triples import (
    CouplingParams,
    OddPair,
    PythTriple,
    coupling_params,
    enumerate_primitive_pairs,
    lab_couplings,
    params_from_pair,
    triple_from_pair,
)
from .frames import (
    EntangledFrame,
    FrameValidation,
    SearchOutcome,
    build_w,
    entanglement_entropy,
    general_even_frame,
    label_to_column,
    search_w,
    validate_frame,
)
from .dynamics import (
    CouplingGraph,
    CptCertificate,
    ForbiddenScanReport,
    SimulationResult,
    SystemSpec,
    build_h_single,
    build_h_tp,
    coupling_graph,
    forbidden_scan,
    propagator,
    propagator_tp,
    simulate,
    simulate_lab,
    to_lab,
    verify_cpt,
)
from .retrograde import (
    BasicCptRecord,
    BasicCptReport,
    EquivalenceReport,
    OddDimReport,
    PulseSchedule,
    RecipeResult,
    RetrogradeSystem,
    TimeIndependentReport,
    basic_cpts,
    check_equivalence,
    general_recipe,
    odd_dim_demo,
    ordered_propagator,
    pythagorean_pulse,
    retrograde_hamiltonian,
    semi_retrograde_hamiltonian,
    time_independent_conditions,
)
from .suite import CheckResult, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BasicCptRecord",
    "BasicCptReport",
    "CheckResult",
    "CouplingGraph",
    "CouplingParams",
    "CptCertificate",
    "EntangledFrame",
    "EquivalenceReport",
    "ForbiddenScanReport",
    "FrameValidation",
    "OddDimReport",
    "OddPair",
    "PulseSchedule",
    "PythTriple",
    "RecipeResult",
    "RetrogradeSystem",
    "SearchOutcome",
    "SigmaSet",
    "SimulationResult",
    "SpinRep",
    "SuiteReport",
    "SystemSpec",
    "TimeIndependentReport",
    "basic_cpts",
    "build_h_single",
    "build_h_tp",
    "build_w",
    "check_equivalence",
    "complete_orthogonal",
    "coupling_graph",
    "coupling_params",
    "enumerate_primitive_pairs",
    "entanglement_entropy",
    "forbidden_scan",
    "general_even_frame",
    "general_recipe",
    "kron",
    "lab_couplings",
    "label_to_column",
    "matexp_unitary",
    "odd_dim_demo",
    "ordered_propagator",
    "params_from_pair",
    "propagator",
    "propagator_tp",
    "pythagorean_pulse",
    "retrograde_hamiltonian",
    "run_suite",
    "search_w",
    "semi_retrograde_hamiltonian",
    "sigma_set",
    "simulate",
    "simulate_lab",
    "spin_generators",
    "to_lab",
    "triple_from_pair",
    "unvectorize",
    "validate_frame",
    "vectorize",
    "verify_cpt",
    "y_matrix",
]
