"""Operator-algebra laboratory for dressed two-level boson models.

Everything heavy lives in the compiled extension ``dynalg._core``: truncated
ladder/spin operators, the oscillator and cavity model builders, dressing
transformations, the commutation-relation checker with defect reporting, and
the JSON/CSV report drivers behind the ``dynalg`` command-line tool.
"""

from ._core import (
    AngularLattice,
    Branch,
    CommutatorReport,
    CompositeSpace,
    DiracParams,
    DressedFamily,
    FockSpace,
    GeneratorSet,
    JCParams,
    LabeledBasis,
    Operator,
    RunConfig,
    Su11Sector,
    Su2Sector,
    analyze_residual,
    angular_momentum,
    angular_shift,
    block2,
    build_so4,
    commutator,
    composite_identity,
    diag_function,
    dirac_angle,
    dirac_dressing,
    dirac_energy,
    dirac_family,
    dirac_hamiltonian,
    dirac_hamiltonian_xp,
    dirac_labeled_basis,
    dirac_unitary,
    dress,
    frobenius_norm,
    guard_projector,
    hermitian_eigensystem,
    hermitian_function,
    jc_angle,
    jc_detached_energy,
    jc_dressing,
    jc_energy,
    jc_family,
    jc_hamiltonian,
    jc_labeled_basis,
    jc_unitary,
    ladder_lowering,
    ladder_raising,
    mode_identity,
    number_op,
    pauli,
    position_momentum,
    restricted_residual,
    spectrum_json,
    spin_identity,
    spin_rotation,
    tensor,
    verify_csv,
    verify_json,
    verify_relation_table,
)

__version__ = "0.1.0"

__all__ = [
    "AngularLattice",
    "Branch",
    "CommutatorReport",
    "CompositeSpace",
    "DiracParams",
    "DressedFamily",
    "FockSpace",
    "GeneratorSet",
    "JCParams",
    "LabeledBasis",
    "Operator",
    "RunConfig",
    "Su11Sector",
    "Su2Sector",
    "analyze_residual",
    "angular_momentum",
    "angular_shift",
    "block2",
    "build_so4",
    "commutator",
    "composite_identity",
    "diag_function",
    "dirac_angle",
    "dirac_dressing",
    "dirac_energy",
    "dirac_family",
    "dirac_hamiltonian",
    "dirac_hamiltonian_xp",
    "dirac_labeled_basis",
    "dirac_unitary",
    "dress",
    "frobenius_norm",
    "guard_projector",
    "hermitian_eigensystem",
    "hermitian_function",
    "jc_angle",
    "jc_detached_energy",
    "jc_dressing",
    "jc_energy",
    "jc_family",
    "jc_hamiltonian",
    "jc_labeled_basis",
    "jc_unitary",
    "ladder_lowering",
    "ladder_raising",
    "mode_identity",
    "number_op",
    "pauli",
    "position_momentum",
    "restricted_residual",
    "spectrum_json",
    "spin_identity",
    "spin_rotation",
    "tensor",
    "verify_csv",
    "verify_json",
    "verify_relation_table",
]
