"""Graded decomposition numbers for Hecke algebras of symmetric groups at a root of unity.

Specht characters come from tableau degrees; the decomposition matrix is
solved column-free by induction on dominance distance using ladder weights.
"""

from .laurent import DivisionError, LaurentPoly, bar, eval_at_one, exact_div, q, quantum_factorial, quantum_int
from .partitions import (
    Node,
    Partition,
    all_partitions,
    distance,
    dominates,
    is_e_restricted,
    moves,
    moves_between,
    residue,
    residue_content,
    restricted_partitions,
    sigma,
)
from .ladders import (
    LadderProfile,
    bottom_removable_sequence,
    is_bottom_complete,
    ladder_index,
    ladder_profile,
    ladder_weight,
    r_lambda,
)
from .tableaux import (
    GradedCharacter,
    SizeLimitError,
    StandardTableau,
    char_multiplicity,
    node_degree,
    residue_sequence,
    specht_character,
    specht_multiplicity,
    standard_tableaux,
    tableau_degree,
)
from .solver import (
    AlgorithmError,
    BasicSolution,
    DecompMatrix,
    InconsistentInput,
    basic_solve,
    decomposition_matrix,
    verify_matrix,
)
from .fock import (
    FockVector,
    IdentityViolation,
    b_coefficients,
    canonical_basis_column,
    first_approximation,
    projective_character_mults,
    reconstruct_irreducible_characters,
    verify_fock,
)

__version__ = "0.1.0"
