"""Type-B parabolic quotients, aligned elements, and parabolic Tamari lattices."""

from .alignment import (
    Decomposition,
    PatternWitness,
    decompositions,
    enumerate_aligned,
    find_231_pattern,
    find_312_pattern,
    is_aligned,
    is_aligned_forcing,
    is_aligned_root,
)
from .enumeration import (
    Polynomial,
    check_conjecture_t,
    check_type_d_count,
    cover_enumerator,
    narayana_polynomial,
    t_sequence,
)
from .errors import (
    CapExceededError,
    CompositionError,
    NotACongruenceError,
    NotALatticeError,
    NotAPartialOrderError,
    NotAPermutationError,
)
from .parabolic import (
    Composition,
    InversionTableau,
    all_compositions,
    c_sorting_word,
    enumerate_quotient,
    inversion_order,
    is_member,
    longest_element,
    parabolic_length,
    skew_shape,
    sorting_word_longest,
)
from .projection import (
    ThetaClass,
    iota,
    project_down,
    project_up,
    theta_classes,
)
from .signed_perm import Reflection, SignedPermutation
from .tamari import (
    TamariLattice,
    build_tamari,
    join_irreducible_for,
    not_sublattice_witness,
    verify_theorems,
)

__all__ = [name for name in dir() if not name.startswith("_")]
