"""Symplectic matroids via the greedy characterization and the
independent-set augmentation axiom, with exhaustive small-scale
cross-validation of the two."""

from .signed_sets import (
    FamilyFormatError,
    format_family,
    format_set,
    ground_set,
    is_admissible,
    negate_element,
    negate_set,
    parse_family,
    parse_set,
)
from .orderings import (
    AdmissibleOrdering,
    all_admissible_orderings,
    is_compatible,
    ordering_from_top_row,
    random_compatible_weight,
    standard_ordering,
    threshold_weight,
)
from .greedy import (
    BasisFamily,
    GreedyTrace,
    feasible_extension,
    gale_dominates,
    greedy_solution,
    is_optimal,
    weight_of,
)
from .axioms import (
    AxiomCheckResult,
    IndependenceFamily,
    WxyzDecomposition,
    axiom_holds,
    downset_witness,
    downward_closure,
    find_counterexample,
    is_symplectic_matroid_by_definition,
    maximal_members,
    wxyz_decompose,
    wxyz_orderings,
)
from .enumeration import (
    BudgetExceededError,
    EnumerationReport,
    admissible_k_subsets,
    catalog,
    sweep_basis_families,
    sweep_downsets,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
