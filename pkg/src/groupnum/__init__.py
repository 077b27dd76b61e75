"""groupnum: decide which group properties are forced by the order alone.

Five arithmetic predicates (cyclic, abelian, nilpotent, supersolvable,
ordered Sylow tower) answer whether every group of order n has the
property; every negative answer can be backed by an explicitly constructed
witness group of order n, verified by the Cayley-table kernel.
"""

from ._core import BACKEND
from .arith import (
    Factorization,
    euler_phi,
    factorize,
    multiplicative_order,
    psi,
    psi_prime_power,
)
from .classify import (
    PROPERTIES,
    ClassificationReport,
    ViolationDiagnosis,
    abelian_group_count,
    classify,
    classify_range,
    diagnose,
    has_nilpotent_factorization,
    is_abelian_number,
    is_cyclic_number,
    is_nilpotent_number,
    is_ordered_sylow_number,
    is_supersolvable_number,
)
from .groups import (
    FiniteGroup,
    Subgroup,
    center,
    centralizer,
    commutator_subgroup,
    derived_series,
    direct_product,
    from_permutations,
    from_table,
    is_normal,
    normalizer,
    quotient_group,
    subgroup_closure,
    upper_central_series,
)
from .analysis import (
    burnside_complement,
    element_order,
    hall_subgroup,
    has_ordered_sylow_tower,
    is_abelian_group,
    is_cyclic_group,
    is_nilpotent_group,
    is_solvable_group,
    is_supersolvable_group,
    sylow_count,
    sylow_subgroup,
    transfer,
)
from .construct import (
    WitnessRecipe,
    make_case_group,
    make_cyclic,
    make_heisenberg,
    make_redei,
    make_semidirect_elem_abelian,
    make_witness,
    recipe_for,
)
from .crosscheck import (
    VerificationRecord,
    run_suite,
    verify_negative,
    verify_positive,
)

__version__ = "0.1.0"
