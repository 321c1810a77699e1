"""Exact commutativity degree of finite groups and the odd-order classification above 11/75."""

from .catalog import enumerate_family, export, ingest, witness
from .commdeg import (
    THRESHOLD,
    check_main,
    format_rational,
    pr_bound_prgp,
    pr_exact,
    pr_formula_class2,
    pr_formula_main,
    pr_formula_rusin,
    pr_indexp_recursion,
    pr_product_check,
)
from .group import (
    AutAction,
    FiniteGroup,
    Permutation,
    abelian,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    extraspecial,
    from_cayley_table,
    from_permutations,
    quotient,
    semidirect_product,
    standard,
)
from .iso import are_isomorphic, recognize
from .structure import (
    Subgroup,
    center,
    centralizer,
    commutator_subgroup,
    conjugacy_classes,
    lower_central_series,
    nilpotency_class,
    star,
    sylow_decomposition,
)
from .verify import analyze, verify_char_table, verify_properties, verify_rusin_corrections

__version__ = "0.1.0"
