"""Exact solvers and a verification harness for Roman/Italian domination
parameters on finite simple digraphs."""

from .digraph import (
    Digraph,
    cartesian_product,
    dipath,
    is_packing,
    is_rooted_tree,
    out_star,
    product_coords,
    product_index,
    rooted_tree,
)
from .errors import InfeasibleStructureError, ParseError, SizeLimitError
from .grid import (
    GridValue,
    check_grid_lemmas,
    closed_form_witness,
    three_row_closed_form,
    total_italian_grid,
    two_row_closed_form,
)
from .harness import (
    check_parameter_relations,
    format_digraph,
    parse_digraph,
    random_digraph,
)
from .labeling import Variant, level_set, restricted_weight, validate, weight
from .report import Record, Report
from .solver import (
    Parameter,
    SolveResult,
    enumerate_optima,
    min_v0_optima,
    solve,
    variant_of,
)
from .trees import (
    RootedTreeCode,
    enumerate_rooted_trees,
    verify_trees_total_equality,
    verify_trees_triple_bound,
)

__version__ = "0.1.0"

__all__ = [
    "Digraph",
    "GridValue",
    "InfeasibleStructureError",
    "Parameter",
    "ParseError",
    "Record",
    "Report",
    "RootedTreeCode",
    "SizeLimitError",
    "SolveResult",
    "Variant",
    "cartesian_product",
    "check_grid_lemmas",
    "check_parameter_relations",
    "closed_form_witness",
    "dipath",
    "enumerate_optima",
    "enumerate_rooted_trees",
    "format_digraph",
    "is_packing",
    "is_rooted_tree",
    "level_set",
    "min_v0_optima",
    "out_star",
    "parse_digraph",
    "product_coords",
    "product_index",
    "random_digraph",
    "restricted_weight",
    "rooted_tree",
    "solve",
    "three_row_closed_form",
    "total_italian_grid",
    "two_row_closed_form",
    "validate",
    "variant_of",
    "verify_trees_total_equality",
    "verify_trees_triple_bound",
    "weight",
]
