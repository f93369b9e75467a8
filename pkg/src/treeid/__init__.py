"""Identifying codes and domination in trees: exact solvers, constructions and bound verification."""

from .canon import CanonicalForm, canonical_form, is_isomorphic, isomorphism
from .codes import CodeCertificate, certify, forced_vertices, lower_bound
from .constructive import (
    AppendRecord,
    FamilySpec,
    append_star,
    classify_exceptional,
    construct_domination_bound_code,
    construct_main_bound_code,
    extend_code_through_star,
    generate,
)
from .enumeration import enumerate_chunked, free_trees
from .errors import *  # noqa: F401,F403
from .graph import (
    Graph,
    GraphStats,
    VertexSet,
    closed_neighborhood,
    from_edge_list,
    from_graph6,
    open_twin_leaf_classes,
    stats,
    to_dot,
    to_edge_list,
    to_graph6,
)
from .kernel import BACKEND
from .solvers import (
    SolveResult,
    bounded_code_search,
    gamma_path,
    gammaID_path,
    min_dominating_set_exact,
    min_dominating_set_tree,
    min_identifying_code,
)
from .verify import BoundReport, VerificationSummary, verify_domination_theorem, verify_main_theorem

__version__ = "0.1.0"
