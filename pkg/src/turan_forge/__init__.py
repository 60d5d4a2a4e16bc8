"""Extremal K_{2,t}-free tripartite graphs over finite fields, with verifiers."""

from .bounds import (
    BoundsReport,
    asymptotic_constants,
    bounds_report,
    lower_bound_formula,
    sandwich_report,
    upper_bound,
    upper_bound_floor,
)
from .construction import (
    ConstructionParams,
    GeneratorSets,
    LemmaCertificate,
    build_generator_sets,
    build_graph,
    check_lemma1,
    decompose_field_element,
    derive_params,
    solve_pf_nf,
    vertex_id,
    vertex_label,
)
from .errors import (
    BudgetExceededError,
    InvalidParameterError,
    MemoryCapError,
    SearchCapError,
    TuranForgeError,
)
from .finite_field import (
    PrimeModulus,
    discrete_log,
    find_congruent_prime,
    mod_pow,
    smallest_primitive_root,
)
from .graph import TripartiteGraph
from .oracle import SearchResult, brute_force_extremal, exact_extremal
from .verifier import CodegreeReport, check_codegree_sum, codegree, is_k2t_free, scan_codegrees

__version__ = "0.1.0"
