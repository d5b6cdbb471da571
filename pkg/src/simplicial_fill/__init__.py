"""Acyclic fillings of simplicial cycles, Hamiltonian cycles built from them,
and exhaustive oracles for small complexes."""

from .chains import (
    Chain,
    Field,
    boundary,
    combine,
    cone,
    deficit,
    degree,
    deletion,
    link,
    scale,
    simplex_boundary,
    star,
)
from .errors import (
    BudgetExceeded,
    ChainError,
    ChainParseError,
    FillError,
    NotACycleError,
    NotAHypertreeError,
    VerificationError,
)
from .fill import (
    FillCertificate,
    FillRequest,
    base_case_small_n,
    fill,
    fill_dim1,
    fill_dim2_f2,
    fill_dim2_q,
    fill_dim3_f2,
    fill_general,
    is_friendly,
)
from .hamiltonian import (
    CollapseReport,
    HamiltonianResult,
    collapse_check,
    hamiltonian_2cycle,
    hamiltonian_3cycle,
    non_collapsible_tree,
    simple_cycle_from_filling,
)
from .linalg import HypertreeBasis, RankContext, fill_on_hypertree, is_acyclic, is_cycle, is_simple_cycle, rank_of
from .textio import emit_chain, parse_chain, read_chain, write_chain

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
