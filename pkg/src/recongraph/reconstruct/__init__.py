from .colourings import (
    CandidateGraph,
    all_candidates_kempe,
    all_candidates_single,
    best_candidate_kempe,
    best_candidate_single,
    candidate_kempe,
    candidate_kempe_fast,
    candidate_single,
    candidate_single_fast,
    neighbourhood_cliques,
    reconstruct_kempe,
    reconstruct_kempe_fast,
    reconstruct_single,
    reconstruct_single_fast,
    star_fails,
    tstar_fails,
)
from .layering import Layering, all_layerings, find_layering, is_layering, layering_violations
from .tokens import reconstruct_tar0, reconstruct_tar1, reconstruct_tj2, reconstruct_token_trivial, tar1_factor

__all__ = [
    "CandidateGraph",
    "Layering",
    "all_candidates_kempe",
    "all_candidates_single",
    "all_layerings",
    "best_candidate_kempe",
    "best_candidate_single",
    "candidate_kempe",
    "candidate_kempe_fast",
    "candidate_single",
    "candidate_single_fast",
    "find_layering",
    "is_layering",
    "layering_violations",
    "neighbourhood_cliques",
    "reconstruct_kempe",
    "reconstruct_kempe_fast",
    "reconstruct_single",
    "reconstruct_single_fast",
    "reconstruct_tar0",
    "reconstruct_tar1",
    "reconstruct_tj2",
    "reconstruct_token_trivial",
    "star_fails",
    "tar1_factor",
    "tstar_fails",
]

__all__ = [
    "all_candidates_kempe",
    "all_candidates_single",
    "all_layerings",
    "best_candidate_kempe",
    "best_candidate_single",
    "candidate_kempe",
    "candidate_kempe_fast",
    "candidate_single",
    "candidate_single_fast",
    "CandidateGraph",
    "find_layering",
    "is_layering",
    "Layering",
    "layering_violations",
    "neighbourhood_cliques",
    "reconstruct_kempe",
    "reconstruct_kempe_fast",
    "reconstruct_single",
    "reconstruct_single_fast",
    "reconstruct_tar0",
    "reconstruct_tar1",
    "reconstruct_tj2",
    "reconstruct_token_trivial",
    "star_fails",
    "tar1_factor",
    "tstar_fails",
]
