"""Realisations and eigenvalue-replacement constructions."""

from .glue import glue, p3_small_matrix, remove_values
from .p2 import P2Params, P2Result, p2_assemble, p2_companion_replace, p2_mu_replace
from .p3 import (Region, RegionTag, classify_region, find_s_for_imag, p3_closed_form,
                 p3_lambda_limits, p3_replace, p3_t_for_perron, q_poly, special_family_list,
                 special_h)
from .perturb import cubic_replace, diag_merge, guo_guo_perturb, guo_perturb
from .realize import ls_companion, ls_realize

__all__ = [
    "P2Params", "P2Result", "Region", "RegionTag", "classify_region", "cubic_replace",
    "diag_merge", "find_s_for_imag", "glue", "guo_guo_perturb", "guo_perturb", "ls_companion",
    "ls_realize", "p2_assemble", "p2_companion_replace", "p2_mu_replace", "p3_closed_form",
    "p3_lambda_limits", "p3_replace", "p3_small_matrix", "p3_t_for_perron", "q_poly",
    "remove_values", "special_family_list", "special_h",
]
