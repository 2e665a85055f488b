"""Reversed Dickson polynomials over finite fields: power sums and permutation search."""

__version__ = "0.1.0"

from .gf_tower import FieldCtx, FieldElement, PrimePower, make_field_ctx, make_quadratic_extension  # noqa: E402
from .power_sums import cube_sum_closed, power_sum_oracle, sum_d_closed, weighted_sum_oracle  # noqa: E402
from .pp_search import filter_pass, is_permutation, search_desirable  # noqa: E402
from .rdp_eval import d_eval, pair_table_for  # noqa: E402

__all__ = [
    "FieldCtx",
    "FieldElement",
    "PrimePower",
    "make_field_ctx",
    "make_quadratic_extension",
    "cube_sum_closed",
    "power_sum_oracle",
    "sum_d_closed",
    "weighted_sum_oracle",
    "filter_pass",
    "is_permutation",
    "search_desirable",
    "d_eval",
    "pair_table_for",
]
