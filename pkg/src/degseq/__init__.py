"""Deciders for interval-constrained degree sequences.

Given componentwise bounds ``a[i] <= b[i]``, this package decides whether
*every* even-sum integer sequence within the bounds is graphic (the
*forcible* question) and whether *some* such sequence is graphic (the
*potential* question), produces counterexample witnesses, realizes
graphic sequences as explicit graphs, and ships brute-force oracles for
validating all of it.
"""

from ._backend import HAVE_COMPILED, backend_name
from .egcore import (
    NotGraphicError,
    SimpleGraph,
    eg_slack,
    eg_slacks,
    is_graphic,
    realize,
)
from .intervals import (
    AlphaContext,
    BetaContext,
    IntervalInstance,
    OrderBContext,
    OrderedView,
    Verdict,
    WitnessNotFoundError,
    alpha,
    alpha_context,
    beta_context,
    check_forcible,
    check_forcible_orderB,
    check_gy_necessary,
    check_gy_sufficient,
    check_potential,
    find_witness,
    order_b_context,
    sort_order_A,
    sort_order_B,
    sort_order_Ot,
)
from .oracle import (
    BoxTooLargeError,
    InstanceGenConfig,
    brute_force_forcible,
    brute_force_graphic,
    brute_force_potential,
    gen_instances,
    graphic_multisets,
    iter_box_members,
    resolve_volume_cap,
    sampled_forcible,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaContext",
    "BetaContext",
    "BoxTooLargeError",
    "HAVE_COMPILED",
    "InstanceGenConfig",
    "IntervalInstance",
    "NotGraphicError",
    "OrderBContext",
    "OrderedView",
    "SimpleGraph",
    "Verdict",
    "WitnessNotFoundError",
    "alpha",
    "alpha_context",
    "backend_name",
    "beta_context",
    "brute_force_forcible",
    "brute_force_graphic",
    "brute_force_potential",
    "check_forcible",
    "check_forcible_orderB",
    "check_gy_necessary",
    "check_gy_sufficient",
    "check_potential",
    "eg_slack",
    "eg_slacks",
    "find_witness",
    "gen_instances",
    "graphic_multisets",
    "is_graphic",
    "iter_box_members",
    "order_b_context",
    "realize",
    "resolve_volume_cap",
    "sampled_forcible",
    "sort_order_A",
    "sort_order_B",
    "sort_order_Ot",
]
