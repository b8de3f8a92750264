"""Exact lower bounds for Renyi entropies of sums on Z/pZ and Z.

Everything runs on exact rational mass functions; floating point enters only
when an entropy, an entropy power, or a report value is finally evaluated.
"""

from .applications import (
    EpiReport,
    KanterCheck,
    LinearForm,
    LoBound,
    SumsetCheck,
    cauchy_davenport_check,
    count_solutions,
    discrete_epi_check,
    doubling_gap,
    doubling_gap_sweep,
    kanter_G,
    kanter_small_ball_check,
    lo_entropy_bound,
    rearranged_set,
    small_ball,
    weighted_sum_distribution,
)
from .convolve import convolve, convolve_many
from .core import (
    Domain,
    NonnegFn,
    Pmf,
    circular_shift_between,
    delta,
    make_pmf,
    mass_from_json,
    mass_from_obj,
    mass_to_json,
    mass_to_obj,
    mirror,
    pmf_from_json,
    pmf_from_obj,
    scale_index,
    translate,
    uniform_on,
)
from .decompose import Decomposition, LayerCake, decompose, layer_cake
from .entropy import (
    Alpha,
    Maj,
    MajorizationVerdict,
    NegPower,
    PowerConvex,
    XLogX,
    convex_sum,
    entropy_power,
    majorizes,
    renyi,
    to_bits,
)
from .extremal import (
    BoundReport,
    SignAssignment,
    assign_signs,
    extremal_distribution,
    extremal_distribution_fast,
    verify_main_inequality,
)
from .oracle import (
    ExtremalCheck,
    PermutationPair,
    brute_extremal_check,
    brute_small_ball,
    check_extremal_instance,
    min_entropy_over_permutations,
)
from .rearrange import (
    OrderedIndexSet,
    Regularity,
    Sign,
    bar_delta,
    canonical_ordering,
    classify_regularity,
    descends_along,
    rearrange,
    shape_equivalent,
    spiral_indices,
)

__version__ = "0.1.0"
