"""Exact computations around the Verlinde category Ver_p.

The library has three layers: exact cyclotomic arithmetic in the ring of
quantum integers, the closed fusion-ring formulas of Ver_p, and a
brute-force GF(p) oracle layer on modules over the cyclic group of order
p that every closed formula is validated against (see the verify
module's property suites).
"""

from .cyclotomic import CycNum, Interval, compare, exact_div, numeric_eval, qint, qint_at_power
from .dimensions import (
    JordanContent,
    PadicDim,
    ad,
    delta,
    delta_content,
    delta_square_difference,
    gd,
    gd_sequence,
    padic_dimension,
    padic_dimension_of,
    padic_series,
    recover_jordan_content,
    sd_at_least,
)
from .errors import (
    CapExceededError,
    ConventionError,
    ExactDivisionError,
    ValidationError,
    VerlindeLabError,
)
from .fusion import (
    EnhancedObject,
    EnhancedPair,
    McKayGraph,
    VerObject,
    VerPair,
    cat_dim_mod_p,
    fpdim,
    frobenius,
    frobenius_collapse,
    frobenius_enhanced,
    frobenius_type,
    fuse,
    fuse_simples,
    is_integral,
    mckay_graph,
    restrict_R,
    tensor_power_length,
)
from .modrep import (
    CyclicRep,
    EndoClass,
    JordanType,
    alt_power_ver,
    delta_n,
    direct_sum,
    divided_power,
    exterior_coinvariants,
    exterior_invariants,
    fr_plus,
    fr_plus_iterated,
    image_in_semisimplification,
    jordan_type_at,
    jordan_type_of,
    lift,
    power_space,
    semisimplify,
    skew_image,
    stable_jordan_type,
    symmetric_power,
    tensor,
)
from .partitions import (
    BoxPos,
    Partition,
    conormal_boxes,
    ell_p,
    faithfulness_bound,
    greedy_to_rho,
    is_p_regular,
    james_condition,
    james_envelope,
    p_core,
    rho,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
