"""Ordered simplicial complexes, ordered products, and windows of the
Kakimizu complex of a connected sum."""
from .complex import (
    EXPLICIT,
    FLAG,
    UNREACHABLE,
    Complex,
    build_complex,
    euler_characteristic,
    is_flag,
    is_simplex,
    skeleton_distance,
)
from .errors import *  # noqa: F401,F403
from .kakimizu import (
    BOTH,
    DIRECT_RULE,
    PRODUCT_PIPELINE,
    SumComparison,
    SumWindowComplex,
    connected_sum_window,
    edgescor_adjacent,
    leq2,
    psi_label,
    psi_unlabel,
    realize_triple,
    reorder_with_leq2,
)
from .ordering import OrderedComplex, Violation, find_violations, leq, restrict_to_adjacent, validate_ordering
from .product import LEFT, RIGHT, WeightedPoint, Window, ordered_product, project, realize_in_product, z_window
from .toolkit import (
    export_dot,
    gen_random_ordered_flag,
    parse_complex,
    serialize_complex,
)

__version__ = "0.1.0"
