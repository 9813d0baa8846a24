"""Alexandroff (order) topologies on groups, checked on finite windows."""
from .groups import (
    FiniteGroup,
    XnElement,
    XnGroup,
    builtin_group,
    group_from_table,
    group_inv,
    group_mul,
    load_group,
    validate_cayley,
    xn_inv,
    xn_mul,
)
from .paratopo import (
    ClassificationReport,
    check_paratopological,
    check_topological,
    check_window_paratopological,
    classify,
    enumerate_posets,
    enumerate_preorders,
)
from .poset import (
    HasseDiagram,
    Poset,
    comparability_components,
    covers,
    down_set,
    is_monotone,
    is_open,
    load_poset,
    product_order,
    up_set,
    validate_poset,
)
from .theorem import Report, verify_finite_discreteness, verify_proposition, verify_theorem
from .verdict import InputError, ResourceError, Verdict
from .xn import (
    CoverageResult,
    Window,
    covering_check,
    inverse_identity_check,
    saturate,
    window,
    window_poset,
    xn_f_set,
    xn_leq,
    xn_u_set,
)

__version__ = "0.1.0"
