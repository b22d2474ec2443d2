"""Zeta functions of the quadratic orders O_n = O_K[p^n Delta]: exact formulas and an enumeration oracle."""
from .base import (
    CaseKind,
    ElementType,
    OrderElement,
    QuadraticSetup,
    elem_add,
    elem_mul,
    eps_type,
    is_unit,
    norm,
    split_roots,
)
from .engine import (
    ZetaNumerator,
    check_functional_equation,
    closed_form,
    dirichlet_coeffs,
    principal_part,
    solve_recurrence,
    unit_index,
    v_factor,
)
from .oracle import (
    HnfLattice,
    IdealRecord,
    classify,
    enumerate_sublattices,
    ideal_census,
    is_ideal,
    low_high_census,
    representative,
    traveling_check,
    unit_quotient_counts,
)
from .polyseries import (
    CoeffSeries,
    QPoly,
    XPoly,
    functional_transform,
    series_div,
    specialize_q,
    xp_add,
    xp_mul,
)

__version__ = "0.1.0"
