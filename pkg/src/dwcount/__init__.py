"""Exact Dijkgraaf-Witten invariants of Seifert manifolds and counts of
homotopy classes of maps into lens spaces, by degree."""
from .counting import (
    ConsistencyReport,
    DegreeCountTable,
    count_from_dw,
    counts_from_dw,
    degree_count,
    degree_count_table,
    fourier_forward,
    verify_consistency,
)
from .cyclotomic import (
    CycloValue,
    ReducedForm,
    approx_complex,
    conjugate,
    cyclo_add,
    cyclo_mul,
    cyclo_root_power,
    cyclotomic_polynomial,
    extract_integer,
    reduce_canonical,
    render,
)
from .dw import (
    DwVector,
    dw_all,
    dw_all_collapsed,
    dw_invariant,
    dw_invariant_collapsed,
    exponent,
    inner_factor,
    solve_congruence,
)
from .kernel import BACKEND
from .oracle import approx_dw_float, brute_count_homs, cross_validate
from .seifert import (
    SeifertData,
    count_homs,
    presentation_matrix,
    smith_normal_form,
    validate_seifert,
)

__version__ = "0.1.0"
