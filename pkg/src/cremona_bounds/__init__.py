"""Exact machinery behind the rank bound for p-elementary subgroups of the
plane Cremona group: cyclotomic polynomials mod p, torus torsion bounds with
a finite-field oracle, the piecewise (p, t) rank table, and the Weyl-group
audit for the cubic-surface case."""

from .cremona_table import (
    AlgebraicallyClosed,
    CremonaBound,
    CyclotomicExtension,
    FiniteField,
    Rationals,
    attaining_example,
    cremona_rank_bound,
    t_for_field,
)
from .cyclotomic import (
    IntPoly,
    ModPoly,
    cyclotomic_poly,
    multiplicative_order,
    order_t_multiplicity,
    reduce_mod,
    root_multiplicity,
    verify_lemma_range,
)
from .errors import DomainError, NotCyclotomicProduct, NotFiniteOrder
from .ff_oracle import (
    FiniteFieldTorus,
    group_order,
    p_elementary_rank,
    rational_points_structure,
    t_of_finite_field,
)
from .intlinalg import (
    IntMatrix,
    char_poly,
    companion_matrix,
    cyclotomic_factorization,
    kernel_dim_mod_p,
    matrix_order,
    smith_normal_form,
)
from .numth import euler_phi
from .torus_rank import (
    GaloisTorusPresentation,
    RankCertificate,
    fixed_point_rank,
    multiplicity_chain_check,
    sharp_construction,
    theorem_bound,
)
from .weyl_audit import audit_pgl4, enumerate_weyl

__version__ = "0.1.0"

__all__ = [
    "AlgebraicallyClosed",
    "CremonaBound",
    "CyclotomicExtension",
    "DomainError",
    "FiniteField",
    "FiniteFieldTorus",
    "GaloisTorusPresentation",
    "IntMatrix",
    "IntPoly",
    "ModPoly",
    "NotCyclotomicProduct",
    "NotFiniteOrder",
    "RankCertificate",
    "Rationals",
    "attaining_example",
    "audit_pgl4",
    "char_poly",
    "companion_matrix",
    "cremona_rank_bound",
    "cyclotomic_factorization",
    "cyclotomic_poly",
    "enumerate_weyl",
    "euler_phi",
    "fixed_point_rank",
    "group_order",
    "kernel_dim_mod_p",
    "matrix_order",
    "multiplicative_order",
    "multiplicity_chain_check",
    "order_t_multiplicity",
    "p_elementary_rank",
    "rational_points_structure",
    "reduce_mod",
    "root_multiplicity",
    "sharp_construction",
    "smith_normal_form",
    "t_for_field",
    "t_of_finite_field",
    "theorem_bound",
    "verify_lemma_range",
]
