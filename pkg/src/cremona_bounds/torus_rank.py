"""Rank bound for p-torsion of algebraic tori with an explicit Galois action.

A torus presentation is a lattice dimension d, the integer matrix by which a
chosen Galois element acts on the cocharacter lattice, and the order t of the
cyclotomic character at that element. The bound floor(d / phi(t)) is computed
together with the actual eigenspace rank mod p, and sharpness witnesses are
constructed from companion blocks.

The full Galois group is modeled by the single element g: over a finite field
this is exact (Frobenius topologically generates), over other fields it gives
an upper bound only.
"""

from dataclasses import dataclass, field

from .cyclotomic import cyclotomic_poly, reduce_mod, root_multiplicity
from .errors import DomainError
from .intlinalg import (
    IntMatrix,
    char_poly,
    companion_matrix,
    cyclotomic_factorization,
    kernel_dim_mod_p,
    matrix_order,
)
from .numth import check_prime, euler_phi, residues_of_order, smallest_residue_of_order


@dataclass(frozen=True)
class GaloisTorusPresentation:
    dimension: int
    sigma: IntMatrix
    chi_order: int

    def __post_init__(self):
        if self.dimension < 1:
            raise DomainError("torus dimension must be >= 1")
        if self.sigma.dimension != self.dimension:
            raise DomainError("action matrix dimension must match torus dimension")
        if self.chi_order < 1:
            raise DomainError("character order must be >= 1")
        matrix_order(self.sigma)  # raises NotFiniteOrder if infinite


@dataclass(frozen=True)
class RankCertificate:
    upper_bound: int
    eigenspace_rank: int
    char_poly_indices: tuple
    eps_used: int

    def to_dict(self) -> dict:
        return {
            "upper_bound": self.upper_bound,
            "eigenspace_rank": self.eigenspace_rank,
            "char_poly_indices": list(self.char_poly_indices),
            "eps_used": self.eps_used,
        }


def theorem_bound(d: int, t: int) -> int:
    """floor(d / phi(t)): the rank bound for p-torsion of a d-dimensional torus."""
    if d < 1 or t < 1:
        raise DomainError("d and t must be >= 1")
    return d // euler_phi(t)


def canonical_eps(p: int, t: int) -> int:
    """Inverse mod p of the smallest positive residue of order t."""
    check_prime(p)
    if (p - 1) % t != 0:
        raise DomainError(
            f"no Galois element realizes character order {t} at p = {p}"
        )
    a = smallest_residue_of_order(p, t)
    return pow(a, -1, p)


def fixed_point_rank(pres: GaloisTorusPresentation, p: int) -> RankCertificate:
    """Eigenspace rank of the mod-p action at the inverse character value."""
    eps = canonical_eps(p, pres.chi_order)
    shifted = pres.sigma - IntMatrix.identity(pres.dimension).scale(eps)
    rank = kernel_dim_mod_p(shifted, p)
    bound = theorem_bound(pres.dimension, pres.chi_order)
    indices = cyclotomic_factorization(char_poly(pres.sigma))
    if rank > bound:
        raise AssertionError(
            f"eigenspace rank {rank} exceeds bound {bound}: theorem violated"
        )
    return RankCertificate(
        upper_bound=bound,
        eigenspace_rank=rank,
        char_poly_indices=indices,
        eps_used=eps,
    )


@dataclass
class ChainReport:
    """Per-factor multiplicity bounds for the char poly of the torus action."""

    p: int
    t: int
    eps: int
    factors: list = field(default_factory=list)
    total_multiplicity: int = 0
    total_bound: int = 0
    per_eps: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "t": self.t,
            "eps": self.eps,
            "factors": self.factors,
            "total_multiplicity": self.total_multiplicity,
            "total_bound": self.total_bound,
            "per_eps_eigenspace_rank": self.per_eps,
            "violations": self.violations,
            "passed": self.passed,
        }


def multiplicity_chain_check(pres: GaloisTorusPresentation, p: int) -> ChainReport:
    """Check mult_eps(Phi_{d_i} mod p) <= phi(d_i)/phi(t) factor by factor.

    Also records the eigenspace rank at every order-t residue: when p divides
    the order of the action those ranks may differ across residues, so they
    are reported, not asserted equal.
    """
    t = pres.chi_order
    eps = canonical_eps(p, t)
    indices = cyclotomic_factorization(char_poly(pres.sigma))
    phi_t = euler_phi(t)
    report = ChainReport(p=p, t=t, eps=eps)
    total = 0
    for d_i in indices:
        mult = root_multiplicity(reduce_mod(cyclotomic_poly(d_i), p), eps)
        total += mult
        entry = {
            "index": d_i,
            "phi": euler_phi(d_i),
            "multiplicity": mult,
            "bound_numerator": euler_phi(d_i),
            "bound_denominator": phi_t,
        }
        report.factors.append(entry)
        if mult * phi_t > euler_phi(d_i):
            report.violations.append(
                {"index": d_i, "multiplicity": mult, "phi": euler_phi(d_i),
                 "phi_t": phi_t}
            )
    report.total_multiplicity = total
    report.total_bound = theorem_bound(pres.dimension, t)
    if total > report.total_bound:
        report.violations.append(
            {"total_multiplicity": total, "total_bound": report.total_bound}
        )
    for residue in residues_of_order(p, t):
        e = pow(residue, -1, p)
        shifted = pres.sigma - IntMatrix.identity(pres.dimension).scale(e)
        report.per_eps[e] = kernel_dim_mod_p(shifted, p)
    return report


def sharp_construction(d: int, t: int) -> GaloisTorusPresentation:
    """Torus attaining the bound: floor(d/phi(t)) companion blocks of Phi_t
    padded by an identity block."""
    if d < 1 or t < 1:
        raise DomainError("d and t must be >= 1")
    phi_t = euler_phi(t)
    if phi_t > d:
        raise DomainError(
            f"phi({t}) = {phi_t} > d = {d}: the bound is 0, no witness exists"
        )
    copies = d // phi_t
    blocks = [companion_matrix(cyclotomic_poly(t))] * copies
    pad = d - copies * phi_t
    if pad:
        blocks.append(IntMatrix.identity(pad))
    return GaloisTorusPresentation(
        dimension=d, sigma=IntMatrix.block_diagonal(blocks), chi_order=t
    )


__all__ = [
    "GaloisTorusPresentation",
    "RankCertificate",
    "ChainReport",
    "euler_phi",
    "theorem_bound",
    "canonical_eps",
    "fixed_point_rank",
    "multiplicity_chain_check",
    "sharp_construction",
]
