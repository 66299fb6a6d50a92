"""Degree-one cohomology of a presented group with coefficients in a
specialized representation, and the audit tying its non-vanishing to the
zeros of the determinant divisor.

Crossed homomorphisms modulo principal ones: the numerator is the nullspace
of the specialized relation matrix, the denominator is the image of
v -> (rho(g_i) v - v)_i. The quotient dimension is compared against the
divisor value at the evaluation point in both directions, each gated on its
own hypotheses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    HypothesisViolated,
    InternalInconsistency,
    NotACocycle,
    TheoremViolation,
)
from .extensions import (
    CrossedHom,
    ExtensionCandidate,
    SpecializedRep,
    cocycle_space,
    mat_vec,
    specialize,
    verify_factors,
)
from .fitting import fitting_delta, is_zero_of_delta
from .fox import Representation, alexander_matrix
from .matrices import frac_rank_nullspace, frac_solve, freeze
from .presentation import Presentation, validate_presentation
from .scalars import Rational, unit_ball_check


def coboundary_matrix(rho: SpecializedRep):
    """The stacked blocks rho(g_i) - I, one block per generator: the matrix
    of v -> (values of the principal crossed homomorphism of v)."""
    ell = rho.dim
    rows = []
    for M in rho.mats:
        for r in range(ell):
            rows.append(tuple(M[r][c] - (1 if r == c else 0) for c in range(ell)))
    return freeze(rows)


def fixed_space(rho: SpecializedRep):
    """Basis of the common eigenvalue-one eigenspace of the generator
    images."""
    _, basis = frac_rank_nullspace(coboundary_matrix(rho))
    return basis


@dataclass(frozen=True)
class CohomologyReport:
    a: Fraction
    ell: int
    z1_dim: int
    b1_dim: int
    h1_dim: int
    fixed_dim: int
    delta_value_at_a: Fraction
    cocycle_basis: tuple
    fixed_basis: tuple


def h1_report(pres: Presentation, phi: Representation, a: Rational) -> CohomologyReport:
    """Dimensions of crossed homomorphisms, principal ones, and the
    quotient, for coefficients in the specialization of phi at a."""
    rho = specialize(pres, phi, a)
    if not rho.factors_through():
        raise HypothesisViolated(
            "the specialized images do not kill the relators, so they carry "
            "no action of the presented group"
        )
    space = cocycle_space(pres, phi, a)
    C = coboundary_matrix(rho)
    b1, fixed_basis = frac_rank_nullspace(C)
    h1 = space.dim - b1
    if h1 < 0:
        raise InternalInconsistency(
            f"principal dimension {b1} exceeds the full space {space.dim}"
        )
    delta = fitting_delta(alexander_matrix(pres, phi), phi.dim).delta
    return CohomologyReport(
        a=rho.a,
        ell=phi.dim,
        z1_dim=space.dim,
        b1_dim=b1,
        h1_dim=h1,
        fixed_dim=phi.dim - b1,
        delta_value_at_a=delta.eval_at(rho.a),
        cocycle_basis=space.basis,
        fixed_basis=tuple(fixed_basis),
    )


def is_coboundary(beta: CrossedHom, rho: SpecializedRep):
    """A witness vector v with beta(g_i) = rho(g_i) v - v for every i, or
    None when beta is not principal. Rejects assignments that are not
    crossed homomorphisms in the first place."""
    Q = alexander_matrix(rho.pres, rho.phi).specialize(rho.a)
    target = beta.stacked()
    residual = mat_vec(Q, target)
    if any(x != 0 for x in residual):
        raise NotACocycle(
            "the generator assignment violates the relator constraints"
        )
    return frac_solve(coboundary_matrix(rho), target)


def _sym_square_2x2(M):
    """Action on the squares basis (x^2, xy, y^2) induced by a 2x2 upper
    triangular matrix acting on (x, y)."""
    (m00, m01), (_, m11) = M
    return freeze(
        [
            [m00 * m00, m00 * m01, m01 * m01],
            [Fraction(0), m00 * m11, 2 * m01 * m11],
            [Fraction(0), Fraction(0), m11 * m11],
        ]
    )


@dataclass(frozen=True)
class SymSquareReport:
    a: Fraction
    images: tuple
    coeff_images: tuple
    beta: CrossedHom
    trivial: bool
    witness: tuple | None


def symmetric_square_cocycle(ext2: ExtensionCandidate) -> SymSquareReport:
    """Push a verified two-dimensional block-triangular candidate through
    the squares construction. The result is again block triangular, one
    dimension up, and its corner column is a crossed homomorphism for the
    doubled coefficient system; report whether that class is principal."""
    if ext2.dim != 2:
        raise HypothesisViolated("the squares construction expects 2x2 images")
    if not verify_factors(ext2, ext2.pres).ok:
        raise HypothesisViolated("the candidate does not kill the relators")
    images = tuple(_sym_square_2x2(M) for M in ext2.mats)
    a = ext2.a
    coeff_phi = Representation(
        2,
        tuple(
            freeze([[x / a ** e for x in row[:2]] for row in S[:2]])
            for e, S in zip(ext2.pres.alpha, images)
        ),
    )
    rho1 = specialize(ext2.pres, coeff_phi, a)
    beta = CrossedHom(2, tuple((S[0][2], S[1][2]) for S in images))
    try:
        witness = is_coboundary(beta, rho1)
    except NotACocycle as exc:
        raise InternalInconsistency(
            f"the squared corner column failed the relator constraints: {exc}"
        )
    return SymSquareReport(
        a=a,
        images=images,
        coeff_images=rho1.mats,
        beta=beta,
        trivial=witness is not None,
        witness=witness,
    )


_NOT_APPLICABLE = "hypothesis violated, not applicable"
_CONSISTENT = "consistent"


@dataclass(frozen=True)
class TheoremAudit:
    a: Fraction
    hypothesis_failures: tuple
    forward_applicable: bool
    forward_verdict: str
    converse_applicable: bool
    converse_verdict: str
    h1_dim: int | None
    fixed_dim: int | None
    delta_zero: bool | None

    @property
    def verdict(self) -> str:
        if not self.forward_applicable and not self.converse_applicable:
            return _NOT_APPLICABLE
        return _CONSISTENT


def theorem_audit(pres: Presentation, phi: Representation, a: Rational) -> TheoremAudit:
    """Check both implications between divisor vanishing and nonzero
    quotient cohomology, each only when its hypotheses hold. A failure of an
    applicable implication is a bug in this library or a counterexample, and
    either way it must crash, not report."""
    a = Fraction(a)
    failures: list[str] = []
    report = validate_presentation(pres)
    if not report.ok:
        failures.extend(report.failures)
    if a == 0:
        failures.append("the evaluation point is zero")
    elif report.ok:
        rho = specialize(pres, phi, a)
        if not rho.factors_through():
            failures.append("the specialized images do not kill the relators")
    if a != 0 and not unit_ball_check(a, pres.prime):
        failures.append(
            "the evaluation point is not in the open unit ball around 1"
        )
    if failures:
        return TheoremAudit(
            a=a,
            hypothesis_failures=tuple(failures),
            forward_applicable=False,
            forward_verdict=_NOT_APPLICABLE,
            converse_applicable=False,
            converse_verdict=_NOT_APPLICABLE,
            h1_dim=None,
            fixed_dim=None,
            delta_zero=None,
        )
    coh = h1_report(pres, phi, a)
    Q = alexander_matrix(pres, phi)
    dz = is_zero_of_delta(Q, phi.dim, a)
    if dz != (coh.delta_value_at_a == 0):
        raise InternalInconsistency(
            "divisor vanishing and the reported divisor value disagree at "
            f"a={a}"
        )
    if dz and coh.h1_dim == 0:
        raise TheoremViolation(
            f"the divisor vanishes at a={a} but the quotient cohomology is "
            "zero"
        )
    converse_applicable = coh.fixed_dim == 0
    if converse_applicable and coh.h1_dim > 0 and not dz:
        raise TheoremViolation(
            f"no common fixed vector and nonzero quotient cohomology at a={a}, "
            "yet the divisor does not vanish"
        )
    return TheoremAudit(
        a=a,
        hypothesis_failures=(),
        forward_applicable=True,
        forward_verdict=_CONSISTENT,
        converse_applicable=converse_applicable,
        converse_verdict=_CONSISTENT if converse_applicable else _NOT_APPLICABLE,
        h1_dim=coh.h1_dim,
        fixed_dim=coh.fixed_dim,
        delta_zero=dz,
    )
