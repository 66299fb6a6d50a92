"""Crossed homomorphisms and block-triangular extensions of a
representation at a rational evaluation point.

A generator assignment beta(g_i) extends to a crossed homomorphism on the
presented group exactly when the specialized relation matrix kills the
stacked vector of its values, so the space of crossed homomorphisms is a
nullspace computation. Each crossed homomorphism yields a representation one
dimension up, with the old one in the corner and beta in the new column, and
the relator images of that candidate are checked explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DivisionByZero, HypothesisViolated, InternalInconsistency
from .fitting import is_zero_of_delta
from .fox import Representation, alexander_matrix, evaluate_word, geometric_sum
from .matrices import frac_inverse, frac_rank_nullspace, freeze, identity, mat_mul, mat_pow
from .presentation import Presentation, Word, validate_presentation
from .scalars import Rational


def mat_vec(M, v):
    return tuple(sum(row[c] * v[c] for c in range(len(v))) for row in M)


@dataclass(frozen=True)
class CrossedHom:
    """One value vector per generator, each of length ell."""

    ell: int
    vectors: tuple

    def __post_init__(self):
        for vec in self.vectors:
            if len(vec) != self.ell:
                raise ValueError("crossed homomorphism vector has the wrong length")

    @staticmethod
    def from_flat(flat, ell: int) -> "CrossedHom":
        if len(flat) % ell:
            raise ValueError("flat vector length is not a multiple of the dimension")
        n = len(flat) // ell
        vecs = tuple(tuple(flat[i * ell + c] for c in range(ell)) for i in range(n))
        return CrossedHom(ell, vecs)

    def stacked(self) -> tuple:
        return tuple(x for vec in self.vectors for x in vec)

    def scale(self, c) -> "CrossedHom":
        c = Fraction(c)
        return CrossedHom(self.ell, tuple(tuple(c * x for x in v) for v in self.vectors))

    def __add__(self, other: "CrossedHom") -> "CrossedHom":
        if self.ell != other.ell or len(self.vectors) != len(other.vectors):
            raise ValueError("crossed homomorphism shapes differ")
        return CrossedHom(
            self.ell,
            tuple(
                tuple(x + y for x, y in zip(u, v))
                for u, v in zip(self.vectors, other.vectors)
            ),
        )


class SpecializedRep:
    """The generator images a^{alpha_i} * phi(g_i) as rational matrices."""

    def __init__(self, pres: Presentation, phi: Representation, a: Rational):
        a = Fraction(a)
        if a == 0:
            raise DivisionByZero("the evaluation point must be a nonzero rational")
        self.pres = pres
        self.phi = phi
        self.a = a
        self.dim = phi.dim
        self.mats = tuple(
            freeze([[a ** e * x for x in row] for row in M])
            for e, M in zip(pres.alpha, phi.images)
        )
        self.invs = tuple(frac_inverse(M) for M in self.mats)

    def identity(self):
        return identity(self.dim, Fraction(1), Fraction(0))

    def image(self, i: int):
        return self.mats[i]

    def image_inverse(self, i: int):
        return self.invs[i]

    def syllable_image(self, i: int, e: int):
        base = self.mats[i] if e >= 0 else self.invs[i]
        return mat_pow(base, abs(e), self.identity())

    def factors_through(self) -> bool:
        """Whether every relator maps to the identity, i.e. the images define
        a representation of the presented group and not just of the free
        group."""
        ident = self.identity()
        return all(
            evaluate_word(self, rel.flatten()) == ident for rel in self.pres.relators
        )


def specialize(pres: Presentation, phi: Representation, a: Rational) -> SpecializedRep:
    return SpecializedRep(pres, phi, a)


@dataclass(frozen=True)
class CocycleSpace:
    a: Fraction
    ell: int
    dim: int
    basis: tuple


def cocycle_space(pres: Presentation, phi: Representation, a: Rational) -> CocycleSpace:
    """Basis of the crossed homomorphisms of the presented group valued in
    the specialization at a: the nullspace of the specialized relation
    matrix, reshaped to one vector per generator."""
    a = Fraction(a)
    if a == 0:
        raise DivisionByZero("the evaluation point must be a nonzero rational")
    report = validate_presentation(pres)
    if not report.ok:
        raise HypothesisViolated("; ".join(report.failures))
    Q = alexander_matrix(pres, phi)
    _, basis = frac_rank_nullspace(Q.specialize(a))
    hom_basis = tuple(CrossedHom.from_flat(vec, phi.dim) for vec in basis)
    return CocycleSpace(a=a, ell=phi.dim, dim=len(hom_basis), basis=hom_basis)


class ExtensionCandidate:
    """Generator images [[a^{alpha_i} phi(g_i), beta_i], [0, 1]], one
    dimension up from phi. Nothing is verified at construction time; run
    verify_factors to test the relators."""

    def __init__(self, pres: Presentation, phi: Representation, a: Rational, beta: CrossedHom):
        if beta.ell != phi.dim or len(beta.vectors) != pres.n_generators:
            raise ValueError("crossed homomorphism shape does not match")
        base = SpecializedRep(pres, phi, a)
        self.pres = pres
        self.phi = phi
        self.a = base.a
        self.beta = beta
        self.dim = phi.dim + 1
        mats = []
        invs = []
        for M, Minv, b in zip(base.mats, base.invs, beta.vectors):
            mats.append(self._corner(M, b))
            invs.append(self._corner(Minv, tuple(-x for x in mat_vec(Minv, b))))
        self.mats = tuple(mats)
        self.invs = tuple(invs)

    @staticmethod
    def _corner(M, b):
        ell = len(M)
        rows = [tuple(M[r]) + (b[r],) for r in range(ell)]
        rows.append(tuple(Fraction(0) for _ in range(ell)) + (Fraction(1),))
        return freeze(rows)

    def identity(self):
        return identity(self.dim, Fraction(1), Fraction(0))

    def image(self, i: int):
        return self.mats[i]

    def image_inverse(self, i: int):
        return self.invs[i]

    def syllable_image(self, i: int, e: int):
        base = self.mats[i] if e >= 0 else self.invs[i]
        return mat_pow(base, abs(e), self.identity())


def build_extension(
    pres: Presentation, phi: Representation, a: Rational, beta: CrossedHom
) -> ExtensionCandidate:
    return ExtensionCandidate(pres, phi, a, beta)


@dataclass(frozen=True)
class RelatorCheck:
    ok: bool
    image: tuple


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    relators: tuple


def verify_factors(candidate: ExtensionCandidate, pres: Presentation) -> VerificationReport:
    """Evaluate every flattened relator through the candidate; each must come
    out as the identity matrix."""
    ident = candidate.identity()
    checks = []
    for rel in pres.relators:
        image = evaluate_word(candidate, rel.flatten())
        checks.append(RelatorCheck(ok=image == ident, image=image))
    return VerificationReport(ok=all(c.ok for c in checks), relators=tuple(checks))


def evaluate_cocycle(beta: CrossedHom, rho, word: Word):
    """Value of the crossed homomorphism on a word, by the twisted product
    rule: each syllable g^e contributes the image of the prefix times the
    geometric sum of rho(g) of length e applied to beta(g)."""
    ident = rho.identity()
    value = tuple(Fraction(0) for _ in range(rho.dim))
    pre = ident
    for j, e in word.syllables:
        gs = geometric_sum(rho.image(j), e, ident, rho.image_inverse(j))
        contribution = mat_vec(gs, beta.vectors[j])
        value = tuple(x + y for x, y in zip(value, mat_vec(pre, contribution)))
        pre = mat_mul(pre, rho.syllable_image(j, e))
    return value


@dataclass(frozen=True)
class ExtensionCount:
    dim: int
    k: int
    meets_k: bool
    delta_zero: bool


def extension_count_criterion(
    pres: Presentation, phi: Representation, a: Rational, k: int | None = None
) -> ExtensionCount:
    """Compare the crossed-homomorphism dimension against the threshold k,
    and cross-check against the vanishing of the (k-1)-st determinant
    divisor at a. The two tests are equivalent by rank counting; if they
    ever disagree there is a bug, and the run stops hard."""
    if k is None:
        k = phi.dim + 1
    space = cocycle_space(pres, phi, a)
    meets = space.dim >= k
    Q = alexander_matrix(pres, phi)
    dz = is_zero_of_delta(Q, k - 1, a)
    if meets != dz:
        raise InternalInconsistency(
            f"dimension count ({space.dim} vs k={k}) and divisor vanishing at "
            f"a={a} disagree"
        )
    return ExtensionCount(dim=space.dim, k=k, meets_k=meets, delta_zero=dz)
