"""Free differential calculus and the twisted relation matrix.

The derivative of a word with respect to a generator is taken through a
representation: each syllable g^e contributes (image of the prefix so far)
times the geometric sum of the image of g with length e. Coefficients are
carried in a one-variable Laurent-polynomial ring whose variable records the
exponent weighting of the presentation, tensored with a finite-dimensional
rational representation of the generators.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import HypothesisViolated, NotInvertible, ParseError, UnknownGenerator
from .laurent import LaurentPoly
from .matrices import frac_inverse, freeze, identity, mat_add, mat_mul, mat_neg, mat_pow, mat_scale
from .presentation import Presentation, Word, validate_presentation
from .scalars import Rational, parse_rational


@dataclass(frozen=True)
class Representation:
    """A map from the generators to invertible square rational matrices."""

    dim: int
    images: tuple

    def __post_init__(self):
        for M in self.images:
            if len(M) != self.dim or any(len(row) != self.dim for row in M):
                raise ValueError("representation matrix has the wrong shape")

    @staticmethod
    def trivial(n_generators: int) -> "Representation":
        one = ((Fraction(1),),)
        return Representation(1, tuple(one for _ in range(n_generators)))

    @property
    def inverses(self) -> tuple:
        return tuple(frac_inverse(M) for M in self.images)

    def is_trivial(self) -> bool:
        return self.dim == 1 and all(M[0][0] == 1 for M in self.images)


def parse_representation(text: str, pres: Presentation) -> Representation:
    """Read a representation file: 'dim L' then, per generator, a 'matrix
    name' header followed by L rows of L rationals."""
    dim: int | None = None
    images: dict[int, tuple] = {}
    pending: str | None = None
    pending_rows: list[tuple] = []
    gen_index = {name: i for i, name in enumerate(pres.generators)}

    def close_pending(lineno: int):
        nonlocal pending, pending_rows
        if pending is None:
            return
        if len(pending_rows) != dim:
            raise ParseError(
                f"matrix {pending!r} has {len(pending_rows)} rows, expected {dim}", lineno
            )
        images[gen_index[pending]] = freeze(pending_rows)
        pending, pending_rows = None, []

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        if head == "dim":
            if dim is not None:
                raise ParseError("dim given twice", lineno)
            try:
                dim = int(rest.strip())
            except ValueError:
                raise ParseError(f"bad dimension {rest.strip()!r}", lineno)
            if dim < 1:
                raise ParseError(f"dimension must be positive, got {dim}", lineno)
        elif head == "matrix":
            if dim is None:
                raise ParseError("matrix before dim", lineno)
            close_pending(lineno)
            name = rest.strip()
            if name not in gen_index:
                raise UnknownGenerator(f"unknown generator {name!r}", lineno)
            if gen_index[name] in images:
                raise ParseError(f"matrix {name!r} given twice", lineno)
            pending = name
        else:
            if pending is None:
                raise ParseError(f"unexpected row outside a matrix block: {line!r}", lineno)
            cells = line.split()
            if len(cells) != dim:
                raise ParseError(
                    f"row has {len(cells)} entries, expected {dim}", lineno
                )
            try:
                pending_rows.append(tuple(parse_rational(c) for c in cells))
            except ValueError as exc:
                raise ParseError(str(exc), lineno)
            if len(pending_rows) > dim:
                raise ParseError(f"matrix {pending!r} has too many rows", lineno)
    close_pending(len(text.splitlines()))
    if dim is None:
        raise ParseError("missing dim directive")
    missing = [n for n, i in gen_index.items() if i not in images]
    if missing:
        raise ParseError("missing matrix for: " + " ".join(missing))
    rep = Representation(dim, tuple(images[i] for i in range(len(pres.generators))))
    rep.inverses  # noqa: B018 - force the invertibility check at parse time
    return rep


def format_representation(rep: Representation, pres: Presentation) -> str:
    lines = [f"dim {rep.dim}"]
    for name, M in zip(pres.generators, rep.images):
        lines.append(f"matrix {name}")
        for row in M:
            lines.append(" ".join(str(c) for c in row))
    return "\n".join(lines) + "\n"


def _laurent_wrap(M, exp: int):
    """Lift a rational matrix into the Laurent ring, scaled by gamma^exp."""
    return tuple(
        tuple(LaurentPoly({exp: c}) if c else LaurentPoly.zero() for c in row) for row in M
    )


class TensorRep:
    """The generator images gamma^{alpha_i} * phi(g_i), with enough cached
    data to take arbitrary integer syllable powers exactly."""

    def __init__(self, pres: Presentation, phi: Representation):
        if len(phi.images) != pres.n_generators:
            raise ValueError("representation does not match the generator count")
        self.prime = pres.prime
        self.exps = pres.alpha
        self.dim = phi.dim
        self.phi_mats = phi.images
        self.phi_invs = phi.inverses

    def identity(self):
        return identity(self.dim, LaurentPoly.one(), LaurentPoly.zero())

    def image(self, i: int):
        return _laurent_wrap(self.phi_mats[i], self.exps[i])

    def image_inverse(self, i: int):
        return _laurent_wrap(self.phi_invs[i], -self.exps[i])

    def syllable_image(self, i: int, e: int):
        if e >= 0:
            base = mat_pow(self.phi_mats[i], e, identity(self.dim, Fraction(1), Fraction(0)))
        else:
            base = mat_pow(self.phi_invs[i], -e, identity(self.dim, Fraction(1), Fraction(0)))
        return _laurent_wrap(base, self.exps[i] * e)


def tensor_with_alpha(phi: Representation, pres: Presentation) -> TensorRep:
    return TensorRep(pres, phi)


def evaluate_word(rep, word: Word):
    """Image of a word under any object exposing dim / identity /
    syllable_image."""
    acc = rep.identity()
    for g, e in word.syllables:
        acc = mat_mul(acc, rep.syllable_image(g, e))
    return acc


def geometric_sum(M, n: int, ident, inverse=None):
    """I + M + ... + M^(n-1) for n >= 0, by joint doubling of the pair
    (M^k, partial sum). For n < 0 returns -(M^-1 + ... + M^n), which needs
    the inverse of M."""
    zero = mat_scale(0, ident)
    if n == 0:
        return zero
    if n < 0:
        if inverse is None:
            raise NotInvertible("negative syllable power needs an inverse image")
        return mat_neg(mat_mul(mat_pow(inverse, -n, ident), geometric_sum(M, -n, ident)))
    S = zero
    P = ident
    for bit in bin(n)[2:]:
        S = mat_add(S, mat_mul(P, S))
        P = mat_mul(P, P)
        if bit == "1":
            S = mat_add(S, P)
            P = mat_mul(P, M)
    return S


def fox_derivative_matrix(rep, word: Word, gen: int):
    """Derivative of the word with respect to generator `gen`, pushed through
    the representation: a dim x dim matrix over the coefficient ring."""
    ident = rep.identity()
    acc = mat_scale(0, ident)
    pre = ident
    for j, e in word.syllables:
        if j == gen:
            inv = rep.image_inverse(j) if e < 0 else None
            acc = mat_add(acc, mat_mul(pre, geometric_sum(rep.image(j), e, ident, inv)))
        pre = mat_mul(pre, rep.syllable_image(j, e))
    return acc


@dataclass(frozen=True)
class AlexanderMatrix:
    """The block matrix of relator derivatives. Rows come in blocks of
    block_dim per relator, columns in blocks of block_dim per generator."""

    entries: tuple
    n_relators: int
    n_generators: int
    block_dim: int
    prime: int

    @property
    def n_rows(self) -> int:
        return self.n_relators * self.block_dim

    @property
    def n_cols(self) -> int:
        return self.n_generators * self.block_dim

    def block(self, j: int, i: int):
        ell = self.block_dim
        return tuple(
            tuple(self.entries[j * ell + r][i * ell + c] for c in range(ell))
            for r in range(ell)
        )

    def specialize(self, a: Rational):
        """Evaluate every Laurent entry at the rational point a."""
        a = Fraction(a)
        return tuple(tuple(f.eval_at(a) for f in row) for row in self.entries)


def alexander_matrix(
    pres: Presentation, rep: Representation | None = None, allow_invalid: bool = False
) -> AlexanderMatrix:
    """Differentiate every relator (flattened to left * right^-1) by every
    generator under the weighted tensor representation."""
    report = validate_presentation(pres)
    if not report.ok and not allow_invalid:
        raise HypothesisViolated("; ".join(report.failures))
    if rep is None:
        rep = Representation.trivial(pres.n_generators)
    tensor = tensor_with_alpha(rep, pres)
    ell = tensor.dim
    rows: list[tuple] = []
    for rel in pres.relators:
        w = rel.flatten()
        blocks = [fox_derivative_matrix(tensor, w, i) for i in range(pres.n_generators)]
        for r in range(ell):
            rows.append(tuple(blocks[i][r][c] for i in range(pres.n_generators) for c in range(ell)))
    return AlexanderMatrix(
        entries=tuple(rows),
        n_relators=len(pres.relators),
        n_generators=pres.n_generators,
        block_dim=ell,
        prime=pres.prime,
    )
