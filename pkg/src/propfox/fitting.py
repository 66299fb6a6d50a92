"""Determinant divisors of the relation matrix.

For a matrix over the rational Laurent ring, the d-th divisor is the
normalized greatest common divisor of its (n_cols - d)-minors, together with
the minimum p-valuation of the rational contents of the nonzero minors. The
gcd normalization makes nonzero rationals and powers of the variable into
units, so the p-part of the content has to be tracked separately.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .errors import DivisionByZero, InternalInconsistency
from .fox import AlexanderMatrix, alexander_matrix
from .laurent import LaurentPoly, content_valuation, div_exact, gcd_many
from .matrices import frac_rank_nullspace
from .presentation import Presentation
from .scalars import PAdicApprox, Rational


def det_laurent(rows) -> LaurentPoly:
    """Exact determinant of a square Laurent matrix. Pulls the lowest
    variable power out of each row first, then runs fraction-free
    elimination, so intermediate entries never leave the polynomial ring."""
    k = len(rows)
    if k == 0:
        return LaurentPoly.one()
    shift = 0
    M: list[list[LaurentPoly]] = []
    for row in rows:
        nonzero = [f for f in row if not f.is_zero()]
        if not nonzero:
            return LaurentPoly.zero()
        low = min(f.min_exp() for f in nonzero)
        shift += low
        M.append([f.shift(-low) for f in row])
    sign = 1
    prev = LaurentPoly.one()
    for c in range(k - 1):
        piv = next((i for i in range(c, k) if not M[i][c].is_zero()), None)
        if piv is None:
            return LaurentPoly.zero()
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            sign = -sign
        for i in range(c + 1, k):
            for j in range(c + 1, k):
                M[i][j] = div_exact(M[c][c] * M[i][j] - M[i][c] * M[c][j], prev)
            M[i][c] = LaurentPoly.zero()
        prev = M[c][c]
    det = M[k - 1][k - 1]
    return det.shift(shift) if sign > 0 else (-det).shift(shift)


@dataclass(frozen=True)
class FittingResult:
    d: int
    delta: LaurentPoly
    mu_content: int | None
    minor_count: int


def _thread_count() -> int:
    raw = os.environ.get("PROPFOX_THREADS", "")
    try:
        t = int(raw)
    except ValueError:
        return 1
    return max(1, t)


def _minor(Q: AlexanderMatrix, row_set, col_set) -> LaurentPoly:
    sub = tuple(tuple(Q.entries[r][c] for c in col_set) for r in row_set)
    return det_laurent(sub)


@lru_cache(maxsize=None)
def fitting_delta(Q: AlexanderMatrix, d: int) -> FittingResult:
    """Normalized gcd of the (n_cols - d)-minors of Q, the minimum content
    valuation over the nonzero ones, and how many minors were expanded.

    Scans minors in lexicographic (row set, column set) order and stops
    early only once both outputs are forced: gcd already trivial, content
    minimum already 0, and every matrix entry p-integral so no later minor
    can push the content below 0."""
    r = Q.n_cols - d
    if r <= 0:
        return FittingResult(d, LaurentPoly.one(), 0, 0)
    if r > Q.n_rows:
        return FittingResult(d, LaurentPoly.zero(), None, 0)
    p = Q.prime
    integral = all(
        (v := content_valuation(f, p)) is None or v >= 0
        for row in Q.entries
        for f in row
    )
    pairs = [
        (rs, cs)
        for rs in combinations(range(Q.n_rows), r)
        for cs in combinations(range(Q.n_cols), r)
    ]

    threads = _thread_count()
    if threads > 1:
        chunks = [pairs[i : i + 32] for i in range(0, len(pairs), 32)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunk_results = pool.map(
                lambda ch: [_minor(Q, rs, cs) for rs, cs in ch], chunks
            )
            dets = (det for block in chunk_results for det in block)
            return _fold_minors(d, p, integral, dets)
    dets = (_minor(Q, rs, cs) for rs, cs in pairs)
    return _fold_minors(d, p, integral, dets)


def _fold_minors(d: int, p: int, integral: bool, dets) -> FittingResult:
    g = LaurentPoly.zero()
    mu: int | None = None
    count = 0
    for det in dets:
        count += 1
        if det.is_zero():
            continue
        g = gcd_many([g, det])
        v = content_valuation(det, p)
        mu = v if mu is None else min(mu, v)
        if integral and mu == 0 and g.is_one():
            break
    return FittingResult(d, g, mu, count)


def rank_at(Q: AlexanderMatrix, a: Rational) -> int:
    rank, _ = frac_rank_nullspace(Q.specialize(a))
    return rank


def is_zero_of_delta(Q: AlexanderMatrix, d: int, a: Rational) -> bool:
    """Whether a kills the d-th divisor, checked two independent ways: by
    evaluating the gcd and by the rank of the specialized matrix. The two
    must agree; disagreement would mean a computation bug."""
    a = Fraction(a)
    if a == 0:
        raise DivisionByZero("the divisor zeros live in the nonzero rationals")
    delta = fitting_delta(Q, d).delta
    by_eval = delta.is_zero() or delta.eval_at(a) == 0
    by_rank = rank_at(Q, a) < Q.n_cols - d
    if by_eval != by_rank:
        raise InternalInconsistency(
            f"divisor evaluation and rank drop disagree at a={a} for d={d}: "
            f"eval says {by_eval}, rank says {by_rank}"
        )
    return by_eval


def iwasawa_delta(pres: Presentation, d: int) -> LaurentPoly:
    """The d-th divisor in the classical indexing for the rank-one quotient
    module: drop one column's worth of rank before taking minors."""
    Q = alexander_matrix(pres, None)
    return fitting_delta(Q, d + 1).delta


def rank_nullspace_padic(rows, prime: int):
    """Gaussian elimination over p-adic approximations. Pivots are chosen
    with minimal valuation; entries indistinguishable from zero at their
    precision are never pivoted on, and the flag reports when such an entry
    had to be treated as zero (so more precision could raise the rank)."""
    work = [list(r) for r in rows]
    if not work or not work[0]:
        return 0, [], False
    n_rows, n_cols = len(work), len(work[0])
    limited = False
    pivots: list[int] = []
    row = 0
    for col in range(n_cols):
        if row >= n_rows:
            break
        candidates = [
            (r, work[r][col]) for r in range(row, n_rows) if not work[r][col].is_zero_state()
        ]
        if not candidates:
            limited = True
            continue
        piv_row, piv = min(candidates, key=lambda rc: rc[1].val)
        work[row], work[piv_row] = work[piv_row], work[row]
        for r in range(n_rows):
            if r == row:
                continue
            entry = work[r][col]
            if entry.is_zero_state():
                continue
            factor = entry / piv
            work[r] = [x - factor * y for x, y in zip(work[r], work[row])]
        pivots.append(col)
        row += 1
    rank = len(pivots)
    free = [c for c in range(n_cols) if c not in pivots]
    basis = []
    prec = max(
        (e.prec for r in work for e in r if not e.is_zero_state()), default=8
    )
    one = PAdicApprox.from_rational(Fraction(1), prime, prec)
    for fc in free:
        vec = [PAdicApprox.zero(prime, prec)] * n_cols
        vec[fc] = one
        for r, pc in enumerate(pivots):
            entry = work[r][fc]
            if entry.is_zero_state():
                continue
            vec[pc] = -(entry / work[r][pc])
        basis.append(tuple(vec))
    return rank, basis, limited
