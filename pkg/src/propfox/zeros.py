"""Zero sets of determinant divisors, over the rationals and over the
p-adic integers.

Rational zeros come from the classical divisor test on a primitive integer
form of the polynomial. p-adic zeros are residues mod p^N produced by
lifting: simple residues lift uniquely by Newton iteration, while residues
that are multiple mod p are resolved by the substitution x = r + p*y and a
recursion on the precision budget. A residue whose lifted zero count falls
short of its multiplicity mod p is reported as an obstruction: the missing
zeros live in a ramified extension (or need more precision), not in Z_p.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd, lcm

from .errors import IdenticallyZero
from .laurent import LaurentPoly, div_exact, gcd_many
from .scalars import unit_ball_check, valuation


def _dense_int_coeffs(f: LaurentPoly) -> list[int]:
    """Descending primitive integer coefficients of f with the power-of-gamma
    unit stripped, so the constant term is nonzero."""
    if f.is_zero():
        raise IdenticallyZero("the zero polynomial vanishes everywhere")
    g = f.shift(-f.min_exp())
    deg = g.max_exp()
    coeffs = [g.coeff(e) for e in range(deg, -1, -1)]
    denom = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    ints = [int(c * denom) for c in coeffs]
    content = 0
    for c in ints:
        content = gcd(content, c)
    return [c // content for c in ints]


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def _horner(coeffs: list, x: Fraction) -> Fraction:
    v = Fraction(0)
    for c in coeffs:
        v = v * x + c
    return v


def _deflate(coeffs: list, a: Fraction) -> list:
    """Quotient of a descending coefficient list by (x - a); the caller must
    know a is a root."""
    out = [coeffs[0]]
    for c in coeffs[1:-1]:
        out.append(c + a * out[-1])
    return out


def rational_roots(f: LaurentPoly) -> list[tuple[Fraction, int]]:
    """All rational zeros of f with multiplicities, sorted by value. The
    gamma-power unit is stripped first, so 0 is never a zero."""
    coeffs = [Fraction(c) for c in _dense_int_coeffs(f)]
    if len(coeffs) == 1:
        return []
    lead, const = coeffs[0], coeffs[-1]
    candidates = {
        Fraction(sign * s, q)
        for s in _divisors(int(const))
        for q in _divisors(int(lead))
        for sign in (1, -1)
    }
    roots = []
    for a in sorted(candidates):
        if _horner(coeffs, a) != 0:
            continue
        mult = 0
        work = coeffs
        while len(work) > 1 and _horner(work, a) == 0:
            work = _deflate(work, a)
            mult += 1
        roots.append((a, mult))
    return roots


def _poly_mod(coeffs: list[int], x: int, mod: int) -> int:
    v = 0
    for c in coeffs:
        v = (v * x + c) % mod
    return v


def _derivative(coeffs: list[int]) -> list[int]:
    deg = len(coeffs) - 1
    return [c * (deg - i) for i, c in enumerate(coeffs[:-1])]


def _mult_mod_p(coeffs: list[int], r: int, p: int) -> int:
    """Multiplicity of r as a root of the reduction mod p."""
    work = [c % p for c in coeffs]
    mult = 0
    while len(work) > 1 and _poly_mod(work, r, p) == 0:
        out = [work[0]]
        for c in work[1:-1]:
            out.append((c + r * out[-1]) % p)
        work = out
        mult += 1
    return mult


def _newton_lift(coeffs: list[int], r: int, p: int, budget: int) -> int:
    x = r % p
    prec = 1
    deriv = _derivative(coeffs)
    while prec < budget:
        prec = min(2 * prec, budget)
        mod = p ** prec
        fx = _poly_mod(coeffs, x, mod)
        dfx = _poly_mod(deriv, x, mod)
        x = (x - fx * pow(dfx, -1, mod)) % mod
    return x


def _compose_affine(coeffs: list[int], r: int, p: int) -> list[int]:
    """Descending integer coefficients of F(r + p*y), by Horner in the
    polynomial ring: acc <- acc * (p*y + r) + c."""
    acc = [coeffs[0]]
    for c in coeffs[1:]:
        nxt = [p * a for a in acc] + [0]
        for i, a in enumerate(acc):
            nxt[i + 1] += r * a
        nxt[-1] += c
        acc = nxt
    return acc


def _zp_roots(coeffs: list[int], p: int, budget: int) -> tuple[list[int], list[int]]:
    """Zeros of a squarefree integer polynomial in Z_p, as residues mod
    p^budget, plus the mod-p residues whose lifted count fell short."""
    roots: list[int] = []
    obstructions: list[int] = []
    deriv = _derivative(coeffs)
    for r in range(p):
        if _poly_mod(coeffs, r, p) != 0:
            continue
        if _poly_mod(deriv, r, p) != 0:
            roots.append(_newton_lift(coeffs, r, p, budget))
            continue
        k_r = _mult_mod_p(coeffs, r, p)
        if budget <= 1:
            obstructions.append(r)
            continue
        shifted = _compose_affine(coeffs, r, p)
        v = min(valuation(c, p) for c in shifted if c != 0)
        reduced = [c // p ** v for c in shifted]
        sub_roots, _ = _zp_roots(reduced, p, budget - 1)
        lifted = sorted((r + p * y) % p ** budget for y in sub_roots)
        roots.extend(lifted)
        if len(sub_roots) < k_r:
            obstructions.append(r)
    return sorted(set(roots)), sorted(set(obstructions))


def _squarefree_part(f: LaurentPoly) -> LaurentPoly:
    deriv = LaurentPoly({e - 1: e * c for e, c in f.terms.items() if e != 0})
    g = gcd_many([f, deriv])
    if g.is_one():
        return f
    return div_exact(f, g)


def hensel_roots(f: LaurentPoly, p: int, budget: int) -> tuple[list[int], list[int]]:
    """Zeros of f in Z_p as residues mod p^budget, and the obstructed mod-p
    residues, computed on the squarefree part of f."""
    if f.is_zero():
        raise IdenticallyZero("the zero polynomial vanishes everywhere")
    if budget < 1:
        raise ValueError(f"precision budget must be at least 1, got {budget}")
    coeffs = _dense_int_coeffs(_squarefree_part(f))
    if len(coeffs) == 1:
        return [], []
    return _zp_roots(coeffs, p, budget)


@dataclass(frozen=True)
class ZeroReport:
    prime: int
    precision: int
    identically_zero: bool
    rational: tuple[tuple[Fraction, int], ...]
    padic: tuple[tuple[int, int], ...]
    obstructions: tuple[int, ...]


def zero_report(delta: LaurentPoly, p: int, precision: int = 8) -> ZeroReport:
    """Rational and p-adic zero data for a divisor polynomial."""
    if delta.is_zero():
        return ZeroReport(p, precision, True, (), (), ())
    rational = tuple(rational_roots(delta))
    residues, obstructions = hensel_roots(delta, p, precision)
    return ZeroReport(
        prime=p,
        precision=precision,
        identically_zero=False,
        rational=rational,
        padic=tuple((r, precision) for r in residues),
        obstructions=tuple(obstructions),
    )


def filter_unit_ball(report: ZeroReport) -> ZeroReport:
    """Keep only zeros at distance less than 1 from 1: rationals with
    positive valuation of a - 1, residues congruent to 1 mod p."""
    p = report.prime
    rational = tuple((a, m) for a, m in report.rational if unit_ball_check(a, p))
    padic = tuple((r, n) for r, n in report.padic if r % p == 1)
    obstructions = tuple(r for r in report.obstructions if r % p == 1)
    return replace(report, rational=rational, padic=padic, obstructions=obstructions)
