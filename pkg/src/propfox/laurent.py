"""Laurent polynomials in one variable g over the rationals.

A value is a finite map exponent -> nonzero rational coefficient. Exponents
may be negative; the units of this ring are exactly the monomials c*g^k with
c != 0, and "equal up to a unit" is the equivalence that matters for GCD
output, which normalize_associate picks a representative of: an honest
polynomial with nonzero constant term and leading coefficient 1.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction

from .errors import DivisionByZero, NotAUnit
from .scalars import format_rational, parse_rational

SYMBOL = "g"


class LaurentPoly:
    """Immutable by convention: every operation builds a fresh term map."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c != 0:
                    c0 = t.get(k)
                    c = c if c0 is None else c0 + c
                    if c != 0:
                        t[int(k)] = c
                    elif int(k) in t:
                        del t[int(k)]
        self.terms = t
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: Fraction(1)})

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(c)})

    @staticmethod
    def monomial(exp: int, coeff=1) -> "LaurentPoly":
        return LaurentPoly({exp: Fraction(coeff)})

    @staticmethod
    def gamma(exp: int = 1) -> "LaurentPoly":
        """The distinguished unit g^exp."""
        return LaurentPoly({exp: Fraction(1)})

    # -- structure ---------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def min_exp(self) -> int:
        assert self.terms, "zero has no exponent range"
        return min(self.terms)

    def max_exp(self) -> int:
        assert self.terms, "zero has no exponent range"
        return max(self.terms)

    def coeff(self, exp: int) -> Fraction:
        return self.terms.get(exp, Fraction(0))

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def is_one(self) -> bool:
        return self.terms == {0: Fraction(1)}

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        r._hash = None
        return r

    def __neg__(self):
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {k: -c for k, c in self.terms.items()}
        r._hash = None
        return r

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.const(other)
        out: dict[int, Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = k1 + k2
                s = out.get(k, 0) + c1 * c2
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = out
        r._hash = None
        return r

    __rmul__ = __mul__

    def scale(self, c) -> "LaurentPoly":
        c = Fraction(c)
        if c == 0:
            return LaurentPoly.zero()
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {k: v * c for k, v in self.terms.items()}
        r._hash = None
        return r

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by the unit g^k."""
        r = LaurentPoly.__new__(LaurentPoly)
        r.terms = {e + k: c for e, c in self.terms.items()}
        r._hash = None
        return r

    def invert_unit(self) -> "LaurentPoly":
        if len(self.terms) != 1:
            raise NotAUnit(f"not a monomial, cannot invert: {self}")
        ((k, c),) = self.terms.items()
        return LaurentPoly({-k: Fraction(1) / c})

    def eval_at(self, a) -> Fraction:
        a = Fraction(a)
        if a == 0:
            if self.terms and self.min_exp() < 0:
                raise DivisionByZero("negative powers evaluated at 0")
            return self.coeff(0)
        total = Fraction(0)
        for k, c in self.terms.items():
            total += c * a ** k
        return total

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"


def ring_ops():
    """The ring bundle: the handful of closures generic matrix code needs."""
    return {
        "zero": LaurentPoly.zero,
        "one": LaurentPoly.one,
        "add": lambda a, b: a + b,
        "sub": lambda a, b: a - b,
        "mul": lambda a, b: a * b,
        "neg": lambda a: -a,
        "invert_unit": lambda a: a.invert_unit(),
    }


# -- polynomial division and GCD -------------------------------------------


def _poly_divmod(f: LaurentPoly, d: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
    """Standard division for honest polynomials (min exponents >= 0)."""
    assert not d.is_zero()
    assert f.is_zero() or f.min_exp() >= 0
    assert d.min_exp() >= 0
    q = LaurentPoly.zero()
    r = f
    dd = d.max_exp()
    lc = d.coeff(dd)
    while not r.is_zero() and r.max_exp() >= dd:
        k = r.max_exp() - dd
        c = r.coeff(r.max_exp()) / lc
        t = LaurentPoly.monomial(k, c)
        q = q + t
        r = r - t * d
    return q, r


def div_exact(f: LaurentPoly, d: LaurentPoly) -> LaurentPoly:
    """f / d when d divides f in the Laurent ring; raises ValueError if not."""
    if d.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return LaurentPoly.zero()
    sf, sd = f.min_exp(), d.min_exp()
    q, r = _poly_divmod(f.shift(-sf), d.shift(-sd))
    if not r.is_zero():
        raise ValueError("does not divide exactly")
    return q.shift(sf - sd)


def laurent_divides(d: LaurentPoly, f: LaurentPoly) -> bool:
    if d.is_zero():
        return f.is_zero()
    if f.is_zero():
        return True
    try:
        div_exact(f, d)
        return True
    except ValueError:
        return False


def normalize_associate(f: LaurentPoly) -> LaurentPoly:
    """The canonical associate: zero stays zero, anything else becomes the
    monic polynomial with nonzero constant term obtained by stripping the
    unit c*g^k."""
    if f.is_zero():
        return f
    shifted = f.shift(-f.min_exp())
    return shifted.scale(Fraction(1) / shifted.coeff(shifted.max_exp()))


def _gcd_pair(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    a = normalize_associate(a)
    b = normalize_associate(b)
    while not b.is_zero():
        _, r = _poly_divmod(a, b)
        a, b = b, normalize_associate(r)
    return a


def gcd_many(fs) -> LaurentPoly:
    """GCD of any number of Laurent polynomials, as the canonical associate.

    The empty collection and the all-zero collection both give 0 (the GCD in
    the ideal sense: the generator of the zero ideal).
    """
    acc = LaurentPoly.zero()
    for f in fs:
        if f.is_zero():
            continue
        acc = _gcd_pair(acc, f) if not acc.is_zero() else normalize_associate(f)
        if acc.is_one():
            break
    return acc


def content_valuation(f: LaurentPoly, p: int) -> int | None:
    """v_p of the rational content (GCD of the coefficients); None for 0."""
    if f.is_zero():
        return None
    num = 0
    den = 1
    for c in f.terms.values():
        num = math.gcd(num, abs(c.numerator))
        den = den * c.denominator // math.gcd(den, c.denominator)
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


# -- text form ---------------------------------------------------------------


def format_laurent(f: LaurentPoly) -> str:
    """Descending powers; "g^2 - 5*g + 4", "3*g^-1", "0"."""
    if f.is_zero():
        return "0"
    parts = []
    for exp in sorted(f.terms, reverse=True):
        c = f.terms[exp]
        mag = abs(c)
        if exp == 0:
            body = format_rational(mag)
        else:
            gpart = SYMBOL if exp == 1 else f"{SYMBOL}^{exp}"
            body = gpart if mag == 1 else f"{format_rational(mag)}*{gpart}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:(?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*(?P<g1>g)(?:\^(?P<e1>-?\d+))?)?"
    r"|(?P<g2>g)(?:\^(?P<e2>-?\d+))?)"
)


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of format_laurent, whitespace tolerant. Raises ValueError."""
    s = text.strip()
    if not s:
        raise ValueError("empty polynomial text")
    pos = 0
    terms: list[tuple[int, Fraction]] = []
    first = True
    while pos < len(s):
        m = _TERM_RE.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial syntax at offset {pos}: {text!r}")
        sign = m.group("sign")
        if sign is None and not first:
            raise ValueError(f"missing +/- between terms: {text!r}")
        neg = sign == "-"
        if m.group("coeff") is not None:
            c = parse_rational(m.group("coeff"))
            if m.group("g1"):
                e = int(m.group("e1")) if m.group("e1") else 1
            else:
                e = 0
        else:
            c = Fraction(1)
            e = int(m.group("e2")) if m.group("e2") else 1
        terms.append((e, -c if neg else c))
        pos = m.end()
        first = False
    return LaurentPoly(terms)
