"""Group presentations with integer-exponent relator words.

A word is a reduced sequence of syllables (generator index, nonzero exponent).
Relators are stored as equations left = right; the matrix constructions
flatten them to left * right^-1 only at the point of differentiation, so the
stored form still prints back the way it was written.

The text format, one directive per line, # comments allowed:

    prime 3
    generators g1 g2 g3
    alpha g1=1 g2=1           # optional, defaults to 1
    relator (g2*g1^-1)^9
    relator g2*g1 = g1*g2

Word grammar: word := term {'*' term}; term := atom ['^' int];
atom := ident | '(' word ')' | '[' word ',' word ']', where [x, y] is the
commutator x^-1 * y^-1 * x * y and int is a nonzero 64-bit integer.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateGenerator, ParseError, UnknownGenerator, ZeroExponent

_EXP_LIMIT = 2 ** 63


def reduce_syllables(sylls) -> tuple[tuple[int, int], ...]:
    """Merge adjacent same-generator syllables, dropping cancellations."""
    out: list[list[int]] = []
    for g, e in sylls:
        if e == 0:
            continue
        if out and out[-1][0] == g:
            out[-1][1] += e
            if out[-1][1] == 0:
                out.pop()
        else:
            out.append([g, e])
    return tuple((g, e) for g, e in out)


@dataclass(frozen=True)
class Word:
    syllables: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def of(sylls) -> "Word":
        return Word(reduce_syllables(sylls))

    def is_identity(self) -> bool:
        return not self.syllables

    def __mul__(self, other: "Word") -> "Word":
        return Word(reduce_syllables(self.syllables + other.syllables))

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.syllables)))

    def __pow__(self, n: int) -> "Word":
        if n == 0:
            return Word()
        base = self if n > 0 else self.inverse()
        out = base
        for _ in range(abs(n) - 1):
            out = out * base
        return out

    def letter_length(self) -> int:
        return sum(abs(e) for _, e in self.syllables)


def word_mul(u: Word, v: Word) -> Word:
    return u * v


def word_inv(u: Word) -> Word:
    return u.inverse()


@dataclass(frozen=True)
class Relator:
    left: Word
    right: Word = Word()

    def flatten(self) -> Word:
        """The single word whose vanishing this relation asserts."""
        return self.left * self.right.inverse()


@dataclass(frozen=True)
class Presentation:
    prime: int
    generators: tuple[str, ...]
    relators: tuple[Relator, ...]
    alpha: tuple[int, ...]

    def __post_init__(self):
        assert len(self.alpha) == len(self.generators)

    @property
    def n_generators(self) -> int:
        return len(self.generators)


def total_degree(word: Word, pres: Presentation) -> int:
    """Image of the word under the exponent weighting: sum of alpha_i * e."""
    return sum(pres.alpha[g] * e for g, e in word.syllables)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    alpha_all_one: bool
    relator_degrees: tuple[int, ...]
    failures: tuple[str, ...]


def validate_presentation(pres: Presentation) -> ValidationReport:
    """Check the hypotheses the matrix theory needs: every generator weight
    is 1 and every relator has total degree 0. Reports, never raises."""
    failures: list[str] = []
    alpha_ok = all(e == 1 for e in pres.alpha)
    if not alpha_ok:
        bad = [pres.generators[i] for i, e in enumerate(pres.alpha) if e != 1]
        failures.append("generator weight is not 1 for: " + " ".join(bad))
    degrees = []
    for j, rel in enumerate(pres.relators, start=1):
        d = total_degree(rel.flatten(), pres)
        degrees.append(d)
        if d != 0:
            failures.append(f"relator {j} has total degree {d}")
    return ValidationReport(
        ok=not failures,
        alpha_all_one=alpha_ok,
        relator_degrees=tuple(degrees),
        failures=tuple(failures),
    )


# -- parsing -----------------------------------------------------------------

_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|-?\d+|[*^()\[\],]|\S")


class _WordParser:
    def __init__(self, text: str, gen_index: dict[str, int], line: int, col_offset: int):
        self.text = text
        self.gen_index = gen_index
        self.line = line
        self.col_offset = col_offset
        self.tokens: list[tuple[str, int]] = []
        for m in _TOKEN_RE.finditer(text):
            self.tokens.append((m.group(), m.start()))
        self.pos = 0

    def _col(self, tok_pos: int) -> int:
        return self.col_offset + tok_pos + 1

    def error(self, msg: str, tok_pos: int | None = None, cls=ParseError):
        at = tok_pos if tok_pos is not None else (
            self.tokens[self.pos][1] if self.pos < len(self.tokens) else len(self.text)
        )
        raise cls(msg, self.line, self._col(at))

    def peek(self) -> str | None:
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, int]:
        if self.pos >= len(self.tokens):
            self.error("unexpected end of word")
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, sym: str):
        tok, at = self.take()
        if tok != sym:
            self.error(f"expected {sym!r}, found {tok!r}", at)

    def parse(self) -> Word:
        w = self.word()
        if self.pos != len(self.tokens):
            self.error(f"trailing input {self.peek()!r}")
        return w

    def word(self) -> Word:
        w = self.term()
        while self.peek() == "*":
            self.take()
            w = w * self.term()
        return w

    def term(self) -> Word:
        w = self.atom()
        if self.peek() == "^":
            self.take()
            tok, at = self.take()
            if not re.fullmatch(r"-?\d+", tok):
                self.error(f"expected an integer exponent, found {tok!r}", at)
            e = int(tok)
            if e == 0:
                self.error("exponent 0 is not allowed", at, ZeroExponent)
            if not -_EXP_LIMIT < e < _EXP_LIMIT:
                self.error("exponent out of 64-bit range", at)
            w = w ** e
        return w

    def atom(self) -> Word:
        tok, at = self.take()
        if tok == "(":
            if self.peek() == ")":
                self.take()
                return Word(())
            w = self.word()
            self.expect(")")
            return w
        if tok == "[":
            x = self.word()
            self.expect(",")
            y = self.word()
            self.expect("]")
            return x.inverse() * y.inverse() * x * y
        if re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            idx = self.gen_index.get(tok)
            if idx is None:
                self.error(f"unknown generator {tok!r}", at, UnknownGenerator)
            return Word(((idx, 1),))
        self.error(f"expected a generator, '(' or '[', found {tok!r}", at)
        raise AssertionError("unreachable")


def parse_word(text: str, generators, line: int = 1, col_offset: int = 0) -> Word:
    gen_index = {name: i for i, name in enumerate(generators)}
    return _WordParser(text, gen_index, line, col_offset).parse()


def parse_presentation(text: str) -> Presentation:
    prime: int | None = None
    generators: list[str] = []
    gen_index: dict[str, int] = {}
    alpha: dict[int, int] = {}
    relators: list[Relator] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        word_, _, rest = stripped.partition(" ")
        rest_offset = indent + len(word_) + 1
        if word_ == "prime":
            if prime is not None:
                raise ParseError("prime given twice", lineno, 1)
            try:
                prime = int(rest.strip())
            except ValueError:
                raise ParseError(f"bad prime {rest.strip()!r}", lineno, rest_offset + 1)
            if prime < 2 or any(prime % q == 0 for q in range(2, int(prime**0.5) + 1)):
                raise ParseError(f"not a prime: {rest.strip()!r}", lineno, rest_offset + 1)
        elif word_ == "generators":
            if generators:
                raise ParseError("generators given twice", lineno, 1)
            for name in rest.split():
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise ParseError(f"bad generator name {name!r}", lineno, 1)
                if name in gen_index:
                    raise DuplicateGenerator(f"generator {name!r} declared twice", lineno, 1)
                gen_index[name] = len(generators)
                generators.append(name)
            if not generators:
                raise ParseError("generators directive lists no names", lineno, 1)
        elif word_ == "alpha":
            if not generators:
                raise ParseError("alpha before generators", lineno, 1)
            for item in re.sub(r"\s*=\s*", "=", rest).split():
                name, eq, val = item.partition("=")
                if not eq:
                    raise ParseError(f"alpha entries look like name=int, got {item!r}", lineno, 1)
                if name not in gen_index:
                    raise UnknownGenerator(f"unknown generator {name!r}", lineno, 1)
                try:
                    alpha[gen_index[name]] = int(val)
                except ValueError:
                    raise ParseError(f"bad weight {val!r} for {name}", lineno, 1)
        elif word_ == "relator":
            if not generators:
                raise ParseError("relator before generators", lineno, 1)
            if rest.count("=") > 1:
                raise ParseError("more than one '=' in a relator", lineno, 1)
            left_text, eq, right_text = rest.partition("=")
            left = parse_word(left_text, generators, lineno, rest_offset)
            if eq:
                right = parse_word(right_text, generators, lineno, rest_offset + len(left_text) + 1)
            else:
                right = Word()
            relators.append(Relator(left, right))
        else:
            raise ParseError(f"unknown directive {word_!r}", lineno, indent + 1)
    if prime is None:
        raise ParseError("missing prime directive")
    if not generators:
        raise ParseError("missing generators directive")
    alphas = tuple(alpha.get(i, 1) for i in range(len(generators)))
    return Presentation(prime, tuple(generators), tuple(relators), alphas)


def format_word(w: Word, generators) -> str:
    if w.is_identity():
        return "()"
    parts = []
    for g, e in w.syllables:
        parts.append(generators[g] if e == 1 else f"{generators[g]}^{e}")
    return "*".join(parts)


def format_presentation(pres: Presentation) -> str:
    lines = [f"prime {pres.prime}", "generators " + " ".join(pres.generators)]
    if any(e != 1 for e in pres.alpha):
        lines.append("alpha " + " ".join(f"{n}={e}" for n, e in zip(pres.generators, pres.alpha)))
    for rel in pres.relators:
        if rel.right.is_identity():
            lines.append(f"relator {format_word(rel.left, pres.generators)}")
        else:
            lines.append(
                f"relator {format_word(rel.left, pres.generators)}"
                f" = {format_word(rel.right, pres.generators)}"
            )
    return "\n".join(lines) + "\n"
