"""Finite group presentations: data model, text format, standard families.

Text format (one presentation per file)::

    gens: x, y          # comma-separated generator names
    rels:               # then one relator per line
    [x, y]
    x^2 y^-3

Relator tokens are ``name``, ``name^k`` with k a nonzero integer, and the
commutator sugar ``[w1, w2]`` which expands to w1 w2 w1^-1 w2^-1 and nests
over full words.  Juxtaposition is the group product; ``#`` starts a comment.
"""

from __future__ import annotations

import hashlib
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .words import IDENTITY, Word, commutator, generator, inverse, multiply, power, word


class PresentationError(ValueError):
    """Malformed presentation text; carries 1-based line/column."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = f" at line {line}" if line is not None else ""
        where += f", column {column}" if column is not None else ""
        super().__init__(message + where)


class DuplicateGeneratorError(PresentationError):
    pass


class UndeclaredGeneratorError(PresentationError):
    pass


@dataclass(frozen=True)
class FinitePresentation:
    """<x_1 .. x_n | r_1 .. r_m> with named generators.

    Generator indices (1-based) are the canonical identity; names are
    presentation-level sugar.  Relators that reduce to the identity are kept
    but flagged by trivial_relators().
    """

    generator_names: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        if len(self.generator_names) < 1:
            raise ValueError("a presentation needs at least one generator")
        if len(set(self.generator_names)) != len(self.generator_names):
            raise DuplicateGeneratorError("duplicate generator name")
        n = len(self.generator_names)
        for r in self.relators:
            if r.max_generator() > n:
                raise UndeclaredGeneratorError(
                    f"relator uses generator index {r.max_generator()} > n={n}")

    @property
    def num_generators(self) -> int:
        return len(self.generator_names)

    @property
    def num_relators(self) -> int:
        return len(self.relators)

    def trivial_relators(self) -> tuple[int, ...]:
        """1-based indices of relators that freely reduce to the identity."""
        return tuple(k + 1 for k, r in enumerate(self.relators) if r.is_identity())

    def is_commutator_relators(self) -> bool:
        """True when every relator has all exponent sums zero."""
        n = self.num_generators
        return all(all(r.exponent_sum(i) == 0 for i in range(1, n + 1))
                   for r in self.relators)


_TOKEN_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|\^-?\d+|[\[\],]|\S")


def _tokenize(text, lineno):
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        tokens.append((m.group(0), lineno, m.start() + 1))
    return tokens


class _RelatorParser:
    """Recursive-descent parser for one relator line."""

    def __init__(self, tokens, gen_index, lineno):
        self.tokens = tokens
        self.pos = 0
        self.gen_index = gen_index
        self.lineno = lineno

    def _peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def _error(self, message):
        if self.pos < len(self.tokens):
            _, line, col = self.tokens[self.pos]
        else:
            line, col = self.lineno, (self.tokens[-1][2] + len(self.tokens[-1][0])
                                      if self.tokens else 1)
        raise PresentationError(message, line, col)

    def parse_word(self, stop=()) -> Word:
        out = IDENTITY
        while self.pos < len(self.tokens) and self._peek() not in stop:
            out = multiply(out, self._parse_factor())
        return out

    def _parse_factor(self) -> Word:
        tok, line, col = self.tokens[self.pos]
        if tok == "1":
            self.pos += 1
            return IDENTITY
        if tok == "[":
            self.pos += 1
            left = self.parse_word(stop=(",",))
            if self._peek() != ",":
                self._error("expected ',' in commutator")
            self.pos += 1
            right = self.parse_word(stop=("]",))
            if self._peek() != "]":
                self._error("expected ']' closing commutator")
            self.pos += 1
            base = commutator(left, right)
        elif re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", tok):
            self.pos += 1
            if tok not in self.gen_index:
                raise UndeclaredGeneratorError(f"undeclared generator '{tok}'", line, col)
            base = generator(self.gen_index[tok])
        else:
            self._error(f"unexpected token '{tok}'")
        if self._peek() is not None and self._peek().startswith("^"):
            exp_tok, line, col = self.tokens[self.pos]
            self.pos += 1
            k = int(exp_tok[1:])
            if k == 0:
                raise PresentationError("zero exponent", line, col)
            base = power(base, k)
        return base


def _strip_comment(line):
    cut = line.find("#")
    return line if cut < 0 else line[:cut]


def parse_presentation(text: str) -> FinitePresentation:
    """Parse presentation text; relators come back freely reduced."""
    lines = text.splitlines()
    gens = None
    gen_index = {}
    relators = []
    seen_rels = False
    for lineno, raw in enumerate(lines, start=1):
        line = _strip_comment(raw).strip()
        if not line:
            continue
        if gens is None:
            if not line.startswith("gens:"):
                raise PresentationError("expected 'gens:' header", lineno, 1)
            names = [p.strip() for p in line[len("gens:"):].split(",")]
            names = [p for p in names if p]
            if not names:
                raise PresentationError("empty generator list", lineno, 1)
            for name in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_]*", name):
                    raise PresentationError(f"bad generator name '{name}'", lineno, 1)
                if name in gen_index:
                    raise DuplicateGeneratorError(f"duplicate generator '{name}'", lineno, 1)
                gen_index[name] = len(gen_index) + 1
            gens = tuple(names)
            continue
        if not seen_rels:
            if not line.startswith("rels:"):
                raise PresentationError("expected 'rels:' header", lineno, 1)
            seen_rels = True
            line = line[len("rels:"):].strip()
            if not line:
                continue
        parser = _RelatorParser(_tokenize(line, lineno), gen_index, lineno)
        relators.append(parser.parse_word())
    if gens is None:
        raise PresentationError("empty presentation", 1, 1)
    return FinitePresentation(gens, tuple(relators))


def format_word(w: Word, names) -> str:
    if w.is_identity():
        return "1"
    parts = []
    for g, e in w.letters:
        parts.append(names[g - 1] if e == 1 else f"{names[g - 1]}^{e}")
    return " ".join(parts)


def format_presentation(p: FinitePresentation) -> str:
    """Canonical text; parse(format(parse(s))) == parse(s)."""
    lines = ["gens: " + ", ".join(p.generator_names), "rels:"]
    lines.extend(format_word(r, p.generator_names) for r in p.relators)
    return "\n".join(lines) + "\n"


def fingerprint(p: FinitePresentation) -> str:
    """sha256 of the canonical text; changes iff the canonical text does."""
    return hashlib.sha256(format_presentation(p).encode()).hexdigest()


def surface_presentation(g: int) -> FinitePresentation:
    """Orientable genus-g surface group <x_1,y_1,..,x_g,y_g | [x_1,y_1]..[x_g,y_g]>."""
    if g < 1:
        raise ValueError("genus must be >= 1")
    names = []
    for i in range(1, g + 1):
        names.extend([f"x{i}", f"y{i}"])
    rel = IDENTITY
    for i in range(g):
        rel = multiply(rel, commutator(generator(2 * i + 1), generator(2 * i + 2)))
    return FinitePresentation(tuple(names), (rel,))


def seifert_euler(pairs, b: int) -> Fraction:
    """Euler number e = -b - sum(beta_i / alpha_i), exact."""
    e = Fraction(-b)
    for alpha, beta in pairs:
        e -= Fraction(beta, alpha)
    return e


def seifert_presentation(g: int, pairs, b: int) -> FinitePresentation:
    """Fundamental group of an orientable Seifert fibration over a genus-g base.

    Generators x_1,y_1,..,x_g,y_g,z_1,..,z_s,h.  Relator order is fixed: the
    long relator [x_1,y_1]..[x_g,y_g] z_1..z_s h^-b first, then the torsion
    relators z_j^alpha_j h^beta_j, then the centrality relators [x_i,h],
    [y_i,h], [z_j,h].  Echelon output depends on this order.
    """
    if g < 0:
        raise ValueError("genus must be >= 0")
    for alpha, beta in pairs:
        if alpha < 2:
            raise ValueError(f"alpha must be >= 2, got {alpha}")
        if gcd(alpha, beta) != 1:
            raise ValueError(f"({alpha}, {beta}) is not coprime")
    s = len(pairs)
    names = []
    for i in range(1, g + 1):
        names.extend([f"x{i}", f"y{i}"])
    names.extend(f"z{j}" for j in range(1, s + 1))
    names.append("h")
    n = 2 * g + s + 1
    h = n
    long_rel = IDENTITY
    for i in range(g):
        long_rel = multiply(long_rel, commutator(generator(2 * i + 1), generator(2 * i + 2)))
    for j in range(s):
        long_rel = multiply(long_rel, generator(2 * g + 1 + j))
    long_rel = multiply(long_rel, power(generator(h), -b))
    relators = [long_rel]
    for j, (alpha, beta) in enumerate(pairs):
        relators.append(multiply(power(generator(2 * g + 1 + j), alpha),
                                 power(generator(h), beta)))
    for i in range(1, n):
        relators.append(commutator(generator(i), generator(h)))
    return FinitePresentation(tuple(names), tuple(relators))


def whitehead_presentation() -> FinitePresentation:
    """Whitehead link group, one 16-letter relator of weight 4."""
    return parse_presentation(
        "gens: x, y\n"
        "rels:\n"
        "x^-1 y^-1 x y x^-1 y x y^-1 x y x^-1 y^-1 x y^-1 x^-1 y\n")


def borromean_presentation() -> FinitePresentation:
    """Borromean rings group <x,y,z | [x,[y,z]], [z,[y,x]]>."""
    return parse_presentation("gens: x, y, z\nrels:\n[x, [y, z]]\n[z, [y, x]]\n")
