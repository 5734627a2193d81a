"""Propositional language: AST, parser, printer, and bounded formula generators.

The language has negation, disjunction, conjunction and implication over
propositional letters.  ASCII connectives are ``~ | & ->`` with the Unicode
aliases ``¬ ∨ ∧ →`` accepted on input.  Precedence is ``~ > & > | > ->`` and
``->`` associates to the right.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Iterator


class ParseError(ValueError):
    """Malformed formula text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


@dataclass(frozen=True, slots=True)
class Formula:
    def __str__(self) -> str:
        return render(self)


@dataclass(frozen=True, slots=True)
class Letter(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Neg(Formula):
    child: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Imp(Formula):
    left: Formula
    right: Formula


_BINARY_PREC = {Imp: 1, Or: 2, And: 3}
_BINARY_SYM = {Imp: " -> ", Or: " | ", And: " & "}


def _prec(f: Formula) -> int:
    return _BINARY_PREC.get(type(f), 4)


def render(f: Formula) -> str:
    """Minimal-parentheses text for `f`; ``parse(render(f)) == f``."""
    if isinstance(f, Letter):
        return f.name
    if isinstance(f, Neg):
        inner = render(f.child)
        if isinstance(f.child, (Letter, Neg)):
            return "~" + inner
        return "~(" + inner + ")"
    prec = _BINARY_PREC[type(f)]
    left, right = render(f.left), render(f.right)
    if isinstance(f, Imp):
        # right-associative: parenthesize an implication on the left
        if _prec(f.left) <= prec:
            left = "(" + left + ")"
        if _prec(f.right) < prec:
            right = "(" + right + ")"
    else:
        # left-associative: parenthesize an equal-precedence right child
        if _prec(f.left) < prec:
            left = "(" + left + ")"
        if _prec(f.right) <= prec:
            right = "(" + right + ")"
    return left + _BINARY_SYM[type(f)] + right


_TOKEN_RE = re.compile(r"->|→|[~¬|∨&∧()]|[a-z][a-zA-Z0-9_]*")
_ALIASES = {"→": "->", "¬": "~", "∨": "|", "∧": "&"}


def _tokenize(text: str) -> list[tuple[str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        tok = _ALIASES.get(m.group(), m.group())
        tokens.append((tok, pos))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> str | None:
        if self.index < len(self.tokens):
            return self.tokens[self.index][0]
        return None

    def _pos(self) -> int:
        if self.index < len(self.tokens):
            return self.tokens[self.index][1]
        return len(self.text)

    def _advance(self) -> str:
        tok = self.tokens[self.index][0]
        self.index += 1
        return tok

    def imp(self) -> Formula:
        left = self.dis()
        if self._peek() == "->":
            self._advance()
            return Imp(left, self.imp())
        return left

    def dis(self) -> Formula:
        f = self.con()
        while self._peek() == "|":
            self._advance()
            f = Or(f, self.con())
        return f

    def con(self) -> Formula:
        f = self.neg()
        while self._peek() == "&":
            self._advance()
            f = And(f, self.neg())
        return f

    def neg(self) -> Formula:
        if self._peek() == "~":
            self._advance()
            return Neg(self.neg())
        return self.atom()

    def atom(self) -> Formula:
        tok = self._peek()
        if tok == "(":
            self._advance()
            f = self.imp()
            if self._peek() != ")":
                raise ParseError("expected ')'", self._pos())
            self._advance()
            return f
        if tok is not None and tok[0].isalpha():
            self._advance()
            return Letter(tok)
        raise ParseError("expected a letter or '('", self._pos())


def parse(text: str) -> Formula:
    """Parse formula text into an AST."""
    parser = _Parser(text)
    f = parser.imp()
    if parser.index != len(parser.tokens):
        raise ParseError(f"unexpected token {parser._peek()!r}", parser._pos())
    return f


def letters(f: Formula) -> set[str]:
    """The set of letter names occurring in `f`."""
    if isinstance(f, Letter):
        return {f.name}
    if isinstance(f, Neg):
        return letters(f.child)
    return letters(f.left) | letters(f.right)


def depth(f: Formula) -> int:
    """Connective-nesting depth; a bare letter has depth 0."""
    if isinstance(f, Letter):
        return 0
    if isinstance(f, Neg):
        return 1 + depth(f.child)
    return 1 + max(depth(f.left), depth(f.right))


class FormulaSet:
    """Finite set of formulas, kept in canonical (rendered-string) order."""

    __slots__ = ("formulas",)

    def __init__(self, formulas: Iterable[Formula] = ()):
        self.formulas: tuple[Formula, ...] = tuple(
            sorted(set(formulas), key=render)
        )

    @classmethod
    def from_text(cls, text: str) -> "FormulaSet":
        """Parse a comma-separated list of formulas; blank text means the empty set."""
        parts = [part for part in text.split(",") if part.strip()]
        return cls(parse(part) for part in parts)

    def letters(self) -> set[str]:
        out: set[str] = set()
        for f in self.formulas:
            out |= letters(f)
        return out

    def union(self, other: Iterable[Formula]) -> "FormulaSet":
        return FormulaSet((*self.formulas, *other))

    def __iter__(self) -> Iterator[Formula]:
        return iter(self.formulas)

    def __len__(self) -> int:
        return len(self.formulas)

    def __contains__(self, f: object) -> bool:
        return f in self.formulas

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FormulaSet) and self.formulas == other.formulas

    def __hash__(self) -> int:
        return hash(self.formulas)

    def __str__(self) -> str:
        return "{" + ", ".join(render(f) for f in self.formulas) + "}"

    def __repr__(self) -> str:
        return f"FormulaSet({list(self.formulas)!r})"


def enumerate_formulas(names: Iterable[str], max_depth: int) -> Iterator[Formula]:
    """Every formula over `names` with depth <= `max_depth`, each exactly once.

    Yields level by level (depth 0, then exactly-depth 1, ...) in a fixed
    deterministic order, so prefixes of the stream are stable.
    """
    sorted_names = sorted(set(names))
    if not sorted_names:
        raise ValueError("letter set must be nonempty")
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    pool: list[Formula] = [Letter(n) for n in sorted_names]
    yield from pool
    prev_start = 0  # index in `pool` where the previous level begins
    for _ in range(max_depth):
        level: list[Formula] = [Neg(f) for f in pool[prev_start:]]
        for ctor in (Or, And, Imp):
            for i, a in enumerate(pool):
                for j, b in enumerate(pool):
                    if i >= prev_start or j >= prev_start:
                        level.append(ctor(a, b))
        yield from level
        prev_start = len(pool)
        pool.extend(level)


def draw_formula(rng: random.Random, names: list[str], max_depth: int) -> Formula:
    """One random formula over `names` with depth <= `max_depth`."""
    if max_depth <= 0:
        return Letter(rng.choice(names))
    kind = rng.randrange(5)
    if kind == 0:
        return Letter(rng.choice(names))
    if kind == 1:
        return Neg(draw_formula(rng, names, max_depth - 1))
    ctor = (Or, And, Imp)[kind - 2]
    return ctor(
        draw_formula(rng, names, max_depth - 1),
        draw_formula(rng, names, max_depth - 1),
    )


def random_formula(names: Iterable[str], max_depth: int, seed: int) -> Formula:
    """Seed-deterministic random formula over `names` with depth <= `max_depth`."""
    sorted_names = sorted(set(names))
    if not sorted_names:
        raise ValueError("letter set must be nonempty")
    return draw_formula(random.Random(seed), sorted_names, max_depth)
