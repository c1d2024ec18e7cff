"""Words over a lowercase variable alphabet, and inclusion systems between
finite word sets.

A word is a nonempty string of letters a-z, each letter a variable.  An
inclusion ``L <= M`` asserts that under every substitution of elements for
variables, every value of a word in L equals the value of some word in M.
Surface syntax::

    system    := inclusion (";" inclusion)*
    inclusion := wordset ("<=" | "=") wordset
    wordset   := word | "{" word ("," word)* "}"
    word      := letter+            letter := "a".."z"

Whitespace is insignificant.  ``u = v`` requires single words on both sides
and is shorthand for the inclusion ``{u} <= {v}`` (for singletons this already
forces equality of values under every substitution).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

from .errors import ParseError, UnboundVariable

ALPHABET = string.ascii_lowercase
MAX_WORD_LENGTH = 32
MAX_VARIABLES = 26


def check_word(word: str) -> str:
    if not isinstance(word, str) or not word:
        raise ValueError(f"a word must be a nonempty string, got {word!r}")
    if len(word) > MAX_WORD_LENGTH:
        raise ValueError(f"word {word!r} exceeds the length cap {MAX_WORD_LENGTH}")
    for ch in word:
        if ch not in ALPHABET:
            raise ValueError(f"word {word!r} contains {ch!r}; letters must be a-z")
    return word


def content(word: str) -> frozenset[str]:
    """The set of distinct variables occurring in the word."""
    return frozenset(word)


def content_equal(u: str, v: str) -> bool:
    """True when the two words mention exactly the same variables."""
    return set(u) == set(v)


def _dedup(words) -> tuple[str, ...]:
    seen = []
    for w in words:
        if w not in seen:
            seen.append(w)
    return tuple(seen)


@dataclass(frozen=True)
class Inclusion:
    """One inclusion: every lhs word's value lies among the rhs words' values."""

    lhs: tuple[str, ...]
    rhs: tuple[str, ...]

    def __post_init__(self):
        lhs = _dedup(check_word(w) for w in self.lhs)
        rhs = _dedup(check_word(w) for w in self.rhs)
        if not lhs or not rhs:
            raise ValueError("both word sets of an inclusion must be nonempty")
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)
        if len(self.variables) > MAX_VARIABLES:
            raise ValueError("an inclusion may mention at most 26 distinct variables")

    @cached_property
    def variables(self) -> tuple[str, ...]:
        """Distinct variables in first-occurrence order, lhs words scanned first."""
        seen: list[str] = []
        for w in self.lhs + self.rhs:
            for ch in w:
                if ch not in seen:
                    seen.append(ch)
        return tuple(seen)


@dataclass(frozen=True)
class InclusionSystem:
    inclusions: tuple[Inclusion, ...]

    def __post_init__(self):
        if not self.inclusions:
            raise ValueError("an inclusion system must contain at least one inclusion")
        object.__setattr__(self, "inclusions", tuple(self.inclusions))

    def __str__(self):
        return format_system(self)


def variables_of(inclusion: Inclusion) -> tuple[str, ...]:
    return inclusion.variables


def reverse_word(word: str) -> str:
    return word[::-1]


def dual_inclusion(inc: Inclusion) -> Inclusion:
    return Inclusion(tuple(w[::-1] for w in inc.lhs), tuple(w[::-1] for w in inc.rhs))


def dual_system(system: InclusionSystem) -> InclusionSystem:
    """Reverse every word everywhere; an involution."""
    return InclusionSystem(tuple(dual_inclusion(i) for i in system.inclusions))


# ---------------------------------------------------------------------------
# Parsing


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, expected: str):
        raise ParseError(f"expected {expected}", self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str, expected: str | None = None):
        self.skip_ws()
        if not self.text.startswith(literal, self.pos):
            self.fail(expected or repr(literal))
        self.pos += len(literal)

    def word(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] in ALPHABET:
            self.pos += 1
        if self.pos == start:
            self.fail("a word (one or more letters a-z)")
        w = self.text[start:self.pos]
        if len(w) > MAX_WORD_LENGTH:
            raise ParseError(f"word longer than {MAX_WORD_LENGTH} letters", start)
        return w

    def wordset(self) -> tuple[str, ...]:
        self.skip_ws()
        if self.peek() == "{":
            self.pos += 1
            words = [self.word()]
            self.skip_ws()
            while self.peek() == ",":
                self.pos += 1
                words.append(self.word())
                self.skip_ws()
            self.take("}", "',' or '}'")
            return tuple(words)
        return (self.word(),)

    def inclusion(self) -> Inclusion:
        lhs = self.wordset()
        self.skip_ws()
        op_pos = self.pos
        if self.peek() == "<":
            self.take("<=", "'<=' or '='")
            op = "<="
        elif self.peek() == "=":
            self.pos += 1
            op = "="
        else:
            self.fail("'<=' or '='")
        rhs = self.wordset()
        if op == "=" and (len(lhs) != 1 or len(rhs) != 1):
            raise ParseError("'=' requires a single word on both sides", op_pos)
        try:
            return Inclusion(lhs, rhs)
        except ValueError as exc:
            raise ParseError(str(exc), op_pos) from None

    def system(self) -> InclusionSystem:
        inclusions = [self.inclusion()]
        self.skip_ws()
        while self.peek() == ";":
            self.pos += 1
            inclusions.append(self.inclusion())
            self.skip_ws()
        if self.pos != len(self.text):
            self.fail("';' or end of input")
        return InclusionSystem(tuple(inclusions))


def parse_system(text: str) -> InclusionSystem:
    """Parse the surface syntax; raises ParseError with a position on bad input."""
    return _Scanner(text).system()


def format_inclusion(inc: Inclusion) -> str:
    if len(inc.lhs) == 1 and len(inc.rhs) == 1:
        return f"{inc.lhs[0]} = {inc.rhs[0]}"

    def fmt(ws):
        return ws[0] if len(ws) == 1 else "{" + ", ".join(ws) + "}"

    return f"{fmt(inc.lhs)} <= {fmt(inc.rhs)}"


def format_system(system: InclusionSystem) -> str:
    """Canonical printing; parse(format_system(s)) reproduces s exactly."""
    return " ; ".join(format_inclusion(i) for i in system.inclusions)


# ---------------------------------------------------------------------------
# Evaluation


def evaluate(word: str, substitution: Mapping[str, int], semigroup) -> int:
    """Value of the word under the substitution: a left-to-right product fold."""
    missing = sorted(set(word) - set(substitution))
    if missing:
        raise UnboundVariable(f"substitution does not cover {', '.join(missing)}")
    table = semigroup.table
    acc = substitution[word[0]]
    for ch in word[1:]:
        acc = table[acc][substitution[ch]]
    return acc
