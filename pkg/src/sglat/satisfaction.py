"""Decide whether a finite semigroup satisfies an inclusion system.

Every variable occurring in an inclusion is universally quantified; variables
absent from an inclusion are never enumerated.  Substitutions run in odometer
order over the inclusion's variables (first-occurrence order, elements
ascending), which makes the first reported violation deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .semigroups import FiniteSemigroup
from .words import Inclusion, InclusionSystem


@dataclass
class EvalCounter:
    """Per-invocation instrumentation: substitutions evaluated per inclusion.

    When a system is satisfied the checker performs exactly n**v substitutions
    for an inclusion with v variables over an order-n semigroup.
    """

    per_inclusion: list[int] = field(default_factory=list)

    @classmethod
    def for_system(cls, system: InclusionSystem) -> "EvalCounter":
        return cls([0] * len(system.inclusions))

    @property
    def total(self) -> int:
        return sum(self.per_inclusion)


@dataclass
class Violation:
    """A witnessing substitution under which some lhs word misses every rhs value."""

    inclusion_index: int
    substitution: dict[str, int]
    lhs_word: str
    lhs_value: int
    rhs_values: tuple[tuple[str, int], ...]

    def describe(self) -> str:
        sub = " ".join(f"{v}={e}" for v, e in self.substitution.items())
        rhs = ", ".join(f"{w} -> {e}" for w, e in self.rhs_values)
        return (
            f"inclusion {self.inclusion_index}: under {sub}, "
            f"{self.lhs_word} -> {self.lhs_value} but rhs gives {{{rhs}}}"
        )


@lru_cache(maxsize=None)
def _compile(inc: Inclusion):
    """Words as tuples of variable positions, for fast evaluation in the hot loop."""
    pos = {v: i for i, v in enumerate(inc.variables)}
    lhs = tuple(tuple(pos[ch] for ch in w) for w in inc.lhs)
    rhs = tuple(tuple(pos[ch] for ch in w) for w in inc.rhs)
    return inc.variables, lhs, rhs


def satisfies(s: FiniteSemigroup, system: InclusionSystem, counter: EvalCounter | None = None) -> bool:
    """True when every inclusion holds under every substitution."""
    n = s.order
    table = s.table
    counts = None
    if counter is not None:
        if not counter.per_inclusion:
            counter.per_inclusion = [0] * len(system.inclusions)
        counts = counter.per_inclusion
    rng = range(n)
    for k, inc in enumerate(system.inclusions):
        variables, lhs, rhs = _compile(inc)
        for sub in itertools.product(rng, repeat=len(variables)):
            if counts is not None:
                counts[k] += 1
            rhs_vals = set()
            for w in rhs:
                acc = sub[w[0]]
                for p in w[1:]:
                    acc = table[acc][sub[p]]
                rhs_vals.add(acc)
            for w in lhs:
                acc = sub[w[0]]
                for p in w[1:]:
                    acc = table[acc][sub[p]]
                if acc not in rhs_vals:
                    return False
    return True


def find_violation(s: FiniteSemigroup, system: InclusionSystem) -> Violation | None:
    """The first violation in (inclusion index, substitution) order, or None."""
    n = s.order
    table = s.table
    for k, inc in enumerate(system.inclusions):
        variables, lhs, rhs = _compile(inc)
        for sub in itertools.product(range(n), repeat=len(variables)):
            rhs_pairs = []
            rhs_vals = set()
            for word, w in zip(inc.rhs, rhs):
                acc = sub[w[0]]
                for p in w[1:]:
                    acc = table[acc][sub[p]]
                rhs_pairs.append((word, acc))
                rhs_vals.add(acc)
            for word, w in zip(inc.lhs, lhs):
                acc = sub[w[0]]
                for p in w[1:]:
                    acc = table[acc][sub[p]]
                if acc not in rhs_vals:
                    return Violation(
                        inclusion_index=k,
                        substitution=dict(zip(variables, sub)),
                        lhs_word=word,
                        lhs_value=acc,
                        rhs_values=tuple(rhs_pairs),
                    )
    return None


def satisfies_all(s: FiniteSemigroup, systems: Sequence[InclusionSystem]) -> list[bool]:
    """Elementwise satisfaction, in input order."""
    return [satisfies(s, system) for system in systems]
