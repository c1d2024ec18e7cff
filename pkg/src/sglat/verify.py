"""Verification over enumerated universes.

Four instruments:

* membership matrices (semigroup x class booleans over a catalog),
* the numbered claim catalog P1..P18, each checked as an exact membership
  equality between its defining systems and a union of core classes,
* randomized probes of the implication laws P19..P29 that any inclusion-closed
  system must obey (a counterexample always indicates an implementation bug),
* the witness suite showing the chain condition ``xy <= {x, y}`` cannot be cut
  out by identities alone.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import classes
from .catalog import Catalog
from .classes import member, proposition_claims, PROPOSITION_IDS
from .satisfaction import Violation, find_violation, satisfies
from .semigroups import (
    FiniteSemigroup,
    chain_of_lr,
    direct_product,
    find_embedding,
    make_semigroup,
    square_elements,
)
from .words import Inclusion, InclusionSystem, content_equal, format_system


# ---------------------------------------------------------------------------
# Membership matrices


@dataclass
class MembershipMatrix:
    ids: tuple[str, ...]
    semigroups: tuple[FiniteSemigroup, ...]
    classes: tuple[str, ...]
    bits: tuple[tuple[bool, ...], ...]  # rows follow ids, columns follow classes

    def column_set(self, name: str) -> frozenset[int]:
        col = self.classes.index(name)
        return frozenset(i for i, row in enumerate(self.bits) if row[col])

    @property
    def universe_order_bound(self) -> int:
        return max(s.order for s in self.semigroups)


def build_matrix(catalog: Catalog, class_names: Sequence[str]) -> MembershipMatrix:
    """bits[s][c] = membership of catalog semigroup s in class c.

    Rows keep the catalog's order (ascending order, then canonical form), so
    the matrix is deterministic for a given catalog.
    """
    names = tuple(class_names)
    for name in names:
        classes.get_class(name)
    ids = []
    sgs = []
    rows = []
    for entry in catalog.iter_entries():
        ids.append(entry.canonical_id)
        sgs.append(entry.semigroup)
        rows.append(tuple(member(entry.semigroup, name) for name in names))
    return MembershipMatrix(tuple(ids), tuple(sgs), names, tuple(rows))


# ---------------------------------------------------------------------------
# Claim verification (P1..P18)


@dataclass
class Discrepancy:
    semigroup_id: str
    lhs_memberships: dict[str, bool]
    rhs_membership: bool


@dataclass
class ClaimCheck:
    lhs_names: tuple[str, ...]
    rhs_union: str
    rhs_components: tuple[str, ...]
    discrepancies: list[Discrepancy] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.discrepancies


@dataclass
class PropositionReport:
    prop_id: int
    universe_order_bound: int
    checks: list[ClaimCheck]

    @property
    def equal(self) -> bool:
        return all(c.equal for c in self.checks)

    @property
    def discrepancies(self) -> list[Discrepancy]:
        return [d for c in self.checks for d in c.discrepancies]

    @property
    def lhs_names(self) -> tuple[str, ...]:
        return tuple(n for c in self.checks for n in c.lhs_names)

    @property
    def rhs_union(self) -> tuple[str, ...]:
        return tuple(c.rhs_union for c in self.checks)

    def format_text(self) -> str:
        mark = "PASS" if self.equal else f"FAIL ({len(self.discrepancies)} discrepancies)"
        parts = []
        for c in self.checks:
            parts.append(f"{' = '.join(c.lhs_names)} = {c.rhs_union}")
        line = f"P{self.prop_id} {mark}  [{'; '.join(parts)}]"
        if not self.equal:
            worst = self.discrepancies[:3]
            details = "; ".join(
                f"{d.semigroup_id}: lhs={d.lhs_memberships} rhs={d.rhs_membership}"
                for d in worst
            )
            line += f"\n  first discrepancies: {details}"
        return line

    def to_json_dict(self) -> dict:
        return {
            "prop_id": self.prop_id,
            "universe_order_bound": self.universe_order_bound,
            "equal": self.equal,
            "checks": [
                {
                    "lhs_names": list(c.lhs_names),
                    "rhs_union": c.rhs_union,
                    "equal": c.equal,
                    "discrepancies": [
                        {
                            "semigroup": d.semigroup_id,
                            "lhs": d.lhs_memberships,
                            "rhs": d.rhs_membership,
                        }
                        for d in c.discrepancies
                    ],
                }
                for c in self.checks
            ],
        }


def verify_proposition(prop_id: int, catalog: Catalog) -> PropositionReport:
    """Check one numbered claim, duals included, over every catalog semigroup."""
    checks = []
    for lhs_names, union, _components in proposition_claims(prop_id):
        check = ClaimCheck(lhs_names, union, _components)
        for entry in catalog.iter_entries():
            s = entry.semigroup
            lhs = {name: member(s, name) for name in lhs_names}
            rhs = member(s, union)
            values = set(lhs.values()) | {rhs}
            if len(values) != 1:
                check.discrepancies.append(Discrepancy(entry.canonical_id, lhs, rhs))
        checks.append(check)
    return PropositionReport(prop_id, catalog.max_order, checks)


def _verify_worker(args):
    prop_id, catalog = args
    return verify_proposition(prop_id, catalog)


def verify_propositions(
    catalog: Catalog, ids: Iterable[int] | None = None, jobs: int = 1
) -> list[PropositionReport]:
    wanted = list(ids) if ids is not None else list(PROPOSITION_IDS)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_verify_worker, [(i, catalog) for i in wanted]))
    return [verify_proposition(i, catalog) for i in wanted]


# ---------------------------------------------------------------------------
# Random systems for the implication probes


@dataclass(frozen=True)
class GeneratorParams:
    """Shape of randomly generated systems.

    Draw order per system: inclusion count, then per inclusion one lhs word,
    an rhs size, and that many rhs words; each word draws a length then its
    letters.  All draws use the seeded Mersenne Twister from ``random``.
    """

    variables: str = "xyzw"
    max_word_len: int = 4
    max_inclusions: int = 2
    max_rhs_words: int = 2


def random_word(rng: random.Random, params: GeneratorParams = GeneratorParams()) -> str:
    length = rng.randint(1, params.max_word_len)
    return "".join(rng.choice(params.variables) for _ in range(length))


def random_system(rng: random.Random, params: GeneratorParams = GeneratorParams()) -> InclusionSystem:
    inclusions = []
    for _ in range(rng.randint(1, params.max_inclusions)):
        lhs = (random_word(rng, params),)
        rhs = tuple(
            random_word(rng, params) for _ in range(rng.randint(1, params.max_rhs_words))
        )
        inclusions.append(Inclusion(lhs, rhs))
    return InclusionSystem(tuple(inclusions))


def _trial_seed(master: int, index: int) -> int:
    return (master * 0x9E3779B1 + index * 0x85EBCA77 + 1) & 0xFFFFFFFF


# ---------------------------------------------------------------------------
# Implication probes (P19..P29)

PROBE_KEYS = ("P19", "P20", "P22", "P23", "P24", "P25", "P26", "P27", "P28", "P29")
# The two word-shape laws (P21 and its mirror) are probed through their
# semantic consequences P22/P23 rather than syntactically.


@dataclass
class ProbeCounterexample:
    prop: str
    system: str
    witness_id: str
    detail: str


@dataclass
class ProbeReport:
    trials: int
    seed: int
    implications_checked: dict[str, int]
    counterexamples: list[ProbeCounterexample]

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def format_text(self) -> str:
        lines = [f"trials: {self.trials}  seed: {self.seed}"]
        for key in PROBE_KEYS:
            lines.append(f"  {key}: premise fired {self.implications_checked[key]} times")
        if self.passed:
            lines.append("no counterexamples")
        else:
            for ce in self.counterexamples:
                lines.append(
                    f"COUNTEREXAMPLE {ce.prop} on system '{ce.system}': "
                    f"{ce.detail} (witness {ce.witness_id})"
                )
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "implications_checked": dict(self.implications_checked),
            "counterexamples": [
                {
                    "prop": ce.prop,
                    "system": ce.system,
                    "witness": ce.witness_id,
                    "detail": ce.detail,
                }
                for ce in self.counterexamples
            ],
        }


class _Universe:
    """Catalog features shared by every probe trial."""

    def __init__(self, catalog: Catalog):
        self.semigroups = []
        self.ids = []
        for entry in catalog.iter_entries():
            self.semigroups.append(entry.semigroup)
            self.ids.append(entry.canonical_id)
        self.masks = {
            name: tuple(member(s, name) for s in self.semigroups)
            for name in (
                "Z", "L", "R", "IL", "IR", "GL", "GR", "RB", "IRB", "GRB_l", "GRB_r",
            )
        }
        self.nontrivial = tuple(s.order >= 2 for s in self.semigroups)
        self.has_gap = tuple(
            len(square_elements(s)) < s.order for s in self.semigroups
        )

    def region(self, inside: str, *outside: str):
        masks = self.masks
        inc = masks[inside]
        return tuple(
            inc[i] and not any(masks[o][i] for o in outside)
            for i in range(len(self.semigroups))
        )


def _single_variable_words_carried(system: InclusionSystem) -> bool:
    """Every one-letter lhs word appears verbatim in its rhs word set."""
    for inc in system.inclusions:
        for w in inc.lhs:
            if len(w) == 1 and w not in inc.rhs:
                return False
    return True


def _probe_one(universe: _Universe, system: InclusionSystem, counters, counterexamples):
    sat = tuple(satisfies(s, system) for s in universe.semigroups)
    text = format_system(system)
    n = len(sat)

    def class_contained(mask) -> int | None:
        """Index of the first mask member that fails the system, else None."""
        for i in range(n):
            if mask[i] and not sat[i]:
                return i
        return None

    def conclude_containment(key, mask, label):
        counters[key] += 1
        bad = class_contained(mask)
        if bad is not None:
            counterexamples.append(
                ProbeCounterexample(
                    key, text, universe.ids[bad], f"{label} should satisfy the system"
                )
            )

    def conclude_syntactic(key, premise_id):
        counters[key] += 1
        if not _single_variable_words_carried(system):
            counterexamples.append(
                ProbeCounterexample(
                    key,
                    text,
                    premise_id,
                    "a one-letter lhs word should reappear on the rhs",
                )
            )

    def first_witness(mask) -> int | None:
        for i in range(n):
            if mask[i] and sat[i]:
                return i
        return None

    masks = universe.masks

    # P19: a satisfying member with an element outside its square
    w = first_witness(tuple(universe.has_gap[i] and sat[i] for i in range(n)))
    if w is not None:
        conclude_syntactic("P19", universe.ids[w])

    # P20: a satisfying nontrivial null member forces all of Z in
    znontriv = tuple(masks["Z"][i] and universe.nontrivial[i] for i in range(n))
    if first_witness(znontriv) is not None:
        conclude_containment("P20", masks["Z"], "every null semigroup")

    # P22 / P23: a satisfying nontrivial left-zero (right-zero) member
    lz = tuple(masks["L"][i] and universe.nontrivial[i] for i in range(n))
    if first_witness(lz) is not None:
        conclude_containment("P22", masks["L"], "every left-zero semigroup")
    rz = tuple(masks["R"][i] and universe.nontrivial[i] for i in range(n))
    if first_witness(rz) is not None:
        conclude_containment("P23", masks["R"], "every right-zero semigroup")

    # P24: a satisfying member of IL \ L or IR \ R (both have gap elements)
    il_not_l = universe.region("IL", "L")
    ir_not_r = universe.region("IR", "R")
    w = first_witness(tuple((il_not_l[i] or ir_not_r[i]) for i in range(n)))
    if w is not None:
        conclude_syntactic("P24", universe.ids[w])

    # P25: IL \ (L u Z) forces IL in; dually for IR
    if first_witness(universe.region("IL", "L", "Z")) is not None:
        conclude_containment("P25", masks["IL"], "every inflated left-zero semigroup")
    if first_witness(universe.region("IR", "R", "Z")) is not None:
        conclude_containment("P25", masks["IR"], "every inflated right-zero semigroup")

    # P26: needs all of Z satisfied plus a member of GL \ IL (dually GR \ IR).
    # Catalog nulls decide Z-containment exactly once order 3 is present: a
    # violating substitution in any null semigroup maps onto one with at most
    # the zero and two other values.
    z_contained = class_contained(masks["Z"]) is None
    if z_contained:
        if first_witness(universe.region("GL", "IL")) is not None:
            conclude_containment("P26", masks["GL"], "every semigroup with left-zero square")
        if first_witness(universe.region("GR", "IR")) is not None:
            conclude_containment("P26", masks["GR"], "every semigroup with right-zero square")

    # P27: RB \ (L u R)
    if first_witness(universe.region("RB", "L", "R")) is not None:
        conclude_containment("P27", masks["RB"], "every rectangular band")

    # P28: IRB \ (IL u RB u IR)
    if first_witness(universe.region("IRB", "IL", "RB", "IR")) is not None:
        conclude_containment("P28", masks["IRB"], "every inflated rectangular band")

    # P29: GRB_l \ (GL u IRB); dually GRB_r \ (IRB u GR)
    if first_witness(universe.region("GRB_l", "GL", "IRB")) is not None:
        conclude_containment("P29", masks["GRB_l"], "all of GRB_l")
    if first_witness(universe.region("GRB_r", "IRB", "GR")) is not None:
        conclude_containment("P29", masks["GRB_r"], "all of GRB_r")


def _probe_chunk(args):
    catalog, seed, start, stop, params = args
    universe = _Universe(catalog)
    counters = {key: 0 for key in PROBE_KEYS}
    counterexamples: list[ProbeCounterexample] = []
    for index in range(start, stop):
        rng = random.Random(_trial_seed(seed, index))
        system = random_system(rng, params)
        _probe_one(universe, system, counters, counterexamples)
    return counters, counterexamples


def probe_metatheorems(
    catalog: Catalog,
    trials: int,
    seed: int = 0,
    params: GeneratorParams = GeneratorParams(),
    jobs: int = 1,
) -> ProbeReport:
    """Generate seeded random systems and test every applicable implication.

    Trial k uses a generator seeded from (seed, k), so reports are identical
    for any worker count.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    if jobs > 1:
        bounds = [
            (trials * w // jobs, trials * (w + 1) // jobs) for w in range(jobs)
        ]
        chunks = [(catalog, seed, a, b, params) for a, b in bounds if a < b]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_probe_chunk, chunks))
    else:
        results = [_probe_chunk((catalog, seed, 0, trials, params))]
    counters = {key: 0 for key in PROBE_KEYS}
    counterexamples: list[ProbeCounterexample] = []
    for part_counters, part_ces in results:
        for key in PROBE_KEYS:
            counters[key] += part_counters[key]
        counterexamples.extend(part_ces)
    return ProbeReport(trials, seed, counters, counterexamples)


# ---------------------------------------------------------------------------
# The non-variety witness suite


@dataclass
class WitnessReport:
    """Checks around the chain condition ``xy <= {x, y}``.

    The two-element chain satisfies it; the three-element semilattice with a
    separate zero does not, yet embeds into the chain's direct square; and
    every plain identity the chain satisfies has equal content on both sides,
    so no set of identities can admit the chain while excluding the
    semilattice.
    """

    chain_satisfies: bool
    semilattice_satisfies: bool
    semilattice_violation: Violation | None
    embedding: tuple[int, ...] | None
    identities_scanned: int
    identities_satisfied: int
    content_mismatches: list[tuple[str, str]]

    @property
    def passed(self) -> bool:
        return (
            self.chain_satisfies
            and not self.semilattice_satisfies
            and self.semilattice_violation is not None
            and self.embedding is not None
            and not self.content_mismatches
        )

    def format_text(self) -> str:
        lines = [
            f"(a) two-element chain satisfies xy <= {{x, y}}: {self.chain_satisfies}",
            f"(b) three-element semilattice satisfies it: {self.semilattice_satisfies}"
            + (
                f"  (violation: {self.semilattice_violation.describe()})"
                if self.semilattice_violation
                else ""
            ),
            f"(c) semilattice embeds into chain x chain: {self.embedding}",
            f"(d) identities satisfied by the chain: {self.identities_satisfied}"
            f" of {self.identities_scanned} scanned; content mismatches: "
            f"{self.content_mismatches or 'none'}",
            f"result: {'PASS' if self.passed else 'FAIL'}",
        ]
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "chain_satisfies": self.chain_satisfies,
            "semilattice_satisfies": self.semilattice_satisfies,
            "embedding": list(self.embedding) if self.embedding else None,
            "identities_scanned": self.identities_scanned,
            "identities_satisfied": self.identities_satisfied,
            "content_mismatches": self.content_mismatches,
            "passed": self.passed,
        }


def two_element_chain() -> FiniteSemigroup:
    return chain_of_lr([(1, "L"), (1, "L")])


def three_element_semilattice() -> FiniteSemigroup:
    """Two incomparable idempotents whose products all fall to a common zero."""
    return make_semigroup(3, [[0, 0, 0], [0, 1, 0], [0, 0, 2]], "T3")


def _words_up_to(letters: str, max_len: int) -> list[str]:
    out = []
    frontier = [""]
    for _ in range(max_len):
        frontier = [w + ch for w in frontier for ch in letters]
        out.extend(frontier)
    return out


def prop32_suite(max_word_len: int = 4, letters: str = "xyz") -> WitnessReport:
    chain = two_element_chain()
    semilattice = three_element_semilattice()
    chain_condition = InclusionSystem((Inclusion(("xy",), ("x", "y")),))

    chain_ok = satisfies(chain, chain_condition)
    sl_ok = satisfies(semilattice, chain_condition)
    sl_violation = find_violation(semilattice, chain_condition)
    embedding = find_embedding(semilattice, direct_product(chain, chain))

    words = _words_up_to(letters, max_word_len)
    scanned = 0
    satisfied = 0
    mismatches: list[tuple[str, str]] = []
    for a, u in enumerate(words):
        for v in words[a:]:
            scanned += 1
            if satisfies(chain, InclusionSystem((Inclusion((u,), (v,)),))):
                satisfied += 1
                if not content_equal(u, v):
                    mismatches.append((u, v))
    return WitnessReport(
        chain_satisfies=chain_ok,
        semilattice_satisfies=sl_ok,
        semilattice_violation=sl_violation,
        embedding=embedding,
        identities_scanned=scanned,
        identities_satisfied=satisfied,
        content_mismatches=mismatches,
    )


# ---------------------------------------------------------------------------
# Exploration between I and GRB


@dataclass
class CoverExploreReport:
    """Search log for systems empirically strictly between I and GRB.

    Exploratory only: candidates are reported for human analysis, never
    asserted against.
    """

    trials: int
    seed: int
    lower_size: int
    upper_size: int
    candidates: list[tuple[str, int]]  # (system text, member count over catalog)

    def format_text(self) -> str:
        lines = [
            f"trials: {self.trials}  seed: {self.seed}",
            f"members over the catalog: I has {self.lower_size}, GRB has {self.upper_size}",
        ]
        if self.lower_size == self.upper_size:
            lines.append("I and GRB coincide on this catalog; no gap to explore")
        if self.candidates:
            lines.append("candidate systems strictly between (need human analysis):")
            lines.extend(f"  {text}  ({size} members)" for text, size in self.candidates)
        else:
            lines.append("no strictly intermediate system found")
        return "\n".join(lines)

    def to_json_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "lower_size": self.lower_size,
            "upper_size": self.upper_size,
            "candidates": [{"system": t, "members": m} for t, m in self.candidates],
        }


def explore_cover_of_I(
    catalog: Catalog,
    trials: int,
    seed: int = 0,
    params: GeneratorParams = GeneratorParams(),
) -> CoverExploreReport:
    """Look for random systems whose catalog membership sits strictly between
    I's and GRB's."""
    sgs = list(catalog.semigroups())
    lower = frozenset(i for i, s in enumerate(sgs) if member(s, "I"))
    upper = frozenset(i for i, s in enumerate(sgs) if member(s, "GRB"))
    candidates: list[tuple[str, int]] = []
    for index in range(trials):
        rng = random.Random(_trial_seed(seed, index))
        system = random_system(rng, params)
        members = frozenset(i for i, s in enumerate(sgs) if satisfies(s, system))
        if lower < members < upper:
            candidates.append((format_system(system), len(members)))
    return CoverExploreReport(trials, seed, len(lower), len(upper), candidates)
