"""Finite semigroups given by Cayley tables over the elements 0..n-1.

``table[i][j]`` is the product ``i*j``.  Every constructor verifies
associativity exhaustively, so a ``FiniteSemigroup`` value is always a genuine
semigroup.  All values are immutable and safe to share between workers.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    FormatError,
    IndexOutOfRange,
    InvalidParams,
    NotAssociative,
    NotChainLR,
    NotRectangularBand,
)

Table = tuple[tuple[int, ...], ...]


def associativity_failure(table: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """First triple (i, j, k) with (i*j)*k != i*(j*k), or None if associative."""
    n = len(table)
    for i in range(n):
        row_i = table[i]
        for j in range(n):
            row_ij = table[row_i[j]]
            row_j = table[j]
            for k in range(n):
                if row_ij[k] != row_i[row_j[k]]:
                    return (i, j, k)
    return None


@dataclass(frozen=True)
class FiniteSemigroup:
    """An order-n semigroup as an n x n Cayley table of element indices."""

    order: int
    table: Table
    label: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise InvalidParams(f"order must be a positive integer, got {self.order!r}")
        rows = tuple(tuple(row) for row in self.table)
        if len(rows) != self.order or any(len(row) != self.order for row in rows):
            raise IndexOutOfRange(
                f"table must be {self.order}x{self.order}, got shape "
                f"{len(rows)}x{tuple(len(r) for r in rows)}"
            )
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < self.order:
                    raise IndexOutOfRange(
                        f"table[{i}][{j}] = {v!r} is not an element index in [0, {self.order})"
                    )
        object.__setattr__(self, "table", rows)
        bad = associativity_failure(rows)
        if bad is not None:
            raise NotAssociative(bad)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    @property
    def elements(self) -> range:
        return range(self.order)

    def __repr__(self):
        tag = f", label={self.label!r}" if self.label else ""
        return f"FiniteSemigroup(order={self.order}{tag})"


def make_semigroup(order: int, table: Sequence[Sequence[int]], label: str | None = None) -> FiniteSemigroup:
    """Build a semigroup, failing with NotAssociative / IndexOutOfRange as appropriate."""
    return FiniteSemigroup(order, tuple(tuple(row) for row in table), label)


# ---------------------------------------------------------------------------
# Constructions


def left_zero(n: int) -> FiniteSemigroup:
    """xy = x on n elements."""
    _require_size(n)
    return FiniteSemigroup(n, tuple(tuple(i for _ in range(n)) for i in range(n)), f"left_zero({n})")


def right_zero(n: int) -> FiniteSemigroup:
    """xy = y on n elements."""
    _require_size(n)
    return FiniteSemigroup(n, tuple(tuple(range(n)) for _ in range(n)), f"right_zero({n})")


def null(n: int) -> FiniteSemigroup:
    """All products equal the zero element 0."""
    _require_size(n)
    return FiniteSemigroup(n, tuple(tuple(0 for _ in range(n)) for _ in range(n)), f"null({n})")


def rectangular_band(m: int, p: int) -> FiniteSemigroup:
    """Direct product of left_zero(m) and right_zero(p); element (i, j) has index i*p + j."""
    _require_size(m)
    _require_size(p)
    n = m * p
    table = tuple(
        tuple((a // p) * p + (b % p) for b in range(n)) for a in range(n)
    )
    return FiniteSemigroup(n, table, f"rectangular_band({m},{p})")


def chain_of_lr(spec: Sequence[tuple[int, str]]) -> FiniteSemigroup:
    """A chain of left-zero / right-zero components.

    ``spec`` lists (size, tag) pairs from the bottom of the chain upward; tags
    are "L" or "R".  Within a component the product follows its tag; for x in a
    lower component and y in a higher one, xy = yx = x.
    """
    if not spec:
        raise InvalidParams("chain specification must be nonempty")
    starts = []
    total = 0
    for size, tag in spec:
        if not isinstance(size, int) or size < 1:
            raise InvalidParams(f"component sizes must be >= 1, got {size!r}")
        if tag not in ("L", "R"):
            raise InvalidParams(f"component tag must be 'L' or 'R', got {tag!r}")
        starts.append(total)
        total += size
    position = [0] * total
    for idx, (size, _) in enumerate(spec):
        for e in range(starts[idx], starts[idx] + size):
            position[e] = idx
    table = []
    for x in range(total):
        row = []
        for y in range(total):
            px, py = position[x], position[y]
            if px < py:
                row.append(x)
            elif py < px:
                row.append(y)
            else:
                row.append(x if spec[px][1] == "L" else y)
        table.append(tuple(row))
    text = ",".join(f"{s}{t}" for s, t in spec)
    return FiniteSemigroup(total, tuple(table), f"chain_of_lr({text})")


def direct_product(s: FiniteSemigroup, t: FiniteSemigroup) -> FiniteSemigroup:
    """Componentwise product; element (i, j) has index i*t.order + j."""
    n = s.order * t.order
    m = t.order
    table = tuple(
        tuple(s.table[a // m][b // m] * m + t.table[a % m][b % m] for b in range(n))
        for a in range(n)
    )
    return FiniteSemigroup(n, table, None)


@dataclass(frozen=True)
class InflationSpec:
    """Attach extra elements to a base semigroup, each retracting to a base element.

    ``fiber_assignment[k]`` is the base element that new element ``base.order + k``
    retracts to.  Products are computed in the base through the retraction.
    """

    base: FiniteSemigroup
    fiber_assignment: tuple[int, ...]

    def __post_init__(self):
        fibers = tuple(self.fiber_assignment)
        for f in fibers:
            if not isinstance(f, int) or not 0 <= f < self.base.order:
                raise InvalidParams(f"fiber target {f!r} is not a base element")
        object.__setattr__(self, "fiber_assignment", fibers)


def inflate(spec: InflationSpec | FiniteSemigroup, fibers: Sequence[int] | None = None) -> FiniteSemigroup:
    """Inflation of a base semigroup; carrier is base elements followed by new ones."""
    if isinstance(spec, FiniteSemigroup):
        spec = InflationSpec(spec, tuple(fibers or ()))
    elif fibers is not None:
        raise InvalidParams("pass either an InflationSpec or (base, fibers)")
    base = spec.base
    image = list(range(base.order)) + list(spec.fiber_assignment)
    n = len(image)
    table = tuple(
        tuple(base.table[image[i]][image[j]] for j in range(n)) for i in range(n)
    )
    return FiniteSemigroup(n, table, None)


_CONSTRUCTORS = {
    "left_zero": left_zero,
    "right_zero": right_zero,
    "null": null,
    "rectangular_band": rectangular_band,
    "chain_of_LR": chain_of_lr,
    "chain_of_lr": chain_of_lr,
    "direct_product": direct_product,
    "inflate": inflate,
}


def construct(kind: str, *params) -> FiniteSemigroup:
    """Dispatch to a named construction; see _CONSTRUCTORS for the kinds."""
    try:
        builder = _CONSTRUCTORS[kind]
    except KeyError:
        raise InvalidParams(f"unknown construction kind {kind!r}") from None
    return builder(*params)


def _require_size(n):
    if not isinstance(n, int) or n < 1:
        raise InvalidParams(f"size must be a positive integer, got {n!r}")


# ---------------------------------------------------------------------------
# Derived semigroups


def square_elements(s: FiniteSemigroup) -> tuple[int, ...]:
    """The elements of S^2 = {x*y : x, y in S}, ascending."""
    return tuple(sorted({v for row in s.table for v in row}))


def restrict(s: FiniteSemigroup, elements: Iterable[int]) -> FiniteSemigroup:
    """Subsemigroup on the given elements, reindexed in ascending order."""
    elems = sorted(set(elements))
    index = {e: i for i, e in enumerate(elems)}
    table = []
    for x in elems:
        row = []
        for y in elems:
            v = s.table[x][y]
            if v not in index:
                raise InvalidParams(f"subset not closed: {x}*{y} = {v} is outside it")
            row.append(index[v])
        table.append(tuple(row))
    return FiniteSemigroup(len(elems), tuple(table), None)


def square(s: FiniteSemigroup) -> FiniteSemigroup:
    """The subsemigroup of all products (closed because S^2 * S^2 is inside S^2)."""
    return restrict(s, square_elements(s))


def dual(s: FiniteSemigroup) -> FiniteSemigroup:
    """Opposite semigroup: table transposed."""
    n = s.order
    table = tuple(tuple(s.table[j][i] for j in range(n)) for i in range(n))
    return FiniteSemigroup(n, table, None)


def relabel(s: FiniteSemigroup, perm: Sequence[int]) -> FiniteSemigroup:
    """Apply the element permutation perm (old index -> new index)."""
    n = s.order
    if sorted(perm) != list(range(n)):
        raise InvalidParams("perm must be a permutation of the elements")
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            table[perm[i]][perm[j]] = perm[s.table[i][j]]
    return FiniteSemigroup(n, tuple(tuple(row) for row in table), None)


# ---------------------------------------------------------------------------
# Canonical forms

CANONICAL_MODES = ("iso", "iso_or_anti_iso")


def _min_relabeling(table: Table, n: int) -> bytes:
    best = None
    flat = [0] * (n * n)
    for perm in itertools.permutations(range(n)):
        for i in range(n):
            base = perm[i] * n
            row = table[i]
            for j in range(n):
                flat[base + perm[j]] = perm[row[j]]
        cand = bytes(flat)
        if best is None or cand < best:
            best = cand
    return best


def canonical_form(s: FiniteSemigroup, mode: str = "iso") -> bytes:
    """Canonical byte string: order byte, then the minimal relabelled flat table.

    Two semigroups have equal canonical forms exactly when they are isomorphic
    (mode "iso") or isomorphic-or-anti-isomorphic (mode "iso_or_anti_iso").
    Minimisation is brute force over all n! relabelings; fine for n <= 6.
    """
    if mode not in CANONICAL_MODES:
        raise InvalidParams(f"mode must be one of {CANONICAL_MODES}, got {mode!r}")
    n = s.order
    best = _min_relabeling(s.table, n)
    if mode == "iso_or_anti_iso":
        transposed = tuple(tuple(s.table[j][i] for j in range(n)) for i in range(n))
        best = min(best, _min_relabeling(transposed, n))
    return bytes([n]) + best


# ---------------------------------------------------------------------------
# Structural decompositions


@dataclass(frozen=True)
class RBDecomposition:
    """Rectangular band structure: element e has components ``components[e] = (x1, x2)``.

    The component map is a bijection onto [0, m) x [0, p) and satisfies
    components[x*y] = (x1 of x, x2 of y).
    """

    left_count: int
    right_count: int
    components: tuple[tuple[int, int], ...]


def decompose_rectangular_band(s: FiniteSemigroup) -> RBDecomposition:
    """Split a rectangular band into first/second components.

    Elements share a first component exactly when x*y = y and y*x = x; second
    components dually.  Raises NotRectangularBand (with a violating pair) when
    xyx = x fails.
    """
    n = s.order
    t = s.table
    for x in range(n):
        for y in range(n):
            if t[t[x][y]][x] != x:
                raise NotRectangularBand((x, y))
    first = _component_classes(t, n, same=lambda a, b: t[a][b] == b and t[b][a] == a)
    second = _component_classes(t, n, same=lambda a, b: t[a][b] == a and t[b][a] == b)
    m = len(set(first))
    p = len(set(second))
    components = tuple((first[e], second[e]) for e in range(n))
    if m * p != n or len(set(components)) != n:
        raise NotRectangularBand(None, message="component map is not a bijection onto the grid")
    for x in range(n):
        for y in range(n):
            xy = t[x][y]
            if components[xy] != (components[x][0], components[y][1]):
                raise NotRectangularBand(None, message=f"component law fails at ({x}, {y})")
    return RBDecomposition(m, p, components)


def _component_classes(t, n, same):
    """Class id per element under the given pairwise relation, ids by first occurrence."""
    ids = [-1] * n
    reps = []
    for x in range(n):
        for cid, r in enumerate(reps):
            if same(r, x):
                ids[x] = cid
                break
        else:
            ids[x] = len(reps)
            reps.append(x)
    return ids


@dataclass(frozen=True)
class ChainComponent:
    elements: tuple[int, ...]
    tag: str  # "L" or "R"


@dataclass(frozen=True)
class ChainLRDecomposition:
    """Chain components from the bottom of the chain upward."""

    components: tuple[ChainComponent, ...]

    def spec(self) -> tuple[tuple[int, str], ...]:
        return tuple((len(c.elements), c.tag) for c in self.components)


def decompose_chain_lr(s: FiniteSemigroup) -> ChainLRDecomposition:
    """Decompose a semigroup satisfying xy in {x, y} into an ordered chain.

    Distinct x, y lie in the same component exactly when xy != yx; across
    components the lower element absorbs (xy = yx = the lower one).  Singleton
    components are tagged "L" by convention.
    """
    n = s.order
    t = s.table
    for x in range(n):
        for y in range(n):
            if t[x][y] not in (x, y):
                raise NotChainLR((x, y))

    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)

    for x in range(n):
        for y in range(x + 1, n):
            if t[x][y] != t[y][x]:
                union(x, y)
    groups: dict[int, list[int]] = {}
    for e in range(n):
        groups.setdefault(find(e), []).append(e)
    comps = [sorted(v) for v in groups.values()]

    def below(a_elems, b_elems):
        a, b = a_elems[0], b_elems[0]
        return t[a][b] == a

    # verify every cross pair absorbs consistently toward the lower component
    for ci, a_elems in enumerate(comps):
        for cj, b_elems in enumerate(comps):
            if ci >= cj:
                continue
            low = a_elems if below(a_elems, b_elems) else b_elems
            high = b_elems if low is a_elems else a_elems
            for x in low:
                for y in high:
                    if t[x][y] != x or t[y][x] != x:
                        raise NotChainLR(None, message=f"cross products of {x} and {y} do not absorb downward")

    comps.sort(key=lambda c: sum(1 for other in comps if other is not c and below(other, c)))
    # the sort key is the number of strictly lower components; verify totality
    for ci in range(len(comps) - 1):
        if not below(comps[ci], comps[ci + 1]):
            raise NotChainLR(None, message="components are not totally ordered")

    components = []
    for elems in comps:
        if len(elems) == 1:
            tag = "L"
        else:
            a, b = elems[0], elems[1]
            tag = "L" if t[a][b] == a else "R"
            expect_left = tag == "L"
            for x in elems:
                for y in elems:
                    v = t[x][y]
                    if v != (x if expect_left else y):
                        raise NotChainLR(None, message=f"component {elems} is neither left-zero nor right-zero")
        components.append(ChainComponent(tuple(elems), tag))
    return ChainLRDecomposition(tuple(components))


# ---------------------------------------------------------------------------
# Embeddings


def find_embedding(t: FiniteSemigroup, s: FiniteSemigroup) -> tuple[int, ...] | None:
    """Injective multiplication-preserving map T -> S, or None.

    Deterministic backtracking: T's elements are mapped in index order, trying
    images in ascending order, so the first witness is reproducible.
    """
    if t.order > s.order:
        return None
    ta, tb = t.table, s.table
    n, m = t.order, s.order
    img = [-1] * n
    used = [False] * m

    def consistent(k):
        for i in range(k + 1):
            for j in range(k + 1):
                p = ta[i][j]
                if i != k and j != k and p != k:
                    continue
                if img[p] != -1:
                    if tb[img[i]][img[j]] != img[p]:
                        return False
        return True

    def search(k):
        if k == n:
            return True
        for v in range(m):
            if used[v]:
                continue
            img[k] = v
            used[v] = True
            if consistent(k) and search(k + 1):
                return True
            used[v] = False
            img[k] = -1
        return False

    if search(0):
        return tuple(img)
    return None


def embeds_into(t: FiniteSemigroup, s: FiniteSemigroup) -> bool:
    return find_embedding(t, s) is not None


# ---------------------------------------------------------------------------
# Text and JSON formats


def format_semigroup(s: FiniteSemigroup) -> str:
    """Plain text form: 'order n' then n rows of n indices."""
    lines = [f"order {s.order}"]
    lines.extend(" ".join(str(v) for v in row) for row in s.table)
    return "\n".join(lines) + "\n"


def semigroup_to_json(s: FiniteSemigroup) -> dict:
    doc = {"order": s.order, "table": [list(row) for row in s.table]}
    if s.label:
        doc["label"] = s.label
    return doc


def parse_semigroup(text: str) -> FiniteSemigroup:
    """Read either the plain text form or a JSON object with order/table/label."""
    stripped = text.strip()
    if not stripped:
        raise FormatError("empty semigroup description")
    if stripped.startswith("{"):
        try:
            doc = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise FormatError(f"bad JSON: {exc}") from None
        if not isinstance(doc, dict) or "order" not in doc or "table" not in doc:
            raise FormatError("JSON semigroup needs 'order' and 'table' keys")
        return make_semigroup(doc["order"], doc["table"], doc.get("label"))
    lines = [ln for ln in stripped.splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order" or not head[1].isdigit():
        raise FormatError("first line must be 'order n'")
    n = int(head[1])
    if len(lines) != n + 1:
        raise FormatError(f"expected {n} table rows, got {len(lines) - 1}")
    table = []
    for ln in lines[1:]:
        parts = ln.split()
        try:
            table.append([int(p) for p in parts])
        except ValueError:
            raise FormatError(f"non-integer table entry in line {ln!r}") from None
    return make_semigroup(n, table)
