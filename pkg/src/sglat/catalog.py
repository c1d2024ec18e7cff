"""Exhaustive enumeration of small semigroups, and the persisted catalog.

Tables are generated by backtracking over cells in row-major order with
incremental associativity pruning, then deduplicated by canonical form.  The
catalog file format is line oriented and human diffable::

    SGCAT v1 mode=<iso|iso_or_anti_iso>
    <order>:<n*n digits of the row-major table>

Entries are the canonical representatives themselves, sorted by canonical
form, so identical inputs always produce byte-identical files.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Iterator

from .errors import FormatError, NotAssociative, OrderTooLarge, ValidationError
from .semigroups import FiniteSemigroup, canonical_form

MAX_ENUM_ORDER = 6
CATALOG_MODES = ("iso", "iso_or_anti_iso")
_HEADER_PREFIX = "SGCAT v1 mode="


def _check_cell(t: list[int], n: int, i: int, j: int) -> bool:
    """Associativity constraints that involve the just-assigned cell (i, j).

    A triple (a, b, c) is checked once all four lookups it needs are filled;
    each of the four roles the new cell can play is scanned, so every triple of
    a completed table has been checked at the assignment of its last cell.
    """
    v = t[i * n + j]
    # (i, j, c): new cell is the inner product a*b
    for c in range(n):
        x2 = t[j * n + c]
        if x2 >= 0:
            lhs = t[v * n + c]
            rhs = t[i * n + x2]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # (a, i, j): new cell is the inner product b*c
    for a in range(n):
        ab = t[a * n + i]
        if ab >= 0:
            lhs = t[ab * n + j]
            rhs = t[a * n + v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # (a, b, j) with a*b = i: new cell is the outer left product
    for a in range(n):
        row = a * n
        for b in range(n):
            if t[row + b] == i:
                bj = t[b * n + j]
                if bj >= 0:
                    rhs = t[row + bj]
                    if rhs >= 0 and rhs != v:
                        return False
    # (i, b, c) with b*c = j: new cell is the outer right product
    for b in range(n):
        row = b * n
        for c in range(n):
            if t[row + c] == j:
                ib = t[i * n + b]
                if ib >= 0:
                    lhs = t[ib * n + c]
                    if lhs >= 0 and lhs != v:
                        return False
    return True


def _complete(n: int, t: list[int], pos: int, out: list[tuple[int, ...]]):
    if pos == n * n:
        out.append(tuple(t))
        return
    i, j = divmod(pos, n)
    for v in range(n):
        t[pos] = v
        if _check_cell(t, n, i, j):
            _complete(n, t, pos + 1, out)
    t[pos] = -1


def _tables_for_prefix(args: tuple[int, tuple[int, ...]]) -> list[tuple[int, ...]]:
    """All associative completions of a fixed first row (worker entry point)."""
    n, first_row = args
    t = [-1] * (n * n)
    for j, v in enumerate(first_row):
        t[j] = v
        if not _check_cell(t, n, 0, j):
            return []
    out: list[tuple[int, ...]] = []
    _complete(n, t, n, out)
    return out


def _all_first_rows(n: int) -> list[tuple[int, ...]]:
    rows: list[tuple[int, ...]] = [()]
    for _ in range(n):
        rows = [r + (v,) for r in rows for v in range(n)]
    return rows


def labeled_tables(order: int, jobs: int = 1) -> list[tuple[int, ...]]:
    """Every associative n x n table, as flat row-major tuples, sorted."""
    if not isinstance(order, int) or not 1 <= order <= MAX_ENUM_ORDER:
        raise OrderTooLarge(f"order must be in 1..{MAX_ENUM_ORDER}, got {order!r}")
    prefixes = _all_first_rows(order)
    if jobs > 1 and order > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_tables_for_prefix, ((order, p) for p in prefixes))
            tables = [t for chunk in chunks for t in chunk]
    else:
        tables = [t for p in prefixes for t in _tables_for_prefix((order, p))]
    tables.sort()
    return tables


@dataclass(frozen=True)
class CatalogEntry:
    semigroup: FiniteSemigroup
    labeled_count: int | None = field(default=None, compare=False)

    @property
    def canonical_id(self) -> str:
        s = self.semigroup
        digits = "".join(str(v) for row in s.table for v in row)
        return f"{s.order}:{digits}"


def enumerate_semigroups(order: int, mode: str = "iso", jobs: int = 1) -> list[FiniteSemigroup]:
    """All order-n semigroups up to the mode's equivalence, sorted by canonical form."""
    return [e.semigroup for e in _enumerate_entries(order, mode, jobs)]


def _enumerate_entries(order: int, mode: str, jobs: int = 1) -> list[CatalogEntry]:
    if mode not in CATALOG_MODES:
        raise FormatError(f"mode must be one of {CATALOG_MODES}, got {mode!r}")
    counts: dict[bytes, int] = {}
    for flat in labeled_tables(order, jobs=jobs):
        table = tuple(flat[i * order:(i + 1) * order] for i in range(order))
        key = canonical_form(FiniteSemigroup(order, table), mode)
        counts[key] = counts.get(key, 0) + 1
    entries = []
    for key in sorted(counts):
        n = key[0]
        flat = key[1:]
        table = tuple(
            tuple(flat[i * n + j] for j in range(n)) for i in range(n)
        )
        entries.append(CatalogEntry(FiniteSemigroup(n, table), counts[key]))
    return entries


@dataclass(eq=False)
class Catalog:
    """Canonical semigroups of every order up to max_order, one list per order."""

    mode: str
    entries: dict[int, list[CatalogEntry]]
    format_version: int = 1

    @property
    def max_order(self) -> int:
        return max(self.entries)

    def semigroups(self) -> Iterator[FiniteSemigroup]:
        for order in sorted(self.entries):
            for entry in self.entries[order]:
                yield entry.semigroup

    def iter_entries(self) -> Iterator[CatalogEntry]:
        for order in sorted(self.entries):
            yield from self.entries[order]

    def counts(self) -> dict[int, int]:
        return {order: len(self.entries[order]) for order in sorted(self.entries)}

    def __eq__(self, other):
        if not isinstance(other, Catalog):
            return NotImplemented
        return (
            self.mode == other.mode
            and self.format_version == other.format_version
            and {o: [e.semigroup for e in es] for o, es in self.entries.items()}
            == {o: [e.semigroup for e in es] for o, es in other.entries.items()}
        )


def build_catalog(max_order: int, mode: str = "iso", jobs: int = 1) -> Catalog:
    if not isinstance(max_order, int) or not 1 <= max_order <= MAX_ENUM_ORDER:
        raise OrderTooLarge(f"max order must be in 1..{MAX_ENUM_ORDER}, got {max_order!r}")
    entries = {
        order: _enumerate_entries(order, mode, jobs) for order in range(1, max_order + 1)
    }
    return Catalog(mode, entries)


def save_catalog(catalog: Catalog, path) -> None:
    lines = [_HEADER_PREFIX + catalog.mode]
    for entry in catalog.iter_entries():
        lines.append(entry.canonical_id)
    with open(path, "w", encoding="ascii") as fh:
        fh.write("\n".join(lines) + "\n")


def load_catalog(path) -> Catalog:
    """Read a catalog back, validating associativity and canonical sortedness."""
    with open(path, "r", encoding="ascii") as fh:
        raw = fh.read()
    lines = raw.splitlines()
    if not lines or not lines[0].startswith(_HEADER_PREFIX):
        raise FormatError(f"bad or missing header; expected '{_HEADER_PREFIX}<mode>'")
    mode = lines[0][len(_HEADER_PREFIX):]
    if mode not in CATALOG_MODES:
        raise FormatError(f"unknown catalog mode {mode!r}")
    entries: dict[int, list[CatalogEntry]] = {}
    previous_key: tuple[int, str] | None = None
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        head, sep, digits = line.partition(":")
        if not sep or not head.isdigit():
            raise FormatError(f"line {lineno}: expected '<order>:<digits>', got {line!r}")
        order = int(head)
        if not 1 <= order <= MAX_ENUM_ORDER:
            raise FormatError(f"line {lineno}: order {order} out of range")
        if len(digits) != order * order or any(ch not in "012345" for ch in digits):
            raise FormatError(f"line {lineno}: table must be {order * order} digits 0-5")
        table = tuple(
            tuple(int(digits[i * order + j]) for j in range(order)) for i in range(order)
        )
        try:
            sg = FiniteSemigroup(order, table)
        except NotAssociative as exc:
            raise ValidationError(f"line {lineno} (entry {line}): {exc}") from None
        except Exception as exc:
            raise FormatError(f"line {lineno}: {exc}") from None
        key = (order, digits)
        if previous_key is not None and key <= previous_key:
            raise ValidationError(
                f"line {lineno}: entries out of canonical order ({line!r} after previous)"
            )
        previous_key = key
        entries.setdefault(order, []).append(CatalogEntry(sg))
    if not entries:
        raise FormatError("catalog contains no entries")
    return Catalog(mode, entries)
