"""Empirical ordering of the registered class family and its covering diagram.

The diagram is reconstructed from membership data over a finite catalog, so
classes that no small semigroup separates collapse into one node; every merge
is reported rather than silently asserted as an equality.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Catalog
from .classes import get_class, member
from .verify import MembershipMatrix, build_matrix

# The node family of the class diagram under I: the twelve base classes, every
# union that appears on the right of a numbered claim, and I itself.
LATTICE_NODES = (
    "{0}", "Z", "L", "R", "IL", "IR", "RB", "IRB", "GL", "GR", "GRB_l", "GRB_r",
    "L∪R", "Z∪R", "L∪Z", "L∪Z∪R", "IL∪R", "L∪IR",
    "IL∪IR", "GL∪R", "L∪GR", "GL∪IR", "IL∪GR", "GL∪GR",
    "Z∪RB", "IL∪RB", "RB∪IR", "IL∪RB∪IR", "GL∪RB",
    "RB∪GR", "GL∪RB∪IR", "IL∪RB∪GR", "GL∪RB∪GR",
    "GL∪IRB", "IRB∪GR", "GL∪IRB∪GR", "GRB_l∪GR",
    "GL∪GRB_r", "I",
)


@dataclass
class MergedGroup:
    names: tuple[str, ...]
    representative: str
    separating_order: int | None  # smallest order that separates, when known


@dataclass
class HasseDiagram:
    """Covering diagram of the merged empirical order.

    ``nodes`` are group representatives; ``member_sets`` maps each
    representative to the row set of its class over the universe.
    """

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]  # (lower, upper) covering pairs
    merged: tuple[MergedGroup, ...]
    member_sets: dict[str, frozenset[int]]
    group_names: dict[str, tuple[str, ...]]
    universe_order_bound: int

    def leq(self, a: str, b: str) -> bool:
        return self.member_sets[a] <= self.member_sets[b]

    @property
    def bottom(self) -> str:
        lows = [n for n in self.nodes if all(self.leq(n, m) for m in self.nodes)]
        return lows[0] if lows else ""

    @property
    def top(self) -> str:
        highs = [n for n in self.nodes if all(self.leq(m, n) for m in self.nodes)]
        return highs[0] if highs else ""

    def join(self, a: str, b: str) -> str | None:
        uppers = [c for c in self.nodes if self.leq(a, c) and self.leq(b, c)]
        minimal = [
            c for c in uppers if not any(d != c and self.leq(d, c) for d in uppers)
        ]
        return minimal[0] if len(minimal) == 1 else None

    def meet(self, a: str, b: str) -> str | None:
        lowers = [c for c in self.nodes if self.leq(c, a) and self.leq(c, b)]
        maximal = [
            c for c in lowers if not any(d != c and self.leq(c, d) for d in lowers)
        ]
        return maximal[0] if len(maximal) == 1 else None

    def is_lattice(self) -> bool:
        return all(
            self.join(a, b) is not None and self.meet(a, b) is not None
            for a in self.nodes
            for b in self.nodes
        )

    def format_text(self) -> str:
        lines = [
            f"class diagram reconstructed from membership over semigroups of order <= {self.universe_order_bound}",
            f"bottom: {self.bottom}   top: {self.top}   nodes: {len(self.nodes)}",
        ]
        for group in self.merged:
            if len(group.names) > 1:
                sep = (
                    f"separated first at order {group.separating_order}"
                    if group.separating_order is not None
                    else f"no separating semigroup of order <= {self.universe_order_bound}"
                )
                lines.append(
                    f"merged: {' = '.join(group.names)}  ({sep})"
                )
        lines.append("covers:")
        lines.extend(f"  {low} < {high}" for low, high in self.edges)
        return "\n".join(lines)

    def format_dot(self) -> str:
        lines = [
            "digraph class_order {",
            f"  // reconstructed empirically from membership over semigroups of order <= {self.universe_order_bound}",
            "  rankdir=BT;",
            '  node [shape=box, fontname="Helvetica"];',
        ]
        for rep in self.nodes:
            label = "\\n".join(self.group_names[rep])
            lines.append(f'  "{rep}" [label="{label}"];')
        for low, high in self.edges:
            lines.append(f'  "{low}" -> "{high}";')
        lines.append("}")
        return "\n".join(lines)


def _representative(names: tuple[str, ...]) -> str:
    def key(name):
        return (get_class(name).union_of is not None, LATTICE_NODES.index(name))

    return min(names, key=key)


def _find_separating_order(names: tuple[str, ...], catalog: Catalog | None) -> int | None:
    if catalog is None:
        return None
    for order in sorted(catalog.entries):
        for entry in catalog.entries[order]:
            memberships = {member(entry.semigroup, name) for name in names}
            if len(memberships) > 1:
                return order
    return None


def derive_lattice(
    matrix: MembershipMatrix, separator_catalog: Catalog | None = None
) -> HasseDiagram:
    """Order the matrix's classes by membership inclusion and reduce to covers.

    Classes with identical membership over the universe are merged into one
    node; ``separator_catalog`` (when given, typically a larger catalog) is
    scanned for the smallest order at which a merged group separates.
    """
    names = matrix.classes
    sets = {name: matrix.column_set(name) for name in names}
    groups: dict[frozenset[int], list[str]] = {}
    for name in names:  # preserves matrix class order inside each group
        groups.setdefault(sets[name], []).append(name)

    merged = []
    member_sets = {}
    group_names = {}
    for member_set, group in groups.items():
        rep = _representative(tuple(group))
        member_sets[rep] = member_set
        group_names[rep] = tuple(group)
        merged.append(
            MergedGroup(
                tuple(group),
                rep,
                _find_separating_order(tuple(group), separator_catalog)
                if len(group) > 1
                else None,
            )
        )
    nodes = tuple(sorted(member_sets, key=LATTICE_NODES.index))
    merged.sort(key=lambda g: LATTICE_NODES.index(g.representative))

    edges = []
    for low in nodes:
        for high in nodes:
            if low == high or not member_sets[low] < member_sets[high]:
                continue
            if any(
                mid not in (low, high)
                and member_sets[low] < member_sets[mid] < member_sets[high]
                for mid in nodes
            ):
                continue
            edges.append((low, high))
    edges.sort(key=lambda e: (LATTICE_NODES.index(e[0]), LATTICE_NODES.index(e[1])))

    return HasseDiagram(
        nodes=nodes,
        edges=tuple(edges),
        merged=tuple(merged),
        member_sets=member_sets,
        group_names=group_names,
        universe_order_bound=matrix.universe_order_bound,
    )


def lattice_from_catalog(catalog: Catalog) -> HasseDiagram:
    """Convenience: build the node matrix over a catalog and derive the diagram."""
    return derive_lattice(build_matrix(catalog, LATTICE_NODES), catalog)
