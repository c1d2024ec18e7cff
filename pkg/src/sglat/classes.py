"""Registry of named semigroup classes.

Each core class is defined by an inclusion system; where an independent
structural description of the Cayley table exists, the registry carries it as
well so the two membership routes can be cross-checked.  The registry also
holds the toolkit's catalog of numbered equality claims (P1..P18): for each
claim, one or more defining systems on the left and a union of core classes on
the right, expected to coincide over every finite semigroup.

Union names use the literal character "∪" (for example ``L∪R``); lookups also
accept "+" as an ASCII stand-in (``L+R``).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable

from .errors import CharacterizationMismatch, NoStructuralForm, UnknownClass
from .satisfaction import satisfies
from .semigroups import (
    FiniteSemigroup,
    decompose_rectangular_band,
    square,
)
from .errors import NotRectangularBand
from .words import InclusionSystem, parse_system


@dataclass(frozen=True)
class ClassDescriptor:
    name: str
    definition: InclusionSystem | None
    structural: str | None = None
    union_of: tuple[str, ...] | None = None
    alt_definitions: tuple[InclusionSystem, ...] = ()


# ---------------------------------------------------------------------------
# Core classes.  definition text, structural tag, alternative identity systems.

_CORE = [
    ("{0}", "x = y", None, ()),
    ("Z", "xy = zw", "constant_product", ("xyz = uv",)),
    ("L", "xy = x", "left_zero", ("xyz = x",)),
    ("R", "xy = y", "right_zero", ("xyz = z",)),
    ("B", "x = xx", "band", ()),
    ("RB", "xyx = x", "rectangular_band", ("xyz = xz ; x = xx",)),
    ("IB", "xy = xxyy", "inflation_of_band", ()),
    ("IL", "xyz = xw", "inflation_of_left_zero", ()),
    ("IR", "xyz = wz", "inflation_of_right_zero", ()),
    ("IRB", "xyz = xz", "inflation_of_rectangular_band", ()),
    ("GB", "xy = xyxy", "square_in_band", ()),
    ("GL", "xyz = xy", "square_in_left_zero", ()),
    ("GR", "xyz = yz", "square_in_right_zero", ()),
    ("GRB", "xy = xyzxy", "square_in_rectangular_band", ()),
    ("GRB_l", "xyz = xywz ; xy = xyxy", None, ()),
    ("GRB_r", "xyz = xwyz ; xy = xyxy", None, ()),
    ("I", "xyz <= {xywz, xqyz} ; xy = xyxy", None, ()),
]

# ---------------------------------------------------------------------------
# Numbered claims.  Each entry: claim id -> list of (lhs descriptors, rhs union
# components).  Descriptors named PnX after the statement letter; "_dual" marks
# the mirrored statement where one exists.

_PROP_TABLE: dict[int, list[tuple[tuple[tuple[str, str], ...], tuple[str, ...]]]] = {
    1: [((("P1A", "x <= {xy, zx}"), ("P1B", "xyz <= {x, z}")), ("L", "R"))],
    2: [
        ((("P2C", "xy <= {y, zw}"),), ("Z", "R")),
        ((("P2C_dual", "xy <= {x, zw}"),), ("L", "Z")),
    ],
    3: [((("P3V", "xyz <= {x, z, uv}"),), ("L", "Z", "R"))],
    4: [
        ((("P4V", "xyz <= {z, xw}"),), ("IL", "R")),
        ((("P4V_dual", "xyz <= {x, wz}"),), ("L", "IR")),
    ],
    5: [
        (
            (
                ("P5A", "xyz <= {xw, qz}"),
                ("P5B", "xy <= {xuv, zwy}"),
                ("P5D", "xyz = xz ; xyzwuv <= {xy, uv}"),
            ),
            ("IL", "IR"),
        )
    ],
    6: [
        ((("P6V", "xyz <= {z, xy} ; xyzwuv <= {xy, uv}"),), ("GL", "R")),
        ((("P6V_dual", "xyz <= {x, yz} ; xyzwuv <= {xy, uv}"),), ("L", "GR")),
    ],
    7: [
        ((("P7V", "xyz <= {xy, qz} ; xy <= {xyz, uy}"),), ("GL", "IR")),
        ((("P7V_dual", "xyz <= {yz, xq} ; yz <= {xyz, yu}"),), ("IL", "GR")),
    ],
    8: [
        (
            (("P8A", "xyzwuv <= {xy, uv}"), ("P8B", "xy <= {xyw, qxy}")),
            ("GL", "GR"),
        )
    ],
    9: [((("P9V", "xyx <= {x, zw}"),), ("Z", "RB"))],
    10: [
        ((("P10V", "xyx <= {x, wx}"),), ("RB", "IR")),
        ((("P10V_dual", "xyx <= {x, xw}"),), ("IL", "RB")),
    ],
    11: [((("P11V", "xyx <= {x, wx, xq} ; xy = xyxy"),), ("IL", "RB", "IR"))],
    12: [
        ((("P12V", "xyx <= {x, xyw} ; xy = xyzwxy"),), ("GL", "RB")),
        ((("P12V_dual", "xyx <= {x, wyx} ; xy = xyzwxy"),), ("RB", "GR")),
    ],
    13: [
        ((("P13V", "xyx <= {x, wx, xyq} ; xy = xyzwxy"),), ("GL", "RB", "IR")),
        ((("P13V_dual", "xyx <= {x, xw, qyx} ; xy = xyzwxy"),), ("IL", "RB", "GR")),
    ],
    14: [((("P14V", "xyx <= {x, xyw, qyx} ; xy = xyzwxy"),), ("GL", "RB", "GR"))],
    15: [
        ((("P15V", "xy <= {xwy, xyq}"),), ("GL", "IRB")),
        ((("P15V_dual", "xy <= {xwy, qxy}"),), ("IRB", "GR")),
    ],
    16: [((("P16V", "xy <= {xyw, xvy, qxy}"),), ("GL", "IRB", "GR"))],
    17: [
        ((("P17V", "xyz <= {yz, xywz} ; xyzwxy = xy"),), ("GRB_l", "GR")),
        ((("P17V_dual", "xyz <= {xy, xwyz} ; xyzwxy = xy"),), ("GL", "GRB_r")),
    ],
    18: [((("P18V", "xyz <= {xywz, xqyz} ; xy = xyxy"),), ("GRB_l", "GRB_r"))],
}

PROPOSITION_IDS = tuple(sorted(_PROP_TABLE))

PROPOSITION_DESCRIPTORS = tuple(
    name
    for prop_id in PROPOSITION_IDS
    for lhs, _ in _PROP_TABLE[prop_id]
    for name, _text in lhs
)


def union_name(components: tuple[str, ...]) -> str:
    return "∪".join(components)


def proposition_claims(prop_id: int) -> list[tuple[tuple[str, ...], str, tuple[str, ...]]]:
    """Claims of one numbered statement: (lhs descriptor names, union name, components)."""
    if prop_id not in _PROP_TABLE:
        raise UnknownClass(f"no claim numbered {prop_id}; valid ids are 1..18")
    out = []
    for lhs, components in _PROP_TABLE[prop_id]:
        out.append((tuple(name for name, _ in lhs), union_name(components), components))
    return out


def _build_registry() -> tuple[ClassDescriptor, ...]:
    entries: list[ClassDescriptor] = []
    seen: set[str] = set()

    def add(desc: ClassDescriptor):
        if desc.name in seen:
            raise ValueError(f"duplicate class name {desc.name!r}")
        seen.add(desc.name)
        entries.append(desc)

    for name, text, structural, alts in _CORE:
        add(
            ClassDescriptor(
                name,
                parse_system(text),
                structural=structural,
                alt_definitions=tuple(parse_system(t) for t in alts),
            )
        )
    union_components: dict[str, tuple[str, ...]] = {}
    for prop_id in PROPOSITION_IDS:
        for lhs, components in _PROP_TABLE[prop_id]:
            for name, text in lhs:
                add(ClassDescriptor(name, parse_system(text)))
            union_components.setdefault(union_name(components), components)
    for name, components in union_components.items():
        if name not in seen:
            add(ClassDescriptor(name, None, union_of=components))
    return tuple(entries)


_REGISTRY: tuple[ClassDescriptor, ...] = _build_registry()
_BY_NAME: dict[str, ClassDescriptor] = {d.name: d for d in _REGISTRY}

STRUCTURAL_CLASSES = tuple(d.name for d in _REGISTRY if d.structural is not None)


def registry() -> tuple[ClassDescriptor, ...]:
    return _REGISTRY


def class_names() -> tuple[str, ...]:
    return tuple(d.name for d in _REGISTRY)


def get_class(name: str) -> ClassDescriptor:
    desc = _BY_NAME.get(name) or _BY_NAME.get(name.replace("+", "∪"))
    if desc is None:
        raise UnknownClass(f"unknown class {name!r}")
    return desc


def member(s: FiniteSemigroup, name: str) -> bool:
    """Identity-route membership; unions are the disjunction of their parts."""
    desc = get_class(name)
    if desc.union_of is not None:
        return any(member(s, part) for part in desc.union_of)
    return satisfies(s, desc.definition)


# ---------------------------------------------------------------------------
# Structural route: predicates evaluated directly on the table.


def _constant_product(s):
    t = s.table
    v = t[0][0]
    return all(cell == v for row in t for cell in row)


def _left_zero(s):
    t = s.table
    return all(cell == i for i, row in enumerate(t) for cell in row)


def _right_zero(s):
    t = s.table
    return all(cell == j for row in t for j, cell in enumerate(row))


def _band(s):
    t = s.table
    return all(t[i][i] == i for i in range(s.order))


def _rect_band(s):
    try:
        decompose_rectangular_band(s)
    except NotRectangularBand:
        return False
    return True


def _inflation_law(s):
    """xy = (xx)(yy) pointwise: products factor through the squaring retraction."""
    t = s.table
    sq = [t[i][i] for i in range(s.order)]
    return all(
        t[i][j] == t[sq[i]][sq[j]] for i in range(s.order) for j in range(s.order)
    )


_STRUCTURAL: dict[str, Callable[[FiniteSemigroup], bool]] = {
    "constant_product": _constant_product,
    "left_zero": _left_zero,
    "right_zero": _right_zero,
    "band": _band,
    "rectangular_band": _rect_band,
    "inflation_of_band": lambda s: _inflation_law(s) and _band(square(s)),
    "inflation_of_left_zero": lambda s: _inflation_law(s) and _left_zero(square(s)),
    "inflation_of_right_zero": lambda s: _inflation_law(s) and _right_zero(square(s)),
    "inflation_of_rectangular_band": lambda s: _inflation_law(s) and _rect_band(square(s)),
    "square_in_band": lambda s: _band(square(s)),
    "square_in_left_zero": lambda s: _left_zero(square(s)),
    "square_in_right_zero": lambda s: _right_zero(square(s)),
    "square_in_rectangular_band": lambda s: _rect_band(square(s)),
}


def member_structural(s: FiniteSemigroup, name: str) -> bool:
    """Membership via the structural table predicate; NoStructuralForm if absent."""
    desc = get_class(name)
    if desc.structural is None:
        raise NoStructuralForm(f"class {desc.name!r} has no structural predicate")
    return _STRUCTURAL[desc.structural](s)


def cross_check(s: FiniteSemigroup, name: str) -> bool:
    """Run both membership routes and fail hard if they disagree."""
    desc = get_class(name)
    by_identity = member(s, name)
    by_structure = member_structural(s, name)
    if by_identity != by_structure:
        raise CharacterizationMismatch(
            f"class {desc.name!r} on order-{s.order} table {s.table!r}: "
            f"identity route says {by_identity}, structural route says {by_structure}"
        )
    return by_identity


def registry_json() -> str:
    """The class list as a JSON document: name, definition text, structural tag, union_of."""
    from .words import format_system

    doc = []
    for d in _REGISTRY:
        doc.append(
            {
                "name": d.name,
                "definition": format_system(d.definition) if d.definition else None,
                "structural": d.structural,
                "union_of": list(d.union_of) if d.union_of else None,
            }
        )
    return json.dumps(doc, indent=2, ensure_ascii=False)
