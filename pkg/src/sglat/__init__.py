"""Finite semigroup toolkit.

Cayley-table semigroups and their constructions, word-set inclusion systems
with a satisfaction checker, a registry of named classes with dual
(identity / structural) membership routes, exhaustive small-order catalogs,
and empirical verification of the class lattice those pieces generate.
"""

from .catalog import (
    Catalog,
    CatalogEntry,
    build_catalog,
    enumerate_semigroups,
    load_catalog,
    save_catalog,
)
from .classes import (
    ClassDescriptor,
    cross_check,
    get_class,
    member,
    member_structural,
    proposition_claims,
    registry,
    registry_json,
)
from .hasse import HasseDiagram, LATTICE_NODES, derive_lattice, lattice_from_catalog
from .satisfaction import EvalCounter, Violation, find_violation, satisfies, satisfies_all
from .semigroups import (
    ChainComponent,
    ChainLRDecomposition,
    FiniteSemigroup,
    InflationSpec,
    RBDecomposition,
    canonical_form,
    chain_of_lr,
    construct,
    decompose_chain_lr,
    decompose_rectangular_band,
    direct_product,
    dual,
    embeds_into,
    find_embedding,
    inflate,
    left_zero,
    make_semigroup,
    null,
    parse_semigroup,
    rectangular_band,
    relabel,
    right_zero,
    square,
    square_elements,
)
from .verify import (
    MembershipMatrix,
    ProbeReport,
    PropositionReport,
    WitnessReport,
    build_matrix,
    explore_cover_of_I,
    probe_metatheorems,
    prop32_suite,
    verify_proposition,
    verify_propositions,
)
from .words import (
    Inclusion,
    InclusionSystem,
    content,
    content_equal,
    dual_system,
    evaluate,
    format_system,
    parse_system,
    variables_of,
)

__version__ = "0.1.0"
