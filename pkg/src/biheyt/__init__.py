"""Finite-scale engine for intuitionistic, dual-intuitionistic, and S4
modal logic: bounded distributive lattices with Heyting / co-Heyting
operations, finite topologies, Stone spectra, quotient algebras, and
Kripke / topological model checking."""

from .errors import (
    BiheytError,
    BoundExceeded,
    FormulaSyntaxError,
    MissingEmptyOrFull,
    NotACongruence,
    NotAHomomorphism,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotClosedUnderIntersection,
    NotClosedUnderUnion,
    NotDistributive,
    ParseError,
    UnboundAtom,
    UnsupportedConnective,
    WrongKind,
)
from .lattice import (
    CoHeytingStructure,
    FiniteLattice,
    HeytingStructure,
    boundary,
    build_lattice,
    chain,
    check_distributive,
    coheyting,
    coheyting_minus,
    coheyting_not,
    cover_pairs,
    dualize,
    enumerate_distributive_lattices,
    heyting,
    heyting_implies,
    heyting_not,
    is_boolean,
    lattice_of_subsets,
)
from .topology import (
    FiniteSpace,
    Preorder,
    closed_lattice,
    closure,
    complement,
    enumerate_preorders,
    enumerate_topologies,
    from_preorder,
    generate_from_basis,
    interior,
    open_lattice,
    specialization_preorder,
    validate_topology,
)
from .quotient import (
    Congruence,
    FilterOrIdeal,
    LatticeHom,
    check_congruence,
    check_hom,
    compose,
    congruence_from_filter,
    congruence_from_ideal,
    enumerate_homs,
    filters,
    ideal_relation,
    ideals,
    kernel,
    make_filter,
    make_ideal,
    preimage_of_top,
    principal_filter,
    principal_ideal,
    projection_implication_mismatches,
    quotient,
    two_valued_homs,
)
from .spectrum import (
    InducedMap,
    SpectralSpace,
    StoneReport,
    induced_map,
    is_prime_filter,
    open_map_criterion,
    prime_filters,
    spectrum,
    verify_stone_embedding,
)
from .formulas import (
    BOT,
    TOP,
    Formula,
    atom,
    box,
    coimp,
    coneg,
    conj,
    dia,
    disj,
    enumerate_formulas,
    imp,
    neg,
    parse_formula,
)
from .duallogic import (
    BooleanCriterion,
    LawReport,
    boolean_iff_trivial_boundary,
    check_boundary_laws,
    check_dual_de_morgan,
    check_lem,
    eval_dual,
    eval_intuitionistic,
    find_paraconsistent_witness,
)
from .modal import (
    AgreementResult,
    FrameClass,
    KripkeFrame,
    KripkeModel,
    SearchResult,
    agreement_closure,
    classify_frame,
    countermodel_search,
    enumerate_frames,
    kripke_eval,
    model_from_space,
    s4_axiom_suite,
    topo_eval,
    valid_in_frame,
    valid_in_model,
    worked_examples,
)
from .textfmt import (
    format_lattice_text,
    format_model_text,
    format_space_text,
    load_structure,
    parse_lattice_text,
    parse_model_text,
    parse_space_text,
)
