"""Kripke frames and models, frame classification, topological
semantics, and bounded countermodel search.

kripke_eval uses classical base clauses at each world (per-world
boolean recursion); □ quantifies over accessible worlds, ◇ asks for
one. topo_eval interprets the same classical connectives as set
operations with □ = interior and ◇ = closure, uniformly at every
nesting depth. On a finite space the two semantics coincide through
the specialization preorder (model_from_space); agreement_closure
certifies that equivalence for every formula over given atoms by
exhausting the reachable pairs of values.

← and ∼ get no Kripke clauses; they belong to the algebra evaluators.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Optional, Sequence

from .bitsets import all_subsets, iter_bits
from .errors import BoundExceeded, UnboundAtom, UnsupportedConnective
from .formulas import Formula, atom, box, dia, neg, parse_formula
from .duallogic import eval_dual, eval_intuitionistic
from .topology import (
    DEFAULT_MAX_POINTS,
    FiniteSpace,
    closed_lattice,
    closure,
    complement,
    enumerate_topologies,
    interior,
    open_lattice,
    specialization_preorder,
)

_KRIPKE = {"atom", "bot", "top", "not", "and", "or", "imp", "box", "dia"}

DEFAULT_MAX_WORLDS = 4


class KripkeFrame:
    def __init__(self, worlds: int, rel: tuple[int, ...]):
        self.worlds = worlds
        self.rel = rel  # rel[w] = mask of successors

    @classmethod
    def from_edges(cls, worlds: int, edges) -> "KripkeFrame":
        rel = [0] * worlds
        for a, b in edges:
            if not (0 <= a < worlds and 0 <= b < worlds):
                raise ValueError(f"edge ({a}, {b}) outside 0..{worlds - 1}")
            rel[a] |= 1 << b
        return cls(worlds, tuple(rel))

    def edges(self) -> list[tuple[int, int]]:
        return [(w, u) for w in range(self.worlds) for u in iter_bits(self.rel[w])]

    def __eq__(self, other):
        if not isinstance(other, KripkeFrame):
            return NotImplemented
        return self.worlds == other.worlds and self.rel == other.rel

    def __hash__(self):
        return hash((self.worlds, self.rel))

    def __repr__(self):
        return f"KripkeFrame(worlds={self.worlds}, rel={self.rel})"


class KripkeModel:
    def __init__(self, frame: KripkeFrame, valuation: Mapping[str, int]):
        self.frame = frame
        self.valuation = dict(valuation)

    def __eq__(self, other):
        if not isinstance(other, KripkeModel):
            return NotImplemented
        return self.frame == other.frame and self.valuation == other.valuation

    def __repr__(self):
        return f"KripkeModel({self.frame!r}, valuation={self.valuation})"


@dataclass
class FrameClass:
    reflexive: bool
    transitive: bool
    symmetric: bool

    @property
    def label(self) -> str:
        if self.reflexive and self.transitive:
            return "S5" if self.symmetric else "S4"
        return "T" if self.reflexive else "K"


def classify_frame(frame: KripkeFrame) -> FrameClass:
    rel = frame.rel
    n = frame.worlds
    reflexive = all((rel[w] >> w) & 1 for w in range(n))
    transitive = all(
        not (rel[u] & ~rel[w]) for w in range(n) for u in iter_bits(rel[w])
    )
    symmetric = all(
        (rel[u] >> w) & 1 for w in range(n) for u in iter_bits(rel[w])
    )
    return FrameClass(reflexive, transitive, symmetric)


def kripke_eval(model: KripkeModel, world: int, phi: Formula) -> bool:
    """Truth at a world: classical boolean clauses, □ = all successors,
    ◇ = some successor."""
    kind = phi.kind
    if kind not in _KRIPKE:
        raise UnsupportedConnective(kind, "kripke")
    if kind == "atom":
        if phi.name not in model.valuation:
            raise UnboundAtom(phi.name)
        return bool((model.valuation[phi.name] >> world) & 1)
    if kind == "bot":
        return False
    if kind == "top":
        return True
    if kind == "not":
        return not kripke_eval(model, world, phi.args[0])
    if kind == "and":
        return kripke_eval(model, world, phi.args[0]) and kripke_eval(
            model, world, phi.args[1]
        )
    if kind == "or":
        return kripke_eval(model, world, phi.args[0]) or kripke_eval(
            model, world, phi.args[1]
        )
    if kind == "imp":
        return (not kripke_eval(model, world, phi.args[0])) or kripke_eval(
            model, world, phi.args[1]
        )
    succ = model.frame.rel[world]
    if kind == "box":
        return all(kripke_eval(model, u, phi.args[0]) for u in iter_bits(succ))
    return any(kripke_eval(model, u, phi.args[0]) for u in iter_bits(succ))


def valid_in_model(model: KripkeModel, phi: Formula) -> bool:
    return all(kripke_eval(model, w, phi) for w in range(model.frame.worlds))


def valid_in_frame(
    frame: KripkeFrame,
    phi: Formula,
    alphabet: Sequence[str],
    bound_bits: int = 22,
) -> bool:
    """Validity under every valuation of the alphabet over the frame."""
    names = list(alphabet)
    if frame.worlds * len(names) > bound_bits:
        raise BoundExceeded(
            "valuation space bits", frame.worlds * len(names), bound_bits
        )
    for masks in product(all_subsets(frame.worlds), repeat=len(names)):
        model = KripkeModel(frame, dict(zip(names, masks)))
        if not valid_in_model(model, phi):
            return False
    return True


def topo_eval(space: FiniteSpace, valuation: Mapping[str, int], phi: Formula) -> int:
    """Set-valued semantics on a finite space: classical connectives as
    set operations, □ = interior, ◇ = closure (both at any nesting)."""
    kind = phi.kind
    if kind not in _KRIPKE:
        raise UnsupportedConnective(kind, "topological")
    if kind == "atom":
        if phi.name not in valuation:
            raise UnboundAtom(phi.name)
        return valuation[phi.name]
    if kind == "bot":
        return 0
    if kind == "top":
        return space.full
    if kind == "not":
        return complement(space, topo_eval(space, valuation, phi.args[0]))
    if kind == "and":
        return topo_eval(space, valuation, phi.args[0]) & topo_eval(
            space, valuation, phi.args[1]
        )
    if kind == "or":
        return topo_eval(space, valuation, phi.args[0]) | topo_eval(
            space, valuation, phi.args[1]
        )
    if kind == "imp":
        return complement(space, topo_eval(space, valuation, phi.args[0])) | topo_eval(
            space, valuation, phi.args[1]
        )
    inner = topo_eval(space, valuation, phi.args[0])
    if kind == "box":
        return interior(space, inner)
    return closure(space, inner)


def model_from_space(space: FiniteSpace, valuation: Mapping[str, int]) -> KripkeModel:
    """Worlds = points, accessibility = specialization preorder, so the
    frame is always reflexive and transitive (at least S4)."""
    pre = specialization_preorder(space)
    return KripkeModel(KripkeFrame(space.points, pre.rel), dict(valuation))


S4_SCHEMAS: tuple[tuple[str, Formula], ...] = (
    ("K distribution", parse_formula("[](p -> q) -> ([]p -> []q)")),
    ("T reflection", parse_formula("[]p -> p")),
    ("4 transitivity", parse_formula("[]p -> [][]p")),
    ("dual reflection", parse_formula("p -> <>p")),
    ("dual transitivity", parse_formula("<><>p -> <>p")),
)


@dataclass
class SchemaReport:
    name: str
    formula: Formula
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def s4_axiom_suite(structure, bound: int = 5) -> list[SchemaReport]:
    """Check the five schemas over every valuation of {p, q}: on a
    space via topo_eval, on a frame via kripke_eval at every world."""
    reports = []
    if isinstance(structure, FiniteSpace):
        if structure.points > bound:
            raise BoundExceeded("points", structure.points, bound)
        subsets = list(all_subsets(structure.points))
        for name, phi in S4_SCHEMAS:
            bad = []
            count = 0
            for vp in subsets:
                for vq in subsets:
                    count += 1
                    if topo_eval(structure, {"p": vp, "q": vq}, phi) != structure.full:
                        bad.append((vp, vq))
            reports.append(SchemaReport(name, phi, count, tuple(bad)))
        return reports
    if isinstance(structure, KripkeFrame):
        if structure.worlds > bound:
            raise BoundExceeded("worlds", structure.worlds, bound)
        subsets = list(all_subsets(structure.worlds))
        for name, phi in S4_SCHEMAS:
            bad = []
            count = 0
            for vp in subsets:
                for vq in subsets:
                    count += 1
                    model = KripkeModel(structure, {"p": vp, "q": vq})
                    for w in range(structure.worlds):
                        if not kripke_eval(model, w, phi):
                            bad.append((vp, vq, w))
            reports.append(SchemaReport(name, phi, count, tuple(bad)))
        return reports
    raise TypeError("expected a FiniteSpace or a KripkeFrame")


def enumerate_frames(worlds: int) -> Iterator[KripkeFrame]:
    """All frames on a labeled world set, by ascending relation bits."""
    for bits in range(1 << (worlds * worlds)):
        rel = tuple(
            (bits >> (w * worlds)) & ((1 << worlds) - 1) for w in range(worlds)
        )
        yield KripkeFrame(worlds, rel)


@dataclass
class SearchResult:
    structure: object  # FiniteSpace or KripkeFrame
    valuation: dict
    point: int

    def __repr__(self):
        return (
            f"SearchResult(structure={self.structure!r}, "
            f"valuation={self.valuation}, point={self.point})"
        )


def countermodel_search(
    phi: Formula,
    max_points: int,
    mode: str = "space",
    semantics: str = "classical",
    frame_properties: tuple[str, ...] = (),
    bound: int = DEFAULT_MAX_POINTS,
) -> Optional[SearchResult]:
    """First falsifying structure in canonical order: increasing point
    count, then structure enumeration order, then lexicographic
    valuation order; the reported point is the lowest falsifying one.

    mode 'space' with semantics 'classical' refutes via topo_eval;
    'intuitionistic' evaluates in the open-set algebra (valuations range
    over opens); 'dual' in the closed-set algebra (over closeds).
    mode 'frame' scans all frames, optionally filtered by
    frame_properties ⊆ {reflexive, transitive, symmetric}.
    """
    if max_points > bound:
        raise BoundExceeded("points", max_points, bound)
    names = sorted(phi.atoms())
    if mode == "frame":
        for worlds in range(1, max_points + 1):
            for frame in enumerate_frames(worlds):
                cls = classify_frame(frame)
                if any(not getattr(cls, prop) for prop in frame_properties):
                    continue
                for masks in product(all_subsets(worlds), repeat=len(names)):
                    model = KripkeModel(frame, dict(zip(names, masks)))
                    for w in range(worlds):
                        if not kripke_eval(model, w, phi):
                            return SearchResult(frame, model.valuation, w)
        return None
    if mode != "space":
        raise ValueError(f"unknown mode {mode!r}")
    for points in range(1, max_points + 1):
        for space in enumerate_topologies(points, bound=max(points, DEFAULT_MAX_POINTS)):
            if semantics == "classical":
                domains = [list(all_subsets(points))] * len(names)
                for masks in product(*domains) if names else [()]:
                    val = dict(zip(names, masks))
                    value = topo_eval(space, val, phi)
                    if value != space.full:
                        missing = next(
                            x for x in range(points) if not (value >> x) & 1
                        )
                        return SearchResult(space, val, missing)
            elif semantics in ("intuitionistic", "dual"):
                if semantics == "intuitionistic":
                    alg = open_lattice(space)
                    evaluate = eval_intuitionistic
                else:
                    alg = closed_lattice(space)
                    evaluate = eval_dual
                elements = range(alg.base.n)
                for choice in product(elements, repeat=len(names)):
                    assignment = dict(zip(names, choice))
                    value = evaluate(phi, alg, assignment)
                    if value != alg.base.top:
                        value_set = alg.base.subsets[value]
                        missing = next(
                            x for x in range(points) if not (value_set >> x) & 1
                        )
                        val = {
                            name: alg.base.subsets[el]
                            for name, el in assignment.items()
                        }
                        return SearchResult(space, val, missing)
            else:
                raise ValueError(f"unknown semantics {semantics!r}")
    return None


def worked_examples() -> tuple[KripkeModel, KripkeModel]:
    """Two small three-world models used by the golden tests.

    The first is reflexive and transitive with w0 seeing w1 and w2,
    V(p) = {w1}; it satisfies ◇p ∧ ◇¬p at w0. The second has
    R = {(w0,w1), (w0,w2), (w1,w1), (w2,w2)} and V(p) = {w1},
    V(q) = {w2}, reproduced edge for edge."""
    frame1 = KripkeFrame.from_edges(
        3, [(0, 0), (1, 1), (2, 2), (0, 1), (0, 2)]
    )
    model1 = KripkeModel(frame1, {"p": 0b010})
    frame2 = KripkeFrame.from_edges(3, [(0, 1), (0, 2), (1, 1), (2, 2)])
    model2 = KripkeModel(frame2, {"p": 0b010, "q": 0b100})
    return model1, model2


# --- Alexandrov agreement -------------------------------------------------


@dataclass
class AgreementResult:
    distinct_values: int
    formulas_checked: int
    disagreement: Optional[Formula]


def agreement_closure(
    space: FiniteSpace,
    valuation: Mapping[str, int],
    max_depth: Optional[int] = None,
) -> AgreementResult:
    """Certify kripke_eval ∘ model_from_space ≡ membership in topo_eval
    for every formula over the valuation's atoms.

    Breadth-first enumeration by connective count with semantic value
    deduplication: each new formula is evaluated by both routes and the
    pair (kripke world-set, topo subset) must agree; only formulas
    realizing a new value spawn further combinations. The value space
    is finite, so the closure saturates — afterwards any formula of
    any depth evaluates inside the checked set. max_depth limits the
    rounds (None = run to saturation)."""
    model = model_from_space(space, valuation)
    worlds = range(space.points)

    def kripke_set(phi: Formula) -> int:
        mask = 0
        for w in worlds:
            if kripke_eval(model, w, phi):
                mask |= 1 << w
        return mask

    checked = 0
    seen: dict[int, Formula] = {}
    frontier: list[tuple[int, Formula]] = []

    def consider(phi: Formula) -> Optional[Formula]:
        nonlocal checked
        checked += 1
        t = topo_eval(space, valuation, phi)
        k = kripke_set(phi)
        if t != k:
            return phi
        if t not in seen:
            seen[t] = phi
            frontier.append((t, phi))
        return None

    seeds = [Formula("bot"), Formula("top")] + [atom(name) for name in valuation]
    for phi in seeds:
        bad = consider(phi)
        if bad is not None:
            return AgreementResult(len(seen), checked, bad)
    depth = 0
    while frontier and (max_depth is None or depth < max_depth):
        depth += 1
        new_sources = frontier
        frontier = []
        known = list(seen.items())
        for _, phi in new_sources:
            for wrap in (neg, box, dia):
                bad = consider(wrap(phi))
                if bad is not None:
                    return AgreementResult(len(seen), checked, bad)
            for _, psi in known:
                for combine in ("and", "or", "imp"):
                    for a, b in ((phi, psi), (psi, phi)):
                        bad = consider(Formula(combine, args=(a, b)))
                        if bad is not None:
                            return AgreementResult(len(seen), checked, bad)
    return AgreementResult(len(seen), checked, None)
