"""Algebra-valued formula evaluation and the dual-intuitionistic law
suites.

eval_intuitionistic interprets the {⊥,⊤,¬,∧,∨,→} fragment in a Heyting
structure; eval_dual interprets {⊥,⊤,∼,∧,∨,←} in a co-Heyting
structure. Each rejects the other fragment's connectives (and the
modal ones) instead of coercing, because the two negations mean
different things.

The law suites scan whole operation tables and report every violation
with a witness; over lattices of closed sets the conjunctive De Morgan
law, the excluded middle, and the four boundary identities hold, while
the disjunctive De Morgan law and the law of noncontradiction fail in
general — that failure is the point, so suites never stop early.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import UnboundAtom, UnsupportedConnective
from .lattice import (
    CoHeytingStructure,
    FiniteLattice,
    HeytingStructure,
    is_boolean,
)
from .formulas import Formula

_INTUITIONISTIC = {"atom", "bot", "top", "not", "and", "or", "imp"}
_DUAL = {"atom", "bot", "top", "conot", "and", "or", "coimp"}


def eval_intuitionistic(
    phi: Formula, alg: HeytingStructure, assignment: Mapping[str, int]
) -> int:
    """Value of phi in the Heyting algebra; ¬φ is φ→⊥."""
    if phi.kind not in _INTUITIONISTIC:
        raise UnsupportedConnective(phi.kind, "intuitionistic")
    base = alg.base
    if phi.kind == "atom":
        if phi.name not in assignment:
            raise UnboundAtom(phi.name)
        return assignment[phi.name]
    if phi.kind == "bot":
        return base.bottom
    if phi.kind == "top":
        return base.top
    if phi.kind == "not":
        return alg.neg[eval_intuitionistic(phi.args[0], alg, assignment)]
    a = eval_intuitionistic(phi.args[0], alg, assignment)
    b = eval_intuitionistic(phi.args[1], alg, assignment)
    if phi.kind == "and":
        return base.meet[a][b]
    if phi.kind == "or":
        return base.join[a][b]
    return alg.implies[a][b]


def eval_dual(
    phi: Formula, alg: CoHeytingStructure, assignment: Mapping[str, int]
) -> int:
    """Value of phi in the co-Heyting algebra; ∼φ is ⊤←φ."""
    if phi.kind not in _DUAL:
        raise UnsupportedConnective(phi.kind, "dual")
    base = alg.base
    if phi.kind == "atom":
        if phi.name not in assignment:
            raise UnboundAtom(phi.name)
        return assignment[phi.name]
    if phi.kind == "bot":
        return base.bottom
    if phi.kind == "top":
        return base.top
    if phi.kind == "conot":
        return alg.conot[eval_dual(phi.args[0], alg, assignment)]
    a = eval_dual(phi.args[0], alg, assignment)
    b = eval_dual(phi.args[1], alg, assignment)
    if phi.kind == "and":
        return base.meet[a][b]
    if phi.kind == "or":
        return base.join[a][b]
    return alg.minus[a][b]


@dataclass
class LawReport:
    law: str
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations

    def __str__(self):
        state = "ok" if self.ok else f"{len(self.violations)} violations"
        first = f", first witness {self.violations[0]}" if self.violations else ""
        return f"{self.law}: {state} over {self.checked} cases{first}"


def check_dual_de_morgan(alg: CoHeytingStructure) -> list[LawReport]:
    """The conjunctive law ∼(a∧b) = ∼a∨∼b (a theorem here) and the
    disjunctive law ∼(a∨b) = ∼a∧∼b (which fails in general)."""
    base = alg.base
    n = base.n
    conj_bad = []
    disj_bad = []
    for a in range(n):
        for b in range(n):
            if alg.conot[base.meet[a][b]] != base.join[alg.conot[a]][alg.conot[b]]:
                conj_bad.append((a, b))
            if alg.conot[base.join[a][b]] != base.meet[alg.conot[a]][alg.conot[b]]:
                disj_bad.append((a, b))
    return [
        LawReport("conjunctive dual De Morgan", n * n, tuple(conj_bad)),
        LawReport("disjunctive dual De Morgan", n * n, tuple(disj_bad)),
    ]


def check_lem(alg: CoHeytingStructure) -> LawReport:
    """a ∨ ∼a = ⊤ for every a."""
    base = alg.base
    bad = tuple(
        (a,) for a in range(base.n) if base.join[a][alg.conot[a]] != base.top
    )
    return LawReport("excluded middle", base.n, bad)


def find_paraconsistent_witness(alg: CoHeytingStructure) -> Optional[int]:
    """Some a with ∂a ≠ ⊥, or None (None exactly on Boolean algebras)."""
    for a in range(alg.base.n):
        if alg.boundary[a] != alg.base.bottom:
            return a
    return None


def check_boundary_laws(alg: CoHeytingStructure) -> list[LawReport]:
    """The four boundary identities:
    1. ∂(a∧b) = (∂a∧b) ∨ (a∧∂b)
    2. ∂a ∨ ∂b = ∂(a∨b) ∨ ∂(a∧b)
    3. ∂∂a = ∂a
    4. a = ∼∼a ∨ ∂a
    """
    base = alg.base
    n = base.n
    meet, join, bd, conot = base.meet, base.join, alg.boundary, alg.conot
    leibniz = []
    join_split = []
    for a in range(n):
        for b in range(n):
            if bd[meet[a][b]] != join[meet[bd[a]][b]][meet[a][bd[b]]]:
                leibniz.append((a, b))
            if join[bd[a]][bd[b]] != join[bd[join[a][b]]][bd[meet[a][b]]]:
                join_split.append((a, b))
    idem = tuple((a,) for a in range(n) if bd[bd[a]] != bd[a])
    decomp = tuple((a,) for a in range(n) if join[conot[conot[a]]][bd[a]] != a)
    return [
        LawReport("boundary of a meet", n * n, tuple(leibniz)),
        LawReport("boundary join split", n * n, tuple(join_split)),
        LawReport("boundary idempotence", n, idem),
        LawReport("co-negation decomposition", n, decomp),
    ]


@dataclass
class BooleanCriterion:
    complemented: bool
    boundary_trivial: bool
    double_negation: bool

    @property
    def consistent(self) -> bool:
        return self.complemented == self.boundary_trivial == self.double_negation


def boolean_iff_trivial_boundary(lat: FiniteLattice) -> BooleanCriterion:
    """Three independently computed sides of the Boolean criterion:
    complement search, ∂a = ⊥ for all a, and ¬¬a = a for all a."""
    complemented = is_boolean(lat)
    boundary_trivial = all(lat.boundary_table[a] == lat.bottom for a in range(lat.n))
    double_negation = all(
        lat.neg_table[lat.neg_table[a]] == a for a in range(lat.n)
    )
    return BooleanCriterion(complemented, boundary_trivial, double_negation)
