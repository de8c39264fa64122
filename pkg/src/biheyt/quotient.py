"""Lattice homomorphisms, kernels, congruences, and quotient algebras.

A verified hom preserves bottom, top, meet and join; the 'heyting'
flavor additionally preserves implication and 'coheyting' preserves
subtraction. Congruences are equivalence relations compatible with
meet and join; quotients rebuild the block lattice from scratch and
cross-check it against the projected tables, which catches any relation
that merely pretends to be a congruence.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product
from typing import Sequence

from .bitsets import all_subsets, iter_bits, subset_key
from .errors import (
    BoundExceeded,
    NotACongruence,
    NotAHomomorphism,
    WrongKind,
)
from .lattice import FiniteLattice, _lattice_from_rows, chain

DEFAULT_MAX_FILTER_LATTICE = 16


class FilterOrIdeal:
    """A nonempty proper filter (up-closed, meet-closed) or ideal
    (down-closed, join-closed). members is an element bitmask."""

    def __init__(self, lattice: FiniteLattice, members: int, kind: str):
        self.lattice = lattice
        self.members = members
        self.kind = kind

    def __eq__(self, other):
        if not isinstance(other, FilterOrIdeal):
            return NotImplemented
        return (
            self.lattice == other.lattice
            and self.members == other.members
            and self.kind == other.kind
        )

    def __hash__(self):
        return hash((self.lattice, self.members, self.kind))

    def __repr__(self):
        return f"FilterOrIdeal(kind={self.kind!r}, members={sorted(iter_bits(self.members))})"

    def __contains__(self, element: int) -> bool:
        return bool((self.members >> element) & 1)


def _is_filter_mask(lat: FiniteLattice, members: int) -> bool:
    full = (1 << lat.n) - 1
    if members == 0 or members == full:
        return False
    for a in iter_bits(members):
        if lat.up[a] & ~members:
            return False
    for a in iter_bits(members):
        for b in iter_bits(members):
            if not (members >> lat.meet[a][b]) & 1:
                return False
    return True


def _is_ideal_mask(lat: FiniteLattice, members: int) -> bool:
    full = (1 << lat.n) - 1
    if members == 0 or members == full:
        return False
    for a in iter_bits(members):
        if lat.down[a] & ~members:
            return False
    for a in iter_bits(members):
        for b in iter_bits(members):
            if not (members >> lat.join[a][b]) & 1:
                return False
    return True


def make_filter(lat: FiniteLattice, members) -> FilterOrIdeal:
    mask = members if isinstance(members, int) else sum(1 << i for i in set(members))
    if not _is_filter_mask(lat, mask):
        raise WrongKind(f"{sorted(iter_bits(mask))} is not a proper nonempty filter")
    return FilterOrIdeal(lat, mask, "filter")


def make_ideal(lat: FiniteLattice, members) -> FilterOrIdeal:
    mask = members if isinstance(members, int) else sum(1 << i for i in set(members))
    if not _is_ideal_mask(lat, mask):
        raise WrongKind(f"{sorted(iter_bits(mask))} is not a proper nonempty ideal")
    return FilterOrIdeal(lat, mask, "ideal")


def principal_filter(lat: FiniteLattice, a: int) -> FilterOrIdeal:
    return make_filter(lat, lat.up[a])


def principal_ideal(lat: FiniteLattice, a: int) -> FilterOrIdeal:
    return make_ideal(lat, lat.down[a])


def filters(
    lat: FiniteLattice, bound: int = DEFAULT_MAX_FILTER_LATTICE
) -> list[FilterOrIdeal]:
    """All proper nonempty filters, canonically ordered."""
    if lat.n > bound:
        raise BoundExceeded("lattice size", lat.n, bound)
    out = [
        FilterOrIdeal(lat, s, "filter")
        for s in sorted(all_subsets(lat.n), key=subset_key)
        if _is_filter_mask(lat, s)
    ]
    return out


def ideals(
    lat: FiniteLattice, bound: int = DEFAULT_MAX_FILTER_LATTICE
) -> list[FilterOrIdeal]:
    """All proper nonempty ideals, canonically ordered."""
    if lat.n > bound:
        raise BoundExceeded("lattice size", lat.n, bound)
    return [
        FilterOrIdeal(lat, s, "ideal")
        for s in sorted(all_subsets(lat.n), key=subset_key)
        if _is_ideal_mask(lat, s)
    ]


class LatticeHom:
    def __init__(self, source, target, map, flavor):
        self.source = source
        self.target = target
        self.map = tuple(map)
        self.flavor = flavor

    def __call__(self, a: int) -> int:
        return self.map[a]

    def __eq__(self, other):
        if not isinstance(other, LatticeHom):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.map == other.map
        )

    def __hash__(self):
        return hash((self.source, self.target, self.map))

    def __repr__(self):
        return f"LatticeHom({self.map}, flavor={self.flavor!r})"

    @cached_property
    def surjective(self) -> bool:
        return len(set(self.map)) == self.target.n


def check_hom(map: Sequence[int], source, target, flavor="lattice") -> LatticeHom:
    """Verify the map preserves ⊥, ⊤, ∧, ∨ (and →/← per flavor);
    return the hom or raise NotAHomomorphism with the first witness."""
    m = tuple(map)
    if len(m) != source.n:
        raise NotAHomomorphism("totality", len(m), source.n)
    if any(not 0 <= v < target.n for v in m):
        raise NotAHomomorphism("range", min(m), max(m))
    if m[source.bottom] != target.bottom:
        raise NotAHomomorphism("bottom", source.bottom, m[source.bottom])
    if m[source.top] != target.top:
        raise NotAHomomorphism("top", source.top, m[source.top])
    pairs = [("meet", source.meet, target.meet), ("join", source.join, target.join)]
    if flavor == "heyting":
        pairs.append(("implies", source.implies_table, target.implies_table))
    elif flavor == "coheyting":
        pairs.append(("minus", source.minus_table, target.minus_table))
    elif flavor != "lattice":
        raise ValueError(f"unknown flavor {flavor!r}")
    for name, src_op, dst_op in pairs:
        for a in range(source.n):
            for b in range(source.n):
                if m[src_op[a][b]] != dst_op[m[a]][m[b]]:
                    raise NotAHomomorphism(name, a, b)
    return LatticeHom(source, target, m, flavor)


def is_hom(map, source, target, flavor="lattice") -> bool:
    try:
        check_hom(map, source, target, flavor)
        return True
    except NotAHomomorphism:
        return False


def enumerate_homs(source, target, flavor="lattice", bound: int = 6) -> list[LatticeHom]:
    """All homs source→target by exhaustive search over maps fixing ⊥,⊤."""
    if source.n > bound:
        raise BoundExceeded("lattice size", source.n, bound)
    free = [a for a in range(source.n) if a not in (source.bottom, source.top)]
    out = []
    if source.bottom == source.top:
        # one-element source: single candidate, valid iff target bounds coincide
        candidate = [target.bottom] * source.n
        if is_hom(candidate, source, target, flavor):
            out.append(LatticeHom(source, target, candidate, flavor))
        return out
    for images in product(range(target.n), repeat=len(free)):
        m = [0] * source.n
        m[source.bottom] = target.bottom
        m[source.top] = target.top
        for a, v in zip(free, images):
            m[a] = v
        if is_hom(m, source, target, flavor):
            out.append(LatticeHom(source, target, m, flavor))
    return out


def compose(g: LatticeHom, f: LatticeHom) -> LatticeHom:
    """g∘f, verified on the way out."""
    if f.target != g.source:
        raise NotAHomomorphism("composition", f.target.n, g.source.n)
    flavor = f.flavor if f.flavor == g.flavor else "lattice"
    return check_hom([g.map[f.map[a]] for a in range(f.source.n)],
                     f.source, g.target, flavor)


def kernel(phi: LatticeHom) -> int:
    """Preimage of the target bottom, as an element mask. For targets
    with more than one element this is always a proper nonempty ideal;
    when the target is the one-element lattice it is the whole carrier."""
    mask = 0
    for a in range(phi.source.n):
        if phi.map[a] == phi.target.bottom:
            mask |= 1 << a
    return mask


def preimage_of_top(phi: LatticeHom) -> int:
    mask = 0
    for a in range(phi.source.n):
        if phi.map[a] == phi.target.top:
            mask |= 1 << a
    return mask


def two_valued_homs(lat: FiniteLattice) -> list[LatticeHom]:
    """All surjective bounded-lattice homs onto the two-element algebra,
    found by scanning every 0/1 labelling of the carrier.

    These are the two-valued truth assignments; φ⁻¹(⊤) ranges exactly
    over the prime filters. Some of them also preserve implication, but
    requiring that would break the prime-filter bijection (on the
    3-chain, the assignment sending the middle to 0 maps m→⊥ to 0 while
    φ(m)→φ(⊥) = 1)."""
    two = chain(2)
    out = []
    for s in sorted(all_subsets(lat.n), key=subset_key):
        m = [(s >> a) & 1 for a in range(lat.n)]
        if len(set(m)) < 2:
            continue
        if is_hom(m, lat, two, "lattice"):
            out.append(LatticeHom(lat, two, m, "lattice"))
    return out


class Congruence:
    """A partition of the carrier compatible with meet and join. Blocks
    are bitmasks sorted by least member; block_of maps elements to
    block indices."""

    def __init__(self, lattice: FiniteLattice, blocks: tuple[int, ...]):
        self.lattice = lattice
        self.blocks = blocks
        block_of = [0] * lattice.n
        for k, blk in enumerate(blocks):
            for a in iter_bits(blk):
                block_of[a] = k
        self.block_of = tuple(block_of)

    def __eq__(self, other):
        if not isinstance(other, Congruence):
            return NotImplemented
        return self.lattice == other.lattice and self.blocks == other.blocks

    def __hash__(self):
        return hash((self.lattice, self.blocks))

    def __repr__(self):
        return f"Congruence(blocks={[sorted(iter_bits(b)) for b in self.blocks]})"

    def related(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]


def check_congruence(lat: FiniteLattice, blocks) -> Congruence:
    """Validate a partition as a lattice congruence."""
    masks = []
    seen = 0
    for blk in blocks:
        mask = blk if isinstance(blk, int) else sum(1 << i for i in set(blk))
        if mask & seen:
            raise NotACongruence("partition", sorted(iter_bits(mask & seen)))
        seen |= mask
        masks.append(mask)
    if seen != (1 << lat.n) - 1:
        raise NotACongruence("partition", sorted(iter_bits(~seen & ((1 << lat.n) - 1))))
    masks.sort(key=lambda mask: (mask & -mask).bit_length())
    cong = Congruence(lat, tuple(masks))
    for op_name, op in (("meet", lat.meet), ("join", lat.join)):
        for blk in masks:
            members = list(iter_bits(blk))
            rep = members[0]
            for a in members[1:]:
                for c in range(lat.n):
                    if cong.block_of[op[rep][c]] != cong.block_of[op[a][c]]:
                        raise NotACongruence(op_name, (rep, a, c))
    return cong


def _congruence_closure(lat: FiniteLattice, seed_pairs) -> Congruence:
    """Smallest lattice congruence containing the seed pairs."""
    parent = list(range(lat.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx == ry:
            return False
        parent[max(rx, ry)] = min(rx, ry)
        return True

    for a, b in seed_pairs:
        union(a, b)
    changed = True
    while changed:
        changed = False
        for a in range(lat.n):
            for b in range(a + 1, lat.n):
                if find(a) != find(b):
                    continue
                for c in range(lat.n):
                    if union(lat.meet[a][c], lat.meet[b][c]):
                        changed = True
                    if union(lat.join[a][c], lat.join[b][c]):
                        changed = True
    groups: dict[int, int] = {}
    for a in range(lat.n):
        groups.setdefault(find(a), 0)
        groups[find(a)] |= 1 << a
    blocks = sorted(groups.values(), key=lambda mask: (mask & -mask).bit_length())
    return Congruence(lat, tuple(blocks))


def congruence_from_ideal(lat: FiniteLattice, ideal: FilterOrIdeal) -> Congruence:
    """Smallest congruence collapsing the ideal onto bottom."""
    if ideal.kind != "ideal":
        raise WrongKind("expected an ideal")
    return _congruence_closure(
        lat, [(lat.bottom, a) for a in iter_bits(ideal.members)]
    )


def congruence_from_filter(lat: FiniteLattice, filt: FilterOrIdeal) -> Congruence:
    """Smallest congruence collapsing the filter onto top."""
    if filt.kind != "filter":
        raise WrongKind("expected a filter")
    return _congruence_closure(lat, [(lat.top, a) for a in iter_bits(filt.members)])


def ideal_relation(lat: FiniteLattice, ideal: FilterOrIdeal, conjunctive=True):
    """The relation 'x ~ y via implications falling in the ideal', in
    its two readings: conjunctive, (x→y)∧(y→x) ∈ I, or biconditional,
    (x→y ∈ I) ⟺ (y→x ∈ I). Returned as a set of ordered pairs for
    comparison against the closure-generated congruence; the relation
    itself need not be a congruence."""
    imp = lat.implies_table
    members = ideal.members
    pairs = set()
    for x in range(lat.n):
        for y in range(lat.n):
            if conjunctive:
                if (members >> lat.meet[imp[x][y]][imp[y][x]]) & 1:
                    pairs.add((x, y))
            else:
                if bool((members >> imp[x][y]) & 1) == bool((members >> imp[y][x]) & 1):
                    pairs.add((x, y))
    return pairs


def quotient(lat: FiniteLattice, cong: Congruence) -> tuple[FiniteLattice, LatticeHom]:
    """Block lattice plus the (verified, surjective) projection.

    The quotient order is rebuilt from block representatives and its
    tables recomputed, then every projected meet/join is cross-checked
    against the recomputed tables."""
    reps = [(blk & -blk).bit_length() - 1 for blk in cong.blocks]
    k = len(reps)
    up = []
    for i in range(k):
        row = 0
        for j in range(k):
            if cong.block_of[lat.join[reps[i]][reps[j]]] == j:
                row |= 1 << j
        up.append(row)
    q = _lattice_from_rows(up)
    for a in range(lat.n):
        for b in range(lat.n):
            ba, bb = cong.block_of[a], cong.block_of[b]
            if cong.block_of[lat.meet[a][b]] != q.meet[ba][bb]:
                raise NotACongruence("meet", (a, b))
            if cong.block_of[lat.join[a][b]] != q.join[ba][bb]:
                raise NotACongruence("join", (a, b))
    proj = check_hom(cong.block_of, lat, q, "lattice")
    assert proj.surjective
    return q, proj


def projection_implication_mismatches(
    lat: FiniteLattice, cong: Congruence
) -> list[tuple[int, int]]:
    """Pairs (a, b) where π(a→b) differs from π(a)→π(b); empty exactly
    when the projection is a Heyting hom."""
    q, proj = quotient(lat, cong)
    out = []
    for a in range(lat.n):
        for b in range(lat.n):
            if proj.map[lat.implies_table[a][b]] != q.implies_table[proj.map[a]][proj.map[b]]:
                out.append((a, b))
    return out
