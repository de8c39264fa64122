"""Finite bounded lattices and their Heyting / co-Heyting operations.

Elements are dense indices 0..n-1. The order relation is stored closed
(full reflexive-transitive relation) as bitmask rows, so order queries
are O(1) and candidate scans for residuals are O(n). Operation tables
are memoized lazily via cached_property; the computations are pure and
idempotent, so concurrent first use is harmless.

A lattice is distributive iff a∧(b∨c) = (a∧b)∨(a∧c) for all triples;
the Heyting implication a→b = ⋁{x | a∧x ≤ b} and the co-Heyting
subtraction a←b = ⋀{x | a ≤ b∨x} are only well behaved (residuation /
co-residuation) on distributive lattices, so both refuse otherwise.
"""

from __future__ import annotations

from functools import cached_property
from itertools import permutations
from typing import Iterator, Optional, Sequence

from .bitsets import iter_bits, subset_key
from .errors import (
    BoundExceeded,
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotDistributive,
)


class FiniteLattice:
    """A finite bounded lattice on elements 0..n-1.

    Attributes:
        n: element count.
        up: up[i] = bitmask of elements j with i <= j (row of the closed order).
        down: down[i] = bitmask of elements j with j <= i.
        meet, join: n x n operation tables (tuples of tuples).
        bottom, top: the global bounds.
        subsets: optional back-references; when the lattice is a lattice of
            point-subsets (opens, closeds, spectra), subsets[i] is the mask
            of points that element i stands for. Ignored by equality.
    """

    def __init__(self, n, up, down, meet, join, bottom, top, subsets=None):
        self.n = n
        self.up = up
        self.down = down
        self.meet = meet
        self.join = join
        self.bottom = bottom
        self.top = top
        self.subsets = subsets

    def leq(self, a: int, b: int) -> bool:
        return bool((self.up[a] >> b) & 1)

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.n == other.n and self.up == other.up

    def __hash__(self):
        return hash((self.n, self.up))

    def __repr__(self):
        return f"FiniteLattice(n={self.n}, covers={cover_pairs(self)})"

    @cached_property
    def distributive_failure(self) -> Optional[tuple[int, int, int]]:
        """First triple violating a∧(b∨c) = (a∧b)∨(a∧c), or None."""
        meet, join = self.meet, self.join
        rng = range(self.n)
        for a in rng:
            ma = meet[a]
            for b in rng:
                ab = ma[b]
                for c in rng:
                    if ma[join[b][c]] != join[ab][ma[c]]:
                        return (a, b, c)
        return None

    def _require_distributive(self):
        bad = self.distributive_failure
        if bad is not None:
            raise NotDistributive(*bad)

    @cached_property
    def implies_table(self) -> tuple[tuple[int, ...], ...]:
        """implies[a][b] = ⋁{x | a∧x ≤ b}. Requires distributivity."""
        self._require_distributive()
        meet, join, down = self.meet, self.join, self.down
        table = []
        for a in range(self.n):
            ma = meet[a]
            row = []
            for b in range(self.n):
                db = down[b]
                acc = self.bottom
                for x in range(self.n):
                    if (db >> ma[x]) & 1:
                        acc = join[acc][x]
                row.append(acc)
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def minus_table(self) -> tuple[tuple[int, ...], ...]:
        """minus[a][b] = ⋀{x | a ≤ b∨x}. Requires distributivity."""
        self._require_distributive()
        meet, join = self.meet, self.join
        table = []
        for a in range(self.n):
            ua = self.up[a]
            row = []
            for b in range(self.n):
                jb = join[b]
                acc = self.top
                for x in range(self.n):
                    if (ua >> jb[x]) & 1:  # a <= b∨x
                        acc = meet[acc][x]
                row.append(acc)
            table.append(tuple(row))
        return tuple(table)

    @cached_property
    def neg_table(self) -> tuple[int, ...]:
        imp = self.implies_table
        return tuple(imp[a][self.bottom] for a in range(self.n))

    @cached_property
    def conot_table(self) -> tuple[int, ...]:
        minus = self.minus_table
        return tuple(minus[self.top][a] for a in range(self.n))

    @cached_property
    def boundary_table(self) -> tuple[int, ...]:
        conot = self.conot_table
        return tuple(self.meet[a][conot[a]] for a in range(self.n))


def _lattice_from_rows(up: Sequence[int], subsets=None) -> FiniteLattice:
    """Build a lattice from closed order rows; raises if not one."""
    n = len(up)
    if n == 0:
        raise NotBounded("empty carrier has no bottom or top")
    full = (1 << n) - 1
    for i in range(n):
        if not (up[i] >> i) & 1:
            raise NotAPartialOrder(i, i)
        for j in iter_bits(up[i]):
            if j != i and (up[j] >> i) & 1:
                raise NotAPartialOrder(i, j)
            if up[j] & ~up[i]:
                raise ValueError("order rows are not transitively closed")
    down = [0] * n
    for i in range(n):
        for j in iter_bits(up[i]):
            down[j] |= 1 << i

    up_index = {up[i]: i for i in range(n)}
    down_index = {down[i]: i for i in range(n)}
    join = []
    meet = []
    for a in range(n):
        jrow = []
        mrow = []
        for b in range(n):
            common_up = up[a] & up[b]
            j = up_index.get(common_up)
            if j is None:
                raise NotALattice(a, b, "join")
            jrow.append(j)
            common_down = down[a] & down[b]
            m = down_index.get(common_down)
            if m is None:
                raise NotALattice(a, b, "meet")
            mrow.append(m)
        join.append(tuple(jrow))
        meet.append(tuple(mrow))

    bottom = up_index.get(full)
    top = down_index.get(full)
    if bottom is None or top is None:
        raise NotBounded("no global bottom or top")
    return FiniteLattice(
        n, tuple(up), tuple(down), tuple(meet), tuple(join), bottom, top, subsets
    )


def build_lattice(n: int, leq_pairs) -> FiniteLattice:
    """Construct the lattice whose order is the reflexive-transitive
    closure of the given pairs (i, j) meaning i <= j."""
    up = [1 << i for i in range(n)]
    for a, b in leq_pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"pair ({a}, {b}) references elements outside 0..{n-1}")
        up[a] |= 1 << b
    # Warshall closure over bitmask rows.
    for k in range(n):
        rk = up[k]
        for i in range(n):
            if (up[i] >> k) & 1:
                up[i] |= rk
    return _lattice_from_rows(up)


def lattice_of_subsets(family: Sequence[int]) -> FiniteLattice:
    """Lattice of an inclusion-ordered family of subset masks.

    The family must already be canonically sorted and closed under the
    meets/joins it is supposed to have (callers: open/closed set
    lattices, spectra)."""
    n = len(family)
    up = []
    for i in range(n):
        row = 0
        for j in range(n):
            if family[i] & ~family[j] == 0:
                row |= 1 << j
        up.append(row)
    return _lattice_from_rows(up, subsets=tuple(family))


def chain(n: int) -> FiniteLattice:
    """The n-element chain 0 < 1 < ... < n-1."""
    return build_lattice(n, [(i, i + 1) for i in range(n - 1)])


def check_distributive(lat: FiniteLattice) -> bool:
    return lat.distributive_failure is None


def heyting_implies(lat: FiniteLattice, a: int, b: int) -> int:
    return lat.implies_table[a][b]


def heyting_not(lat: FiniteLattice, a: int) -> int:
    return lat.neg_table[a]


def coheyting_minus(lat: FiniteLattice, a: int, b: int) -> int:
    return lat.minus_table[a][b]


def coheyting_not(lat: FiniteLattice, a: int) -> int:
    return lat.conot_table[a]


def boundary(lat: FiniteLattice, a: int) -> int:
    return lat.boundary_table[a]


def dualize(lat: FiniteLattice) -> FiniteLattice:
    """Same carrier with the opposite order: meets and joins swap,
    bottom and top swap. Involution."""
    return FiniteLattice(
        lat.n, lat.down, lat.up, lat.join, lat.meet, lat.top, lat.bottom
    )


def is_boolean(lat: FiniteLattice) -> bool:
    """True iff every element has a complement. Refuses non-distributive
    input, where complements need not be unique."""
    lat._require_distributive()
    for a in range(lat.n):
        if not any(
            lat.meet[a][x] == lat.bottom and lat.join[a][x] == lat.top
            for x in range(lat.n)
        ):
            return False
    return True


def cover_pairs(lat: FiniteLattice) -> list[tuple[int, int]]:
    """Hasse edges (i, j): i < j with nothing strictly between."""
    out = []
    for i in range(lat.n):
        for j in iter_bits(lat.up[i]):
            if j != i and lat.up[i] & lat.down[j] == (1 << i) | (1 << j):
                out.append((i, j))
    out.sort()
    return out


class HeytingStructure:
    """A distributive bounded lattice bundled with its implication and
    negation tables (¬a = a→⊥)."""

    def __init__(self, base: FiniteLattice):
        self.base = base
        self.implies = base.implies_table
        self.neg = base.neg_table

    def __repr__(self):
        return f"HeytingStructure(n={self.base.n})"


class CoHeytingStructure:
    """A distributive bounded lattice bundled with subtraction,
    co-negation (∼a = ⊤←a) and boundary (∂a = a∧∼a) tables."""

    def __init__(self, base: FiniteLattice):
        self.base = base
        self.minus = base.minus_table
        self.conot = base.conot_table
        self.boundary = base.boundary_table

    def __repr__(self):
        return f"CoHeytingStructure(n={self.base.n})"


def heyting(lat: FiniteLattice) -> HeytingStructure:
    return HeytingStructure(lat)


def coheyting(lat: FiniteLattice) -> CoHeytingStructure:
    return CoHeytingStructure(lat)


# ---------------------------------------------------------------------------
# Enumeration. Reflexive transitive relations are generated row by row
# with incremental pruning: once rows i and j are both assigned, the
# constraint (j in row i => row j ⊆ row i) is transitivity itself.


def closed_relation_rows(
    m: int, antisymmetric: bool = False
) -> Iterator[tuple[int, ...]]:
    """All reflexive transitive relations on 0..m-1 as row-mask tuples,
    in lexicographic row order. With antisymmetric=True, partial orders."""
    if m == 0:
        yield ()
        return
    rows: list[int] = []

    def consistent(i, ri):
        for j in range(i):
            rj = rows[j]
            if (ri >> j) & 1:
                if rj & ~ri:
                    return False
                if antisymmetric and (rj >> i) & 1:
                    return False
            if (rj >> i) & 1 and ri & ~rj:
                return False
        return True

    def assign(i):
        if i == m:
            yield tuple(rows)
            return
        for mask in range(1 << m):
            if not (mask >> i) & 1:
                continue
            if consistent(i, mask):
                rows.append(mask)
                yield from assign(i + 1)
                rows.pop()

    yield from assign(0)


def enumerate_posets(m: int) -> Iterator[tuple[int, ...]]:
    """All labeled partial orders on m points, rows up[i] = {j | i <= j}."""
    return closed_relation_rows(m, antisymmetric=True)


def _downsets(up_rows: tuple[int, ...], cap: int) -> Optional[list[int]]:
    """Down-closed subsets of the poset, or None if more than cap."""
    k = len(up_rows)
    down = [0] * k
    for i in range(k):
        for j in iter_bits(up_rows[i]):
            down[j] |= 1 << i
    out = []
    for s in range(1 << k):
        t = s
        ok = True
        while t:
            low = t & -t
            if down[low.bit_length() - 1] & ~s:
                ok = False
                break
            t ^= low
        if ok:
            out.append(s)
            if len(out) > cap:
                return None
    return out


def _incomparable_pairs(up_rows: tuple[int, ...]) -> int:
    k = len(up_rows)
    count = 0
    for i in range(k):
        for j in range(i + 1, k):
            if not ((up_rows[i] >> j) & 1 or (up_rows[j] >> i) & 1):
                count += 1
    return count


def lattice_certificate(lat: FiniteLattice) -> tuple:
    """Isomorphism-invariant canonical form: relabel within classes of
    the (|down|, |up|) profile, minimizing the relabeled order rows."""
    n = lat.n
    profile = [(lat.down[i].bit_count(), lat.up[i].bit_count()) for i in range(n)]
    order = sorted(range(n), key=lambda i: profile[i])
    # positions grouped by profile; permute within groups only
    groups: list[list[int]] = []
    for i in order:
        if groups and profile[groups[-1][0]] == profile[i]:
            groups[-1].append(i)
        else:
            groups.append([i])
    best = None
    for parts in _group_perms(groups):
        old_of_new = parts
        new_of_old = [0] * n
        for new, old in enumerate(old_of_new):
            new_of_old[old] = new
        rows = []
        for new in range(n):
            row = 0
            for j in iter_bits(lat.up[old_of_new[new]]):
                row |= 1 << new_of_old[j]
            rows.append(row)
        cand = tuple(rows)
        if best is None or cand < best:
            best = cand
    return (n, best)


def _group_perms(groups: list[list[int]]) -> Iterator[list[int]]:
    if not groups:
        yield []
        return
    head, rest = groups[0], groups[1:]
    for perm in permutations(head):
        for tail in _group_perms(rest):
            yield list(perm) + tail


def enumerate_distributive_lattices(max_size: int) -> list[FiniteLattice]:
    """Every bounded distributive lattice with at most max_size elements,
    one representative per isomorphism class.

    Uses the correspondence between finite distributive lattices and the
    down-set lattices of their posets of join-irreducibles: posets on k
    points are enumerated for k < max_size and the ones with at most
    max_size down-sets are kept. A poset on exactly max_size-1 points
    fits only when it is a chain, so that level is special-cased.
    """
    if max_size < 1:
        return []
    if max_size > 9:
        raise BoundExceeded("lattice size", max_size, 9)
    seen = set()
    out = []
    for k in range(max_size):
        if k == max_size - 1 and k >= 1:
            rows_iter = iter([tuple(((1 << k) - 1) & ~((1 << i) - 1) for i in range(k))])
        else:
            rows_iter = enumerate_posets(k)
        for rows in rows_iter:
            if k + 1 + _incomparable_pairs(rows) > max_size:
                continue
            downs = _downsets(rows, max_size)
            if downs is None:
                continue
            downs.sort(key=subset_key)
            lat = lattice_of_subsets(downs)
            cert = lattice_certificate(lat)
            if cert not in seen:
                seen.add(cert)
                out.append(lat)
    return out
