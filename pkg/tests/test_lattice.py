import pytest

from biheyt import (
    NotALattice,
    NotAPartialOrder,
    NotBounded,
    NotDistributive,
    boundary,
    build_lattice,
    chain,
    check_distributive,
    coheyting_minus,
    coheyting_not,
    cover_pairs,
    dualize,
    heyting_implies,
    heyting_not,
    is_boolean,
    lattice_of_subsets,
)
from biheyt.bitsets import subset_key


def leq_set(lat):
    return {(a, b) for a in range(lat.n) for b in range(lat.n) if lat.leq(a, b)}


# -- constructors ------------------------------------------------------------


def test_one_element_lattice():
    one = build_lattice(1, [])
    assert one.bottom == one.top == 0
    assert one.meet[0][0] == one.join[0][0] == 0
    assert check_distributive(one) and is_boolean(one)
    assert heyting_implies(one, 0, 0) == 0
    assert coheyting_minus(one, 0, 0) == 0


def test_chain_is_min_max():
    c = chain(3)
    # oracle: on a chain, meet is pairwise min and join pairwise max
    for a in range(3):
        for b in range(3):
            assert c.meet[a][b] == min(a, b)
            assert c.join[a][b] == max(a, b)
    assert c.bottom == 0 and c.top == 2
    assert leq_set(c) == {(a, b) for a in range(3) for b in range(3) if a <= b}


def test_unrelated_pair_is_not_a_lattice():
    # oracle: elements 1 and 2 have no common upper bound among 0..3
    pairs = [(0, 1), (0, 2)]
    above = {x: {x} for x in range(4)}
    for a, b in pairs:
        above[a].add(b)
    common = {x for x in range(4) if x in above[1] and x in above[2]}
    assert common == set()
    with pytest.raises(NotALattice):
        build_lattice(4, pairs)


def test_antisymmetry_violation():
    with pytest.raises(NotAPartialOrder):
        build_lattice(2, [(0, 1), (1, 0)])


def test_empty_carrier_is_not_bounded():
    with pytest.raises(NotBounded):
        build_lattice(0, [])


def test_pairs_out_of_range():
    with pytest.raises(ValueError):
        build_lattice(2, [(0, 5)])


def test_transitive_closure_of_arbitrary_pairs():
    direct = build_lattice(4, [(0, 1), (1, 2), (2, 3)])
    redundant = build_lattice(4, [(0, 1), (1, 2), (2, 3), (0, 3), (1, 3)])
    assert direct == redundant
    assert cover_pairs(direct) == [(0, 1), (1, 2), (2, 3)]


# -- distributivity ----------------------------------------------------------


def test_chains_are_distributive():
    for n in range(1, 6):
        assert check_distributive(chain(n))


def test_m3_is_not_distributive(m3_diamond):
    # oracle: exhaustive triple check on the five elements, sets-of-ints
    below = {0: {0}, 1: {0, 1}, 2: {0, 2}, 3: {0, 3}, 4: {0, 1, 2, 3, 4}}

    def meet(a, b):
        both = below[a] & below[b]
        return max(both, key=lambda x: len(below[x]))

    def join(a, b):
        above = [x for x in range(5) if a in below[x] and b in below[x]]
        return min(above, key=lambda x: len(below[x]))

    found = [
        (a, b, c)
        for a in range(5)
        for b in range(5)
        for c in range(5)
        if meet(a, join(b, c)) != join(meet(a, b), meet(a, c))
    ]
    assert found
    assert not check_distributive(m3_diamond)
    assert m3_diamond.distributive_failure in found


def test_open_set_lattices_are_distributive(spaces_3):
    from biheyt import open_lattice

    for sp in spaces_3:
        assert check_distributive(open_lattice(sp).base)


def test_heyting_refused_on_m3(m3_diamond):
    with pytest.raises(NotDistributive):
        heyting_implies(m3_diamond, 1, 2)
    with pytest.raises(NotDistributive):
        coheyting_minus(m3_diamond, 1, 2)
    with pytest.raises(NotDistributive):
        is_boolean(m3_diamond)


# -- residuals ---------------------------------------------------------------


def greatest_x_with_meet_below(lat, a, b):
    """Independent oracle: maximum of {x | a∧x ≤ b} under the order."""
    candidates = [x for x in range(lat.n) if lat.leq(lat.meet[a][x], b)]
    tops = [x for x in candidates if all(lat.leq(y, x) for y in candidates)]
    return tops[0] if tops else None


def least_x_with_join_above(lat, a, b):
    candidates = [x for x in range(lat.n) if lat.leq(a, lat.join[b][x])]
    bottoms = [x for x in candidates if all(lat.leq(x, y) for y in candidates)]
    return bottoms[0] if bottoms else None


def test_implies_against_max_candidate_oracle(lattices_6):
    for lat in lattices_6:
        for a in range(lat.n):
            for b in range(lat.n):
                assert heyting_implies(lat, a, b) == greatest_x_with_meet_below(lat, a, b)
                assert coheyting_minus(lat, a, b) == least_x_with_join_above(lat, a, b)


def test_implies_top_iff_leq(lattices_6):
    for lat in lattices_6:
        for a in range(lat.n):
            for b in range(lat.n):
                assert (heyting_implies(lat, a, b) == lat.top) == lat.leq(a, b)


def test_implies_examples(chain3):
    assert heyting_implies(chain3, 1, 0) == 0
    for b in range(3):
        assert heyting_implies(chain3, 0, b) == chain3.top
    assert heyting_not(chain3, 0) == 2
    assert heyting_not(chain3, 1) == 0
    assert heyting_not(chain3, heyting_not(chain3, 1)) == 2  # ¬¬m = ⊤ ≠ m


def test_boolean_two_chain_double_negation():
    two = chain(2)
    for a in range(2):
        assert heyting_not(two, heyting_not(two, a)) == a


def test_residuation_invariant(lattices_6):
    for lat in lattices_6:
        for a in range(lat.n):
            for b in range(lat.n):
                for x in range(lat.n):
                    assert lat.leq(lat.meet[a][x], b) == lat.leq(
                        x, heyting_implies(lat, a, b)
                    )
                    assert lat.leq(coheyting_minus(lat, a, b), x) == lat.leq(
                        a, lat.join[b][x]
                    )


def test_double_negation_bounds(lattices_6):
    for lat in lattices_6:
        for a in range(lat.n):
            assert lat.leq(a, heyting_not(lat, heyting_not(lat, a)))
            assert lat.leq(coheyting_not(lat, coheyting_not(lat, a)), a)


def test_conot_is_least_complementing_join(lattices_6):
    for lat in lattices_6:
        for a in range(lat.n):
            c = coheyting_not(lat, a)
            assert lat.join[a][c] == lat.top
            for x in range(lat.n):
                if lat.join[a][x] == lat.top:
                    assert lat.leq(c, x)


# -- co-Heyting on closed sets ----------------------------------------------


def test_closed_set_subtraction_example():
    # closeds of the space with opens ∅,{0},{0,1},X
    closeds = sorted([0b000, 0b100, 0b110, 0b111], key=subset_key)
    lat = lattice_of_subsets(closeds)
    idx = {s: i for i, s in enumerate(lat.subsets)}
    bc, c, full = idx[0b110], idx[0b100], idx[0b111]
    # oracle: cl({1}) computed set-wise = smallest closed superset of {0b010}
    supersets = [s for s in closeds if 0b010 & ~s == 0]
    cl_b = min(supersets, key=subset_key)
    assert cl_b == 0b110
    assert lat.subsets[coheyting_minus(lat, bc, c)] == cl_b
    assert coheyting_not(lat, bc) == full
    assert boundary(lat, bc) == bc
    assert coheyting_not(lat, full) == idx[0]
    assert boundary(lat, full) == idx[0]
    # minus(a, bottom) = a and minus(bottom, b) = bottom
    for a in range(lat.n):
        assert coheyting_minus(lat, a, idx[0]) == a
        assert coheyting_minus(lat, idx[0], a) == idx[0]
        assert coheyting_minus(lat, a, a) == idx[0]


def test_boolean_boundary_trivial(boolean4):
    for a in range(4):
        assert boundary(boolean4, a) == boolean4.bottom


# -- dualize -----------------------------------------------------------------


def test_dualize_involution(lattices_6):
    for lat in lattices_6:
        assert dualize(dualize(lat)) == lat


def test_dualize_chain(chain3):
    d = dualize(chain3)
    assert d.bottom == 2 and d.top == 0
    assert leq_set(d) == {(a, b) for a in range(3) for b in range(3) if a >= b}


def test_dual_tables_transpose_residuals(lattices_6):
    # order reversal swaps the residual's argument pair:
    # minus on the dual at (a, b) equals implies on the original at (b, a)
    for lat in lattices_6:
        d = dualize(lat)
        for a in range(lat.n):
            for b in range(lat.n):
                assert coheyting_minus(d, a, b) == heyting_implies(lat, b, a)
                assert heyting_implies(d, a, b) == coheyting_minus(lat, b, a)
            assert coheyting_not(d, a) == heyting_not(lat, a)


# -- boolean test ------------------------------------------------------------


def test_is_boolean_examples(chain3, boolean4):
    assert is_boolean(chain(2))
    # oracle: the middle of the 3-chain has no complement
    complements = [
        x for x in range(3) if chain3.meet[1][x] == 0 and chain3.join[1][x] == 2
    ]
    assert complements == []
    assert not is_boolean(chain3)
    assert is_boolean(boolean4)


def test_boolean_criterion_three_ways(lattices_7):
    from biheyt import boolean_iff_trivial_boundary

    for lat in lattices_7:
        crit = boolean_iff_trivial_boundary(lat)
        assert crit.consistent


# -- algebraic laws hold by construction -------------------------------------


def test_meet_join_laws(lattices_6):
    for lat in lattices_6:
        rng = range(lat.n)
        for a in rng:
            assert lat.meet[a][a] == a and lat.join[a][a] == a
            assert lat.leq(lat.bottom, a) and lat.leq(a, lat.top)
            for b in rng:
                assert lat.meet[a][b] == lat.meet[b][a]
                assert lat.join[a][b] == lat.join[b][a]
                assert lat.meet[a][lat.join[a][b]] == a  # absorption
                assert lat.join[a][lat.meet[a][b]] == a
                for c in rng:
                    assert lat.meet[lat.meet[a][b]][c] == lat.meet[a][lat.meet[b][c]]
                    assert lat.join[lat.join[a][b]][c] == lat.join[a][lat.join[b][c]]


# -- enumeration -------------------------------------------------------------


def canonical_poset_key(rows):
    """Brute-force canonical form of a labeled poset (min over all
    permutations), independent of the library's certificate."""
    from itertools import permutations

    n = len(rows)
    best = None
    for perm in permutations(range(n)):
        key = tuple(
            sorted(
                (perm[i], perm[j])
                for i in range(n)
                for j in range(n)
                if (rows[i] >> j) & 1
            )
        )
        if best is None or key < best:
            best = key
    return best


def test_enumeration_matches_bruteforce_up_to_size_4():
    """Oracle: scan all labeled posets on 4 points directly, keep the
    bounded distributive lattices, count isomorphism classes."""
    from biheyt import enumerate_distributive_lattices
    from biheyt.lattice import enumerate_posets

    by_size = {}
    for n in range(1, 5):
        classes = set()
        for rows in enumerate_posets(n):
            try:
                lat = build_lattice(n, [
                    (i, j)
                    for i in range(n)
                    for j in range(n)
                    if i != j and (rows[i] >> j) & 1
                ])
            except (NotALattice, NotBounded):
                continue
            if not check_distributive(lat):
                continue
            classes.add(canonical_poset_key(lat.up))
        by_size[n] = len(classes)
    assert by_size == {1: 1, 2: 1, 3: 1, 4: 2}
    lats = enumerate_distributive_lattices(4)
    got = {}
    for lat in lats:
        got[lat.n] = got.get(lat.n, 0) + 1
    assert got == by_size


def test_enumeration_is_isomorphism_free(lattices_7):
    keys = [canonical_poset_key(lat.up) for lat in lattices_7]
    assert len(keys) == len(set(keys))
    assert all(lat.n <= 7 for lat in lattices_7)


def test_enumeration_bound():
    from biheyt import BoundExceeded, enumerate_distributive_lattices

    with pytest.raises(BoundExceeded):
        enumerate_distributive_lattices(10)


def test_enumeration_contains_chains_and_booleans(lattices_6):
    keys = {canonical_poset_key(lat.up) for lat in lattices_6}
    for reference in [chain(4), chain(6), build_lattice(4, [(0, 1), (0, 2), (1, 3), (2, 3)])]:
        assert canonical_poset_key(reference.up) in keys
