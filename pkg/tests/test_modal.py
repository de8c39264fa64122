import pytest

from biheyt import (
    BoundExceeded,
    KripkeFrame,
    KripkeModel,
    UnboundAtom,
    UnsupportedConnective,
    agreement_closure,
    classify_frame,
    countermodel_search,
    enumerate_frames,
    kripke_eval,
    model_from_space,
    parse_formula,
    s4_axiom_suite,
    specialization_preorder,
    topo_eval,
    valid_in_frame,
    valid_in_model,
    worked_examples,
)
from biheyt.bitsets import all_subsets
from biheyt.formulas import atom, conj, dia, disj, enumerate_formulas


# -- classification -----------------------------------------------------------


def test_classify_identity_is_s5():
    frame = KripkeFrame.from_edges(3, [(0, 0), (1, 1), (2, 2)])
    assert classify_frame(frame).label == "S5"


def test_classify_worked_example_frame():
    m1, _ = worked_examples()
    cls = classify_frame(m1.frame)
    assert cls.reflexive and cls.transitive and not cls.symmetric
    assert cls.label == "S4"


def test_classify_empty_relation():
    assert classify_frame(KripkeFrame(2, (0, 0))).label == "K"


def test_classify_reflexive_only():
    frame = KripkeFrame.from_edges(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    cls = classify_frame(frame)
    assert cls.label == "T" and not cls.transitive


# -- worked examples ------------------------------------------------------------


def test_example1_satisfaction():
    m1, _ = worked_examples()
    assert kripke_eval(m1, 0, parse_formula("<>p & <>!p"))
    assert kripke_eval(m1, 1, parse_formula("p"))
    assert kripke_eval(m1, 2, parse_formula("!p"))
    assert not kripke_eval(m1, 0, parse_formula("p"))


def test_example2_satisfaction():
    _, m2 = worked_examples()
    assert kripke_eval(m2, 0, parse_formula("<>p & <>q"))
    assert kripke_eval(m2, 1, parse_formula("p & !q"))
    assert kripke_eval(m2, 2, parse_formula("q & !p"))
    # built edge for edge: (w0, w0) is genuinely absent
    assert m2.frame.edges() == [(0, 1), (0, 2), (1, 1), (2, 2)]
    assert not classify_frame(m2.frame).reflexive
    assert classify_frame(m2.frame).transitive


def test_constants_at_any_world():
    m1, _ = worked_examples()
    for w in range(3):
        assert kripke_eval(m1, w, parse_formula("T"))
        assert not kripke_eval(m1, w, parse_formula("_|_"))


def test_kripke_rejects_dual_connectives():
    m1, _ = worked_examples()
    for text in ("~p", "p <- q"):
        with pytest.raises(UnsupportedConnective):
            kripke_eval(m1, 0, parse_formula(text))
    with pytest.raises(UnboundAtom):
        kripke_eval(m1, 0, parse_formula("z"))


# -- validity -------------------------------------------------------------------


def test_reflexive_frames_validate_t_axiom():
    phi = parse_formula("[]p -> p")
    for worlds in range(1, 4):
        for frame in enumerate_frames(worlds):
            if classify_frame(frame).reflexive:
                assert valid_in_frame(frame, phi, ["p"])


def test_transitive_frames_validate_4_axiom():
    phi = parse_formula("[]p -> [][]p")
    for worlds in range(1, 4):
        for frame in enumerate_frames(worlds):
            if classify_frame(frame).transitive:
                assert valid_in_frame(frame, phi, ["p"])


def test_irreflexive_chain_falsifies_t():
    frame = KripkeFrame.from_edges(2, [(0, 1)])
    phi = parse_formula("[]p -> p")
    assert not valid_in_frame(frame, phi, ["p"])
    # oracle: p true only at the successor falsifies []p -> p at 0
    model = KripkeModel(frame, {"p": 0b10})
    assert not kripke_eval(model, 0, phi)


def test_valid_in_model(sierpinski):
    m1, _ = worked_examples()
    assert valid_in_model(m1, parse_formula("p | !p"))
    assert not valid_in_model(m1, parse_formula("p"))


def test_frame_validity_bound():
    frame = KripkeFrame.from_edges(3, [(0, 0)])
    with pytest.raises(BoundExceeded):
        valid_in_frame(frame, parse_formula("p"), list("abcdefgh"))


# -- topological evaluation -------------------------------------------------------


def test_topo_eval_examples(threepoint):
    v = {"p": 0b011}
    assert topo_eval(threepoint, v, parse_formula("[]p")) == 0b011
    assert topo_eval(threepoint, v, parse_formula("<>p")) == 0b111
    assert topo_eval(threepoint, {}, parse_formula("[]T")) == threepoint.full
    assert topo_eval(threepoint, {}, parse_formula("<>_|_")) == 0


def test_topo_classical_tautologies(spaces_3):
    lem = parse_formula("p | !p")
    for sp in spaces_3:
        for vp in all_subsets(sp.points):
            assert topo_eval(sp, {"p": vp}, lem) == sp.full


def test_topo_t_axiom_instances(spaces_3):
    phi = parse_formula("[]p -> p")
    for sp in spaces_3:
        for vp in all_subsets(sp.points):
            assert topo_eval(sp, {"p": vp}, phi) == sp.full


def test_diamond_is_negated_box(spaces_3):
    for sp in spaces_3:
        for vp in all_subsets(sp.points):
            direct = topo_eval(sp, {"p": vp}, parse_formula("<>p"))
            rewritten = topo_eval(sp, {"p": vp}, parse_formula("!([](!p))"))
            assert direct == rewritten
    m1, m2 = worked_examples()
    for model in (m1, m2):
        for w in range(3):
            assert kripke_eval(model, w, parse_formula("<>p")) == kripke_eval(
                model, w, parse_formula("!([](!p))")
            )


# -- model_from_space ---------------------------------------------------------------


def test_model_from_space_discrete(discrete2):
    model = model_from_space(discrete2, {"p": 0b01})
    assert classify_frame(model.frame).label == "S5"
    assert model.frame.rel == (0b01, 0b10)


def test_model_from_space_threepoint(threepoint):
    model = model_from_space(threepoint, {"p": 0b001})
    assert classify_frame(model.frame).label == "S4"
    assert model.frame.rel == specialization_preorder(threepoint).rel


def test_model_from_space_always_s4(spaces_4):
    for sp in spaces_4:
        cls = classify_frame(model_from_space(sp, {}).frame)
        assert cls.reflexive and cls.transitive


# -- S4 schema suite -----------------------------------------------------------------


def test_s4_suite_spaces(spaces_4):
    for sp in spaces_4:
        for rep in s4_axiom_suite(sp):
            assert rep.ok, (sp, rep.name)


def test_s4_suite_one_point():
    from biheyt import validate_topology

    one = validate_topology(1, [0, 1])
    assert all(rep.ok for rep in s4_axiom_suite(one))


def test_s4_suite_nontransitive_frame_fails_4():
    frame = KripkeFrame.from_edges(3, [(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)])
    reports = {rep.name: rep for rep in s4_axiom_suite(frame)}
    assert not reports["4 transitivity"].ok
    assert reports["T reflection"].ok
    assert reports["K distribution"].ok


def test_s4_suite_bound():
    with pytest.raises(BoundExceeded):
        s4_axiom_suite(KripkeFrame(6, tuple([0] * 6)))


# -- countermodel search ----------------------------------------------------------------


def test_search_double_negation_witness():
    result = countermodel_search(
        parse_formula("!!p -> p"), 3, mode="space", semantics="intuitionistic"
    )
    assert result is not None
    # first witness in canonical order: the 2-point space {∅, {0}, X}
    assert result.structure.opens == (0b00, 0b01, 0b11)
    assert result.valuation == {"p": 0b01}
    assert result.point == 1
    # oracle: ¬p = int({1}) = ∅, ¬¬p = X, X → {0} misses point 1
    sp = result.structure
    from biheyt import open_lattice
    from biheyt import eval_intuitionistic

    alg = open_lattice(sp)
    value = eval_intuitionistic(
        parse_formula("!!p -> p"), alg, {"p": alg.base.subsets.index(0b01)}
    )
    assert alg.base.subsets[value] == 0b01


def test_search_classical_tautology_has_no_witness():
    assert (
        countermodel_search(parse_formula("p | !p"), 3, mode="space", semantics="classical")
        is None
    )


def test_search_4_axiom_on_reflexive_frames():
    result = countermodel_search(
        parse_formula("[]p -> [][]p"),
        3,
        mode="frame",
        frame_properties=("reflexive",),
    )
    assert result is not None
    cls = classify_frame(result.structure)
    assert cls.reflexive and not cls.transitive
    assert result.structure.worlds == 3
    model = KripkeModel(result.structure, result.valuation)
    assert not kripke_eval(model, result.point, parse_formula("[]p -> [][]p"))


def test_search_dual_lem_valid():
    assert (
        countermodel_search(parse_formula("p | ~p"), 3, mode="space", semantics="dual")
        is None
    )


def test_search_deterministic():
    phi = parse_formula("!!p -> p")
    a = countermodel_search(phi, 3, mode="space", semantics="intuitionistic")
    b = countermodel_search(phi, 3, mode="space", semantics="intuitionistic")
    assert (a.structure, a.valuation, a.point) == (b.structure, b.valuation, b.point)


def test_search_bound():
    with pytest.raises(BoundExceeded):
        countermodel_search(parse_formula("p"), 9, bound=4)


# -- Alexandrov agreement -----------------------------------------------------------------


def test_agreement_closure_everywhere(spaces_3):
    for sp in spaces_3:
        for vp in all_subsets(sp.points):
            for vq in all_subsets(sp.points):
                result = agreement_closure(sp, {"p": vp, "q": vq})
                assert result.disagreement is None


def test_agreement_literal_small_formulas(threepoint):
    kinds = ("not", "box", "dia", "and", "or", "imp")
    formulas = list(enumerate_formulas(2, ("p", "q"), kinds=kinds))
    for vp in all_subsets(3):
        for vq in all_subsets(3):
            valuation = {"p": vp, "q": vq}
            model = model_from_space(threepoint, valuation)
            for phi in formulas:
                value = topo_eval(threepoint, valuation, phi)
                for w in range(3):
                    assert kripke_eval(model, w, phi) == bool((value >> w) & 1)


def test_monotone_extension_preserves_diamond_truths():
    """Adding edges never falsifies a {atoms, ∧, ∨, ◇} formula."""
    p, q = atom("p"), atom("q")
    formulas = [dia(p), dia(dia(p)), disj(dia(p), q), conj(dia(p), dia(q)),
                dia(conj(p, q)), dia(disj(p, dia(q)))]
    frames = [f for f in enumerate_frames(2)] + [
        KripkeFrame.from_edges(3, edges)
        for edges in ([(0, 1)], [(0, 0), (0, 1)], [(0, 1), (1, 2)])
    ]
    for frame in frames:
        for extra in range(frame.worlds * frame.worlds):
            a, b = divmod(extra, frame.worlds)
            bigger = KripkeFrame(
                frame.worlds,
                tuple(
                    r | (1 << b if i == a else 0) for i, r in enumerate(frame.rel)
                ),
            )
            for vp in all_subsets(frame.worlds):
                for vq in all_subsets(frame.worlds):
                    small_model = KripkeModel(frame, {"p": vp, "q": vq})
                    big_model = KripkeModel(bigger, {"p": vp, "q": vq})
                    for phi in formulas:
                        for w in range(frame.worlds):
                            if kripke_eval(small_model, w, phi):
                                assert kripke_eval(big_model, w, phi)


def test_frame_class_validity_hierarchy():
    """Everything valid over all K-frames stays valid up the hierarchy."""
    kinds = ("not", "box", "dia", "and", "or", "imp")
    formulas = list(enumerate_formulas(2, ("p",), with_constants=False, kinds=kinds))
    frames = [f for w in range(1, 4) for f in enumerate_frames(w)]
    by_class = {"K": [], "T": [], "S4": [], "S5": []}
    for frame in frames:
        cls = classify_frame(frame)
        by_class["K"].append(frame)
        if cls.reflexive:
            by_class["T"].append(frame)
        if cls.reflexive and cls.transitive:
            by_class["S4"].append(frame)
            if cls.symmetric:
                by_class["S5"].append(frame)

    def theory(frames):
        out = set()
        for phi in formulas:
            if all(valid_in_frame(f, phi, ["p"]) for f in frames):
                out.add(phi)
        return out

    k, t, s4, s5 = (theory(by_class[c]) for c in ("K", "T", "S4", "S5"))
    assert k <= t <= s4 <= s5
    t_axiom = parse_formula("[]p -> p")
    assert t_axiom in t and t_axiom not in k
