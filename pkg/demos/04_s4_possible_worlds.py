"""□ is interior, ◇ is closure, and finite spaces are Kripke frames in
disguise: worlds are points, accessibility is the specialization
preorder (always reflexive and transitive, hence S4). The bundled
3-world model shows a 'global contradiction': w0 sees both a p-world
and a ¬p-world, so ◇p ∧ ◇¬p holds there."""

from biheyt import (
    classify_frame,
    countermodel_search,
    kripke_eval,
    model_from_space,
    parse_formula,
    s4_axiom_suite,
    topo_eval,
    validate_topology,
    worked_examples,
)
from biheyt.bitsets import bit_list, pattern

model, _ = worked_examples()
print("model: worlds w0,w1,w2, edges", model.frame.edges(), "V(p) =",
      bit_list(model.valuation["p"]))
print("frame class:", classify_frame(model.frame).label)
for text in ("<>p", "<>!p", "<>p & <>!p"):
    print(f"  w0 ⊨ {text}:", kripke_eval(model, 0, parse_formula(text)))

space = validate_topology(3, [0b000, 0b001, 0b011, 0b111])
v = {"p": 0b011}
print("\ntopological reading on the 3-point space, v(p) = {a,b}:")
print("  []p =", pattern(topo_eval(space, v, parse_formula("[]p")), 3))
print("  <>p =", pattern(topo_eval(space, v, parse_formula("<>p")), 3))
bridge = model_from_space(space, v)
print("  same model through the specialization preorder:",
      classify_frame(bridge.frame).label)

print("\nS4 schemas on this space:")
for rep in s4_axiom_suite(space):
    print(f"  {rep.name}: {'pass' if rep.ok else rep.violations[:1]}")

print("\nbounded refutation: []p -> [][]p over reflexive frames")
found = countermodel_search(parse_formula("[]p -> [][]p"), 3, mode="frame",
                            frame_properties=("reflexive",))
print("  countermodel edges:", found.structure.edges(),
      "valuation:", {k: bit_list(v) for k, v in found.valuation.items()},
      "falsified at world", found.point)
