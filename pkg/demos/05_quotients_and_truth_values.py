"""Quotients collapse an ideal to ⊥ (rejected sentences) or a filter to
⊤ (accepted ones); two-valued assignments are exactly the prime
filters. Iterating principal-ideal collapses walks any chain down to
the two-element algebra of plain truth values."""

from biheyt import (
    chain,
    congruence_from_ideal,
    kernel,
    make_ideal,
    preimage_of_top,
    principal_ideal,
    prime_filters,
    quotient,
    two_valued_homs,
)
from biheyt.bitsets import bit_list

c4 = chain(4)
print("lattice: 4-chain 0 < 1 < 2 < 3")
ideal = make_ideal(c4, [0, 1])
cong = congruence_from_ideal(c4, ideal)
q, proj = quotient(c4, cong)
print("collapse ideal {0,1}: blocks", [bit_list(b) for b in cong.blocks],
      "-> quotient size", q.n)
print("  projection:", proj.map, "| kernel:", bit_list(kernel(proj)))

lat = c4
step = 0
while lat.n > 2:
    mid = [a for a in range(lat.n) if a not in (lat.bottom, lat.top)][0]
    lat, _ = quotient(lat, congruence_from_ideal(lat, principal_ideal(lat, mid)))
    step += 1
    print(f"step {step}: principal-ideal collapse -> {lat.n} elements")

print("\ntwo-valued assignments of the 3-chain vs its prime filters:")
c3 = chain(3)
for hom in two_valued_homs(c3):
    print("  assignment", hom.map, "-> filter", bit_list(preimage_of_top(hom)))
print("  prime filters:", [bit_list(f.members) for f in prime_filters(c3)])
