"""Any finite distributive lattice is (isomorphic to) the opens of a
space: points are prime filters, and β sends an element to the set of
prime filters containing it. Here the 3-chain grows its 2-point space
back, and every lattice up to 6 elements round-trips."""

from biheyt import (
    chain,
    cover_pairs,
    enumerate_distributive_lattices,
    prime_filters,
    spectrum,
    verify_stone_embedding,
)
from biheyt.bitsets import bit_list, pattern

c3 = chain(3)
print("lattice: 3-chain 0 < 1 < 2")
for f in prime_filters(c3):
    print("  prime filter:", bit_list(f.members))

spec = spectrum(c3)
print("spectrum opens:", [pattern(o, 2) for o in spec.space.opens])
for h in range(3):
    print(f"  β({h}) = {pattern(spec.beta[h], 2)}")

print("\nexhaustive check, all bounded distributive lattices ≤ 6 elements:")
for lat in enumerate_distributive_lattices(6):
    report = verify_stone_embedding(lat)
    status = "isomorphism" if report.ok else f"VIOLATIONS {report.violations}"
    print(f"  n={lat.n} covers={cover_pairs(lat)}: {status}")
