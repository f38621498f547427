#!/usr/bin/env python3
# The extended weight semigroup: free generators and exact membership.

from solvsph import (
    Weight,
    active_roots,
    bounded_members,
    build_subgroup,
    fmt_weight,
    generators,
    get_preset,
)

sub = build_subgroup(get_preset("sl4-sp4borel"))
table = active_roots(sub)
gens = generators(sub, table)

print(f"the semigroup is free on {gens.n} + {gens.m} generators:")
for w, chi in gens.torus_gens:
    print(f"  ({fmt_weight(w)}, chi={list(chi)})   [one per fundamental weight]")
for w, chi in gens.active_gens:
    print(f"  ({fmt_weight(w)}, chi={list(chi)})   [one per active family]")

# Membership is an exact linear solve: coefficients over the generators,
# or None when the pair is not in the semigroup.
probes = [
    (Weight((0, 1, 0)), (0, 0)),
    (Weight((1, 1, 1)), (2, 1)),
    (Weight((1, 0, 0)), (0, 0)),
    (Weight((2, 0, 2)), (2, 2)),
]
print("\nmembership probes:")
for pair in probes:
    coeffs = gens.decompose(pair)
    verdict = f"= {coeffs} over the generators" if coeffs else "not in the semigroup"
    print(f"  ({fmt_weight(pair[0])}, chi={list(pair[1])}) {verdict}")

# The functions on the homogeneous space itself form the chi = 0 slice.
print("\ngenerators with trivial character:",
      [(fmt_weight(w), list(chi)) for w, chi in gens.zero_character_generators()])
print("chi = 0 slice up to height 3:",
      [fmt_weight(Weight(w)) for w in gens.zero_character_members(3)])

# Everything of bounded weight, enumerated exactly.
members = bounded_members(gens, 2)
print(f"\n{len(members)} semigroup elements with weight height <= 2")
for w, chi in sorted(members):
    print(f"  ({fmt_weight(Weight(w))}, chi={list(chi)})")
