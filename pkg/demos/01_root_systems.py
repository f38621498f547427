#!/usr/bin/env python3
# Tour of the exact root-system and Lie-algebra layer: positive roots,
# pairings, dual weights, and Chevalley structure constants.

from solvsph import (
    Root,
    Weight,
    build_algebra,
    build_root_system,
    fmt_root,
    fmt_weight,
)

# Build the rank-3 special linear root system (type A3).
rs = build_root_system([("A", 3)])
print(f"root system {rs.describe()}: {len(rs.positive_roots)} positive roots")
for r in rs.positive_roots:
    print(f"  {fmt_root(r):12s} height {r.height}  support {sorted(i + 1 for i in r.support())}")

# Pairings against coroots: fundamental weights are dual to the simple roots.
print("\npairing <omega_i | alpha_j> (rows i, columns j):")
for i in range(rs.n):
    row = [rs.pairing(rs.fundamental_weight(i), a) for a in rs.simple_roots]
    print(f"  {row}")

# The Cartan matrix appears as pairings of simple roots.
a1, a2 = rs.simple_roots[0], rs.simple_roots[1]
print(f"\n<a1 | a2> = {rs.pairing(a1, a2)},  <a1 | a1> = {rs.pairing(a1, a1)}")

# Dual weights: the highest weight of the dual module.  In type A the
# Dynkin diagram flips, so w1* = w3; in type C every weight is self-dual.
w1 = Weight((1, 0, 0))
print(f"dual of {fmt_weight(w1)} in A3: {fmt_weight(rs.dual_weight(w1))}")
rsc = build_root_system([("C", 2)])
print(f"dual of w1 in C2: {fmt_weight(rsc.dual_weight(Weight((1, 0))))}")

# The Chevalley basis: integer structure constants, [e_a, e_-a] = coroot.
alg = build_algebra(rsc)
a1, a2 = rsc.simple_roots
print(f"\nCh. constants in C2: [e_a1, e_a2] = {alg.bracket(alg.e(a1), alg.e(a2))}")
long_string = alg.structure_constant(a1, Root((1, 1)))
print(f"[e_a1, e_(a1+a2)] carries constant {long_string} (a length-2 root string)")
print(f"[e_a1, e_-a1] = {alg.bracket(alg.e(a1), alg.e(-a1))}")
