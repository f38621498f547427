#!/usr/bin/env python3
# Deciding sphericity for solvable subgroups of the Borel, and reading the
# active-root combinatorics off the positive verdicts.

from solvsph import (
    NilradicalSpec,
    Root,
    TorusRestriction,
    active_roots,
    build_algebra,
    build_root_system,
    build_subgroup,
    check_spherical,
    fmt_root,
    get_preset,
    verify_active_axioms,
)

# The flagship example: the Borel subgroup of Sp4 sitting inside SL4.
# The subtorus is diag(s1, s2, 1/s2, 1/s1); the unipotent part ties the
# two matrix corners together with a sign.
sub = build_subgroup(get_preset("sl4-sp4borel"))
print("subgroup:", sub)
print("weight table (S-weight, codim, roots):")
for phi, roots, c in sub.weight_table():
    print(f"  {list(phi)}  codim {c}:  {' '.join(fmt_root(r) for r in roots)}")

verdict = check_spherical(sub)
print("spherical?", verdict.spherical)

table = active_roots(sub)
print(f"{len(table.active_roots)} active roots in {table.m} families:")
for i, fam in enumerate(table.families):
    for r in fam.roots:
        print(f"  family {i + 1}: {fmt_root(r):8s} anchor a{table.anchor[r.coords] + 1}")
print("subordinate pairs:", [(fmt_root(b), fmt_root(a)) for b, a in table.subordinate_pairs])

# The whole active-root calculus is re-checked exhaustively on demand.
report = verify_active_axioms(sub, table)
print("consistency checks:", report.checks)

# A failing case: the trivial subgroup of SL2 leaves a 3-dimensional
# homogeneous space, too big for the 2-dimensional Borel.
bad = build_subgroup(get_preset("sl2-trivial"))
print("\ntrivial subgroup of SL2:", check_spherical(bad).violations)

# Another failing case built by hand: two constraints whose weights
# collide in a rank-1 character group.
rs = build_root_system([("A", 2)])
alg = build_algebra(rs)
from solvsph import validate

sub_bad = validate(
    alg,
    TorusRestriction([[1, 1]], 2),
    NilradicalSpec([[(Root((1, 0)), 1), (Root((0, 1)), 1)], [(Root((1, 1)), 1)]]),
)
print("dependent-weight example:", check_spherical(sub_bad).violations)
