"""Free generators of the extended weight semigroup, and membership.

The semigroup lives in (dominant weights) x (characters of S).  It is
free on n + m generators: one pair (dual of omega_i, tau(omega_i)) per
fundamental weight, and one pair per active family, built from the sum
of fundamental weights over the family's anchors.  Membership in the
generated semigroup is decided by an exact linear solve (the generators
are independent over Q) followed by a nonnegative-integrality check.
"""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .errors import NotSpherical
from .rootsys import Weight, fmt_weight
from .sphericity import ActiveRootTable, check_spherical


def anchor_weights(table: ActiveRootTable, rs):
    """Per family, the sum of fundamental weights over the anchor roots."""
    out = []
    for fam in table.families:
        picked = sorted({table.anchor[r.coords] for r in fam.roots})
        w = rs.zero_weight()
        for i in picked:
            w = w + rs.fundamental_weight(i)
        out.append(w)
    return out


class SemigroupGenerators:
    """The n + m free generators, with decomposition support."""

    def __init__(self, rs, d, torus_gens, active_gens, anchor_wts):
        self.root_system = rs
        self.n = rs.n
        self.d = d
        self.m = len(active_gens)
        self.torus_gens = list(torus_gens)  # (Weight, chi tuple)
        self.active_gens = list(active_gens)
        self.anchor_wts = list(anchor_wts)
        cols = [self._as_vector(g) for g in self.all_generators()]
        self._matrix = [[col[r] for col in cols] for r in range(self.n + self.d)]
        if linalg.rank(self._matrix) != self.n + self.m:
            raise AssertionError("generators are not linearly independent")

    def all_generators(self):
        return self.torus_gens + self.active_gens

    def _as_vector(self, gen):
        w, chi = gen
        return [Fraction(c) for c in w.coords] + [Fraction(c) for c in chi]

    def decompose(self, pair):
        """Nonnegative integer coefficients over the generators, or None."""
        w, chi = pair
        coords = w.coords if isinstance(w, Weight) else tuple(w)
        target = [Fraction(c) for c in coords] + [Fraction(c) for c in chi]
        if len(target) != self.n + self.d:
            raise ValueError("pair has the wrong number of coordinates")
        sol = linalg.solve(self._matrix, target)
        if sol is None:
            return None
        if any(c.denominator != 1 or c < 0 for c in sol):
            return None
        return tuple(int(c) for c in sol)

    def zero_character_generators(self):
        """Generators whose character component vanishes."""
        return [(w, chi) for w, chi in self.all_generators() if all(c == 0 for c in chi)]

    def zero_character_members(self, height_bound):
        """The trivial-character slice of the semigroup, up to a height bound.

        These are the weights of functions on the homogeneous space itself;
        the slice is not generated by the trivial-character generators, so
        it is computed by filtering the bounded enumeration.
        """
        return sorted(w for w, chi in bounded_members(self, height_bound) if not any(chi))

    def describe(self):
        lines = []
        for w, chi in self.all_generators():
            lines.append(f"({fmt_weight(w)}, chi={list(chi)})")
        return lines

    def __repr__(self):
        return f"SemigroupGenerators(n={self.n}, m={self.m}, d={self.d})"


def generators(sub, table: ActiveRootTable) -> SemigroupGenerators:
    """The free generators of the extended weight semigroup.

    Requires spherical data (raises NotSpherical otherwise).  Generators
    come in deterministic order: the n torus pairs first, then one pair
    per active family in weight order.
    """
    verdict = check_spherical(sub)
    if not verdict.spherical:
        raise NotSpherical(verdict.violations)
    rs = sub.root_system
    torus_gens = []
    for i in range(rs.n):
        w = rs.fundamental_weight(i)
        torus_gens.append((rs.dual_weight(w), sub.tau.restrict(w)))
    anchor_wts = anchor_weights(table, rs)
    active_gens = []
    for fam, lam in zip(table.families, anchor_wts):
        chi = tuple(a - b for a, b in zip(sub.tau.restrict(lam), fam.phi))
        active_gens.append((rs.dual_weight(lam), chi))
    return SemigroupGenerators(rs, sub.tau.d, torus_gens, active_gens, anchor_wts)


def decompose(gens: SemigroupGenerators, pair):
    """Unique decomposition of a pair over the generators, or None."""
    return gens.decompose(pair)


def bounded_members(gens: SemigroupGenerators, height_bound):
    """All semigroup elements whose weight coordinates sum to at most the bound.

    Every generator has a nonzero dominant weight, so the enumeration of
    nonnegative combinations terminates.  Returns a set of
    (weight coords, chi) pairs.
    """
    gen_list = gens.all_generators()
    out = set()

    def rec(i, w, chi):
        if sum(w) > height_bound:
            return
        if i == len(gen_list):
            out.add((tuple(w), tuple(chi)))
            return
        gw, gchi = gen_list[i]
        k = 0
        while True:
            w2 = [a + k * b for a, b in zip(w, gw.coords)]
            if sum(w2) > height_bound:
                break
            rec(i + 1, w2, [a + k * b for a, b in zip(chi, gchi)])
            k += 1

    rec(0, [0] * gens.n, [0] * gens.d)
    return out
