"""Data model for a connected solvable subgroup of the Borel.

The subgroup is the semidirect product of a subtorus S of the maximal
torus and a unipotent part N normalized by S.  S enters through the
character restriction matrix tau (rows = a basis of the characters of S,
columns = fundamental weights); N enters through constraint groups, each
listing the positive roots of one S-weight component together with the
coefficients of the linear functional cutting N out of that component.
Roots mentioned in no group contribute their full root space to N.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .chevalley import AlgebraElement, ChevalleyAlgebra
from .errors import (
    DuplicateRoot,
    MixedWeightConstraint,
    NonIntegralWeight,
    NonSurjectiveTau,
    NotSubalgebra,
    ZeroCoefficient,
)
from .rootsys import Root, Weight


class TorusRestriction:
    """Character restriction from the maximal torus to a subtorus.

    ``rows`` is a d x n integer matrix, surjective over the integers
    (restriction of characters to a subtorus is onto).
    """

    def __init__(self, rows, n):
        self.n = int(n)
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.d = len(self.rows)
        for row in self.rows:
            if len(row) != self.n:
                raise ValueError(f"torus row {row} does not have {self.n} entries")
        if not linalg.is_surjective_over_z(self.rows, self.n):
            raise NonSurjectiveTau(f"{self.rows} is not onto Z^{self.d}")

    def restrict(self, weight):
        """Image of a torus character (integral weight) in Z^d."""
        coords = weight.coords if isinstance(weight, Weight) else tuple(weight)
        if not all(isinstance(c, int) or Fraction(c).denominator == 1 for c in coords):
            raise NonIntegralWeight(f"{coords} has non-integral coordinates")
        coords = tuple(int(c) for c in coords)
        return tuple(sum(r * c for r, c in zip(row, coords)) for row in self.rows)

    def __eq__(self, other):
        return isinstance(other, TorusRestriction) and (self.rows, self.n) == (other.rows, other.n)

    def __repr__(self):
        return f"TorusRestriction(d={self.d}, n={self.n})"


def restrict(tau: TorusRestriction, weight):
    """Restriction of a torus character along tau."""
    return tau.restrict(weight)


class NilradicalSpec:
    """Constraint groups describing the unipotent part inside the nilradical.

    Each group is a list of (positive root, nonzero coefficient) pairs; an
    element of the group's weight component lies in N exactly when the
    coefficient-weighted sum of its root-vector coordinates vanishes.
    """

    def __init__(self, groups):
        self.groups = tuple(
            tuple((root, Fraction(coeff)) for root, coeff in group) for group in groups
        )

    def __eq__(self, other):
        return isinstance(other, NilradicalSpec) and self.groups == other.groups

    def __repr__(self):
        return f"NilradicalSpec({len(self.groups)} groups)"


@dataclass
class WeightClass:
    """All positive roots sharing one S-weight, with the cut-out functionals."""

    phi: tuple
    roots: list
    functionals: list = field(default_factory=list)  # coefficient dicts keyed by root coords
    codim: int = 0

    def functional_value(self, functional, element_terms):
        return sum(
            coeff * element_terms.get(("e", coords), 0) for coords, coeff in functional.items()
        )


class SubgroupData:
    """Validated solvable subgroup: torus part, unipotent part, weight table."""

    def __init__(self, algebra, tau, nilradical, classes):
        self.algebra = algebra
        self.root_system = algebra.root_system
        self.tau = tau
        self.nilradical = nilradical
        self.classes = classes
        self.class_by_phi = {c.phi: c for c in classes}
        self._phi_of_root = {}
        for c in classes:
            for r in c.roots:
                self._phi_of_root[r.coords] = c.phi
        self.dim_u = len(self.root_system.positive_roots)
        self.nil_basis = self._build_nil_basis()
        self.dim_n = len(self.nil_basis)
        self.dim_s = tau.d

    def tau_root(self, root):
        """S-weight of a root."""
        return self.tau.restrict(self.root_system.root_to_weight(root))

    def class_of_root(self, root):
        return self.class_by_phi[self._phi_of_root[root.coords]]

    def _build_nil_basis(self):
        basis = []
        for cls in self.classes:
            if not cls.functionals:
                for r in cls.roots:
                    basis.append(self.algebra.e(r))
                continue
            cols = [r.coords for r in cls.roots]
            rows = [[f.get(c, Fraction(0)) for c in cols] for f in cls.functionals]
            for vec in linalg.nullspace(rows, len(cols)):
                terms = {("e", c): v for c, v in zip(cols, vec) if v != 0}
                basis.append(AlgebraElement(self.algebra, terms))
        return basis

    def contains_in_nil(self, element):
        """Whether an algebra element lies in the unipotent part."""
        by_phi = {}
        for key, coeff in element.terms.items():
            if key[0] != "e":
                return False
            coords = key[1]
            if coords not in self._phi_of_root:
                return False  # negative root vector
            by_phi.setdefault(self._phi_of_root[coords], {})[key] = coeff
        for phi, terms in by_phi.items():
            cls = self.class_by_phi[phi]
            for f in cls.functionals:
                if cls.functional_value(f, terms) != 0:
                    return False
        return True

    def weight_table(self):
        """The classes as (S-weight, roots, codimension), in weight order."""
        return [(c.phi, list(c.roots), c.codim) for c in self.classes]

    def __repr__(self):
        return (
            f"SubgroupData({self.root_system.describe()}, d={self.tau.d}, "
            f"dim_n={self.dim_n}/{self.dim_u})"
        )


def validate(algebra: ChevalleyAlgebra, tau, nilradical) -> SubgroupData:
    """Check a subgroup description and assemble its weight table.

    Raises NonSurjectiveTau, ZeroCoefficient, DuplicateRoot,
    MixedWeightConstraint, or NotSubalgebra (with a witness pair) when the
    data does not describe a solvable subgroup normalized by the torus.
    """
    rs = algebra.root_system
    if not isinstance(tau, TorusRestriction):
        tau = TorusRestriction(tau, rs.n)
    if tau.n != rs.n:
        raise ValueError(f"torus matrix has {tau.n} columns, expected {rs.n}")
    if not isinstance(nilradical, NilradicalSpec):
        nilradical = NilradicalSpec(nilradical)

    # classes of positive roots under tau
    by_phi = {}
    for r in rs.positive_roots:
        phi = tau.restrict(rs.root_to_weight(r))
        by_phi.setdefault(phi, []).append(r)
    classes = {phi: WeightClass(phi, roots) for phi, roots in by_phi.items()}

    seen = set()
    for group in nilradical.groups:
        if not group:
            raise ZeroCoefficient("empty constraint group")
        functional = {}
        phi = None
        for root, coeff in group:
            if not isinstance(root, Root):
                root = rs.root(root)
            if not rs.is_positive_root(root.coords):
                raise ValueError(f"{root} is not a positive root")
            if coeff == 0:
                raise ZeroCoefficient(f"zero coefficient on {root}")
            if root.coords in seen:
                raise DuplicateRoot(f"{root} appears in more than one constraint")
            seen.add(root.coords)
            this_phi = tau.restrict(rs.root_to_weight(root))
            if phi is None:
                phi = this_phi
            elif this_phi != phi:
                raise MixedWeightConstraint(
                    f"constraint group mixes S-weights {phi} and {this_phi}"
                )
            functional[root.coords] = Fraction(coeff)
        classes[phi].functionals.append(functional)

    for cls in classes.values():
        if cls.functionals:
            cols = [r.coords for r in cls.roots]
            rows = [[f.get(c, Fraction(0)) for c in cols] for f in cls.functionals]
            cls.codim = linalg.rank(rows)

    ordered = [classes[phi] for phi in sorted(classes)]
    sub = SubgroupData(algebra, tau, nilradical, ordered)

    if sub.dim_u - sub.dim_n != sum(c.codim for c in ordered):
        raise AssertionError("codimension bookkeeping is inconsistent")

    # closure of the unipotent part under the bracket, checked pairwise
    basis = sub.nil_basis
    for i, x in enumerate(basis):
        for y in basis[i + 1 :]:
            if not sub.contains_in_nil(algebra.bracket(x, y)):
                raise NotSubalgebra(x, y)
    return sub


def weight_table(sub: SubgroupData):
    """S-weights on the Borel nilradical with their roots and codimensions."""
    return sub.weight_table()
