"""Brute-force verification against genuine matrix representations.

Everything the combinatorial pipeline claims is re-derived here from
scratch for small classical types: irreducible modules are built as
cyclic spans inside tensor products of fundamental modules (themselves
cut out of exterior powers of the natural module), semi-invariant
dimensions are exact kernel computations, and sphericity is probed by
exhibiting a group element whose conjugate of the subalgebra, together
with the Borel, spans the whole Lie algebra.  All arithmetic is exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from . import linalg
from .errors import (
    AlgebraMismatch,
    DimensionCap,
    NotDominant,
    NotSpherical,
    UnsupportedType,
)
from .rootsys import Root, Weight
from .sphericity import ActiveRootTable, check_spherical
from .subgroup import SubgroupData


def _zeros(r, c):
    return np.zeros((r, c), dtype=object)


def _eye(k):
    m = _zeros(k, k)
    for i in range(k):
        m[i, i] = Fraction(1)
    return m


def _is_zero_matrix(m):
    return all(x == 0 for x in m.flat)


def exp_nilpotent(a):
    """Exact exponential of a nilpotent matrix (finite series)."""
    k = a.shape[0]
    out = _eye(k)
    term = _eye(k)
    i = 1
    while True:
        term = (term @ a) * Fraction(1, i)
        if _is_zero_matrix(term):
            return out
        out = out + term
        i += 1
        if i > k + 1:
            raise ValueError("matrix is not nilpotent")


def weyl_dim(rs, lam):
    """Dimension of the irreducible module of highest weight lam."""
    if not lam.is_dominant:
        raise NotDominant(f"{lam} is not dominant")
    rho = Weight((1,) * rs.n)
    shifted = lam + rho
    num = Fraction(1)
    den = Fraction(1)
    for alpha in rs.positive_roots:
        num *= Fraction(rs.weight_root_form(shifted, alpha))
        den *= Fraction(rs.weight_root_form(rho, alpha))
    val = num / den
    if val.denominator != 1:
        raise ArithmeticError("dimension formula did not give an integer")
    return int(val)


# -- sparse vector helpers -------------------------------------------------


def _vec_sub(v, c, w):
    out = dict(v)
    for k, x in w.items():
        s = out.get(k, 0) - c * x
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


class _Blocks:
    """Weight-graded basis with incremental reduction and coordinate solving."""

    def __init__(self):
        self.weights = []  # weight coords per basis vector
        self.vectors = []  # pivot-normalized sparse vectors
        self.pivots = []
        self.by_weight = {}  # weight coords -> list of basis indices

    def insert(self, wt, vec):
        """Reduce vec against the block of wt; insert if independent."""
        blk = self.by_weight.setdefault(wt, [])
        v = dict(vec)
        for bi in blk:
            c = v.get(self.pivots[bi], 0)
            if c:
                v = _vec_sub(v, c, self.vectors[bi])
        if not v:
            return None
        piv = min(v)
        lead = v[piv]
        v = {k: x / lead for k, x in v.items()}
        self.weights.append(wt)
        self.vectors.append(v)
        self.pivots.append(piv)
        blk.append(len(self.vectors) - 1)
        return len(self.vectors) - 1

    def express(self, wt, vec):
        """Coordinates of vec over the block of wt; None if outside the span."""
        v = dict(vec)
        coords = {}
        for bi in self.by_weight.get(wt, []):
            c = v.get(self.pivots[bi], 0)
            if c:
                v = _vec_sub(v, c, self.vectors[bi])
                coords[bi] = c
        if v:
            return None
        return coords


class HighestWeightModule:
    """An irreducible module, with exact matrices for the whole basis.

    Basis vector 0 is the highest vector; every basis vector carries a
    torus weight, and the coroot matrices are diagonal with the pairing
    eigenvalues (checked at construction).
    """

    def __init__(self, algebra, lam, weights, actions):
        self.algebra = algebra
        self.lam = lam
        self.weights = weights  # list of Weight
        self.actions = actions  # basis key -> numpy object matrix
        self.dim = len(weights)
        self._verify_basics()

    def _verify_basics(self):
        rs = self.algebra.root_system
        for i in range(rs.n):
            h = self.actions[("h", i)]
            for j in range(self.dim):
                for k in range(self.dim):
                    expect = self.weights[j].coords[i] if j == k else 0
                    if h[k, j] != expect:
                        raise AssertionError("coroot action is not the weight diagonal")
        for alpha in rs.simple_roots:
            col = self.actions[("e", alpha.coords)][:, 0]
            if any(x != 0 for x in col):
                raise AssertionError("highest vector is not annihilated by raising operators")
        if self.weights[0] != self.lam:
            raise AssertionError("highest vector has the wrong weight")

    def highest_vector(self):
        v = _zeros(self.dim, 1)[:, 0]
        v[0] = Fraction(1)
        return v

    def act_element(self, element):
        """Matrix of an algebra element (linear combination of basis keys)."""
        if element.algebra is not self.algebra:
            raise AlgebraMismatch("element from a different algebra")
        out = _zeros(self.dim, self.dim)
        for key, c in element.terms.items():
            out = out + self.actions[key] * c
        return out

    def __repr__(self):
        return f"HighestWeightModule(lam={self.lam.coords}, dim={self.dim})"


def _span_module(provider, algebra, lam):
    """Close the highest vector under lowering operators and build matrices."""
    rs = algebra.root_system
    blocks = _Blocks()
    blocks.insert(lam.coords, provider.start)
    queue = [0]
    simple_wts = [rs.root_to_weight(a) for a in rs.simple_roots]
    while queue:
        bi = queue.pop(0)
        wt = Weight(blocks.weights[bi])
        vec = blocks.vectors[bi]
        for i, alpha in enumerate(rs.simple_roots):
            img = provider.act(("e", tuple(-x for x in alpha.coords)), vec)
            if img:
                idx = blocks.insert((wt - simple_wts[i]).coords, img)
                if idx is not None:
                    queue.append(idx)
    dim = len(blocks.vectors)
    weights = [Weight(w) for w in blocks.weights]

    actions = {}
    gen_keys = []
    for i, alpha in enumerate(rs.simple_roots):
        gen_keys.append((("e", alpha.coords), simple_wts[i]))
        gen_keys.append((("e", tuple(-x for x in alpha.coords)), -simple_wts[i]))
        gen_keys.append((("h", i), rs.zero_weight()))
    for key, shift in gen_keys:
        mat = _zeros(dim, dim)
        for j in range(dim):
            img = provider.act(key, blocks.vectors[j])
            if not img:
                continue
            coords = blocks.express((weights[j] + shift).coords, img)
            if coords is None:
                raise AssertionError("span is not closed under the algebra action")
            for bi, c in coords.items():
                mat[bi, j] = c
        actions[key] = mat

    # non-simple root actions from brackets along the fixed decompositions
    for eps in [r.coords for r in rs.positive_roots if r.height > 1]:
        gamma, delta = algebra.extraspecial[eps]
        n = algebra.structure_constant(gamma, delta)
        a, b = actions[("e", gamma)], actions[("e", delta)]
        actions[("e", eps)] = (a @ b - b @ a) * Fraction(1, n)
        neg = tuple(-x for x in eps)
        ng = tuple(-x for x in gamma)
        nd = tuple(-x for x in delta)
        a, b = actions[("e", ng)], actions[("e", nd)]
        actions[("e", neg)] = (a @ b - b @ a) * Fraction(-1, n)

    return HighestWeightModule(algebra, lam, weights, actions)


class _MatrixProvider:
    """Span provider backed by explicit matrices on an ambient space."""

    def __init__(self, matrices, start_index):
        self.matrices = matrices
        self.cols = {
            key: [[(r, m[r, c]) for r in range(m.shape[0]) if m[r, c] != 0] for c in range(m.shape[1])]
            for key, m in matrices.items()
        }
        self.start = {start_index: Fraction(1)}

    def act(self, key, vec):
        out = {}
        cols = self.cols[key]
        for idx, c in vec.items():
            for r, x in cols[idx]:
                s = out.get(r, 0) + c * x
                if s:
                    out[r] = s
                else:
                    out.pop(r, None)
        return out


class _TensorProvider:
    """Span provider for a tensor product of modules, acting by the Leibniz rule."""

    def __init__(self, factors):
        self.factors = factors
        self.dims = [f.dim for f in factors]
        self.strides = []
        s = 1
        for d in reversed(self.dims):
            self.strides.append(s)
            s *= d
        self.strides.reverse()
        self.total = s
        self.start = {0: Fraction(1)}
        self.cols = [
            {
                key: [[(r, m[r, c]) for r in range(f.dim) if m[r, c] != 0] for c in range(f.dim)]
                for key, m in f.actions.items()
                if key[0] == "h" or sum(abs(x) for x in key[1]) == 1
            }
            for f in factors
        ]

    def _split(self, idx):
        out = []
        for d, s in zip(self.dims, self.strides):
            out.append((idx // s) % d)
        return out

    def act(self, key, vec):
        out = {}
        for idx, c in vec.items():
            parts = self._split(idx)
            for slot, i_s in enumerate(parts):
                for r, x in self.cols[slot][key][i_s]:
                    j = idx + (r - i_s) * self.strides[slot]
                    s = out.get(j, 0) + c * x
                    if s:
                        out[j] = s
                    else:
                        out.pop(j, None)
        return out


# -- matrix realization -----------------------------------------------------


class MatrixRealization:
    """Faithful matrices for one small classical group, plus its fundamentals.

    Supported types: A_n with n <= 4 (natural module and its exterior
    powers) and C_2 (natural module; the second fundamental is the
    5-dimensional complement of the invariant bivector inside the second
    exterior power, found automatically by the cyclic span).
    """

    def __init__(self, algebra):
        rs = algebra.root_system
        if len(rs.components) != 1:
            raise UnsupportedType("matrix realizations cover single simple components only")
        letter, rank = rs.components[0]
        if (letter, rank) not in {("A", 1), ("A", 2), ("A", 3), ("A", 4), ("C", 2)}:
            raise UnsupportedType(f"no matrix realization for {letter}{rank}")
        self.algebra = algebra
        self.letter = letter
        self.rank = rank
        self.natural_dim = rank + 1 if letter == "A" else 4
        self.natural_actions = self._natural_actions()
        representation_property_check(algebra, self.natural_actions)
        self.natural_weights = [
            Weight(tuple(self.natural_actions[("h", i)][v, v] for i in range(rs.n)))
            for v in range(self.natural_dim)
        ]
        self.fundamentals = [self._fundamental(k) for k in range(1, rs.n + 1)]

    def _natural_actions(self):
        rs = self.algebra.root_system
        nd = self.natural_dim

        def unit(r, c, val=1):
            m = _zeros(nd, nd)
            m[r, c] = Fraction(val)
            return m

        simple = {}
        if self.letter == "A":
            for i in range(self.rank):
                simple[("e", rs.simple_roots[i].coords)] = unit(i, i + 1)
                simple[("e", (-rs.simple_roots[i]).coords)] = unit(i + 1, i)
        else:  # C2 preserving the antidiagonal symplectic form
            a1, a2 = rs.simple_roots
            simple[("e", a1.coords)] = unit(0, 1) + unit(2, 3, -1)
            simple[("e", (-a1).coords)] = unit(1, 0) + unit(3, 2, -1)
            simple[("e", a2.coords)] = unit(1, 2)
            simple[("e", (-a2).coords)] = unit(2, 1)
        actions = dict(simple)
        for i, alpha in enumerate(rs.simple_roots):
            e = actions[("e", alpha.coords)]
            f = actions[("e", (-alpha).coords)]
            actions[("h", i)] = e @ f - f @ e
        for eps in [r.coords for r in rs.positive_roots if r.height > 1]:
            gamma, delta = self.algebra.extraspecial[eps]
            n = self.algebra.structure_constant(gamma, delta)
            a, b = actions[("e", gamma)], actions[("e", delta)]
            actions[("e", eps)] = (a @ b - b @ a) * Fraction(1, n)
            neg = tuple(-x for x in eps)
            a = actions[("e", tuple(-x for x in gamma))]
            b = actions[("e", tuple(-x for x in delta))]
            actions[("e", neg)] = (a @ b - b @ a) * Fraction(-1, n)
        return actions

    def _fundamental(self, k):
        """The k-th fundamental module, from the k-th exterior power."""
        rs = self.algebra.root_system
        subsets = list(combinations(range(self.natural_dim), k))
        index = {s: i for i, s in enumerate(subsets)}
        matrices = {}
        for key, nat in self.natural_actions.items():
            m = _zeros(len(subsets), len(subsets))
            for ci, sub in enumerate(subsets):
                for pos, elem in enumerate(sub):
                    for r in range(self.natural_dim):
                        c = nat[r, elem]
                        if c == 0:
                            continue
                        if r == elem:
                            m[ci, ci] += c
                        elif r not in sub:
                            rest = [x for x in sub if x != elem]
                            new = tuple(sorted(rest + [r]))
                            # parity of moving r from slot pos to its sorted slot
                            parity = (-1) ** (pos + sum(1 for x in rest if x < r))
                            m[index[new], ci] += c * parity
            matrices[key] = m
        provider = _MatrixProvider(matrices, index[tuple(range(k))])
        lam = rs.fundamental_weight(k - 1)
        mod = _span_module(provider, self.algebra, lam)
        if mod.dim != weyl_dim(rs, lam):
            raise AssertionError("fundamental module has the wrong dimension")
        representation_property_check(self.algebra, mod.actions)
        return mod

    def random_torus_matrix(self, rng, span=2):
        """A generic torus element, entries exact powers of two."""
        nd = self.natural_dim
        m = _zeros(nd, nd)
        if self.letter == "A":
            exps = [rng.randint(-span, span) for _ in range(nd - 1)]
            exps.append(-sum(exps))
        else:
            a, b = rng.randint(-span, span), rng.randint(-span, span)
            exps = [a, b, -b, -a]
        for i, e in enumerate(exps):
            m[i, i] = Fraction(2) ** e
        return m

    def __repr__(self):
        return f"MatrixRealization({self.letter}{self.rank})"


def build_realization(algebra):
    """Matrix realization for a supported type (raises UnsupportedType)."""
    return MatrixRealization(algebra)


def representation_property_check(algebra, actions):
    """Exact check that the matrices represent the algebra: on every pair
    of basis keys, the matrix bracket equals the matrix of the bracket."""
    keys = algebra.basis_keys()
    mats = {k: actions[k] for k in keys}
    for x in keys:
        for y in keys:
            lhs = mats[x] @ mats[y] - mats[y] @ mats[x]
            rhs_el = algebra.bracket(algebra.basis_element(x), algebra.basis_element(y))
            rhs = _zeros(*lhs.shape)
            for key, c in rhs_el.terms.items():
                rhs = rhs + mats[key] * c
            if not _is_zero_matrix(lhs - rhs):
                raise AssertionError(f"representation property fails on {x}, {y}")
    return True


# -- modules ----------------------------------------------------------------


def build_irrep(realization, lam, dim_cap=20000):
    """The irreducible module of highest weight lam, built as the cyclic
    span of the product of highest vectors inside a tensor product of
    fundamental modules."""
    rs = realization.algebra.root_system
    if not isinstance(lam, Weight):
        lam = Weight(tuple(lam))
    if not lam.is_dominant or not lam.is_integral:
        raise NotDominant(f"{lam} is not a dominant integral weight")
    predicted = weyl_dim(rs, lam)
    if predicted > dim_cap:
        raise DimensionCap(predicted, dim_cap)
    factors = []
    for i, c in enumerate(lam.coords):
        factors.extend([realization.fundamentals[i]] * int(c))
    if not factors:
        actions = {k: _zeros(1, 1) for k in realization.algebra.basis_keys()}
        return HighestWeightModule(realization.algebra, lam, [rs.zero_weight()], actions)
    provider = _TensorProvider(factors)
    mod = _span_module(provider, realization.algebra, lam)
    if mod.dim != predicted:
        raise AssertionError(
            f"cyclic span has dimension {mod.dim}, formula says {predicted}"
        )
    return mod


@dataclass(frozen=True)
class MultiplicityRecord:
    """dim of the subspace of semi-invariants of one character in one module."""

    lam: Weight  # highest weight of the module examined
    chi: tuple
    dim: int

    def pair(self, rs):
        """The semigroup element this record witnesses (dual weight, character)."""
        return (rs.dual_weight(self.lam).coords, self.chi)


def semi_invariant_dim(mod, sub: SubgroupData, chi) -> MultiplicityRecord:
    """Exact dimension of the semi-invariants of weight chi under the subgroup.

    A vector qualifies when it is an S-weight vector of weight chi and is
    killed by every basis element of the unipotent part.
    """
    if mod.algebra is not sub.algebra:
        raise AlgebraMismatch("module and subgroup live over different algebras")
    chi = tuple(chi)
    cols = [j for j in range(mod.dim) if sub.tau.restrict(mod.weights[j]) == chi]
    if not cols:
        return MultiplicityRecord(mod.lam, chi, 0)
    rows = []
    for x in sub.nil_basis:
        a = mod.act_element(x)
        for r in range(mod.dim):
            row = [a[r, j] for j in cols]
            if any(v != 0 for v in row):
                rows.append(row)
    kernel = len(cols) - (linalg.rank(rows) if rows else 0)
    return MultiplicityRecord(mod.lam, chi, kernel)


def semi_invariant_witness(mod, sub: SubgroupData, table: ActiveRootTable, j):
    """The lowered highest vector witnessing the j-th active generator.

    Returns a nonzero module vector of S-weight tau(lam) - phi_j that the
    unipotent part annihilates; both facts are checked by the caller via
    annihilated_by_nil and vector_s_weight.
    """
    if not 0 <= j < table.m:
        raise IndexError(f"family index {j} out of range (m = {table.m})")
    rs = mod.algebra.root_system
    fam = table.families[j]
    first = fam.roots[0].coords
    scale = fam.coefficients[first]
    v0 = mod.highest_vector()
    out = _zeros(mod.dim, 1)[:, 0]
    for beta in fam.roots:
        pair = rs.pairing(mod.lam, beta)
        if pair <= 0:
            raise AssertionError(f"nonpositive pairing of {mod.lam} with {beta}")
        coeff = (fam.coefficients[beta.coords] / scale) * Fraction(1, pair)
        out = out + (mod.actions[("e", tuple(-x for x in beta.coords))] @ v0) * coeff
    return out


def annihilated_by_nil(mod, sub: SubgroupData, vec):
    """Whether every unipotent basis element kills the vector."""
    for x in sub.nil_basis:
        if any(v != 0 for v in (mod.act_element(x) @ vec)):
            return False
    return True


def vector_s_weight(mod, sub: SubgroupData, vec):
    """The common S-weight of a vector's support; ValueError if mixed."""
    chis = {sub.tau.restrict(mod.weights[j]) for j in range(mod.dim) if vec[j] != 0}
    if len(chis) != 1:
        raise ValueError(f"vector is not an S-weight vector: {sorted(chis)}")
    return chis.pop()


def dominant_weights_up_to(rs, height_bound):
    """All dominant integral weights with coordinate sum <= the bound."""
    out = []

    def rec(prefix, remaining):
        if len(prefix) == rs.n:
            out.append(Weight(tuple(prefix)))
            return
        for c in range(remaining + 1):
            rec(prefix + [c], remaining - c)

    rec([], height_bound)
    out.sort(key=lambda w: (sum(w.coords), w.coords))
    return out


def enumerate_semigroup(sub: SubgroupData, realization, height_bound, dim_cap=20000):
    """All (module weight, character) pairs with nonzero semi-invariants.

    Scans every dominant weight up to the bound and every character of S
    actually occurring in the module; deterministic output order.
    """
    verdict = check_spherical(sub)
    if not verdict.spherical:
        raise NotSpherical(verdict.violations)
    records = []
    for lam in dominant_weights_up_to(sub.root_system, height_bound):
        mod = build_irrep(realization, lam, dim_cap)
        chis = sorted({sub.tau.restrict(w) for w in mod.weights})
        for chi in chis:
            rec = semi_invariant_dim(mod, sub, chi)
            if rec.dim >= 1:
                records.append(rec)
    return records


# -- open orbit check --------------------------------------------------------


def open_orbit_check(sub: SubgroupData, realization, trials=200, coefficient_range=3, seed=0):
    """Randomized certificate that the Borel has an open orbit.

    Samples group elements g = exp(upper) * torus * exp(lower) with small
    exact coefficients and tests, by exact rank, whether the Borel
    subalgebra plus the g-conjugate of the subgroup's algebra spans
    everything.  True is a certificate; False only reports that no
    witness was found.
    """
    rs = sub.root_system
    nat = realization.natural_actions
    target = rs.n + 2 * len(rs.positive_roots)

    borel = [nat[("h", i)] for i in range(rs.n)]
    borel += [nat[("e", r.coords)] for r in rs.positive_roots]
    sub_mats = []
    for row in sub.tau.rows:
        m = _zeros(realization.natural_dim, realization.natural_dim)
        for i, c in enumerate(row):
            if c:
                m = m + nat[("h", i)] * c
        sub_mats.append(m)
    for x in sub.nil_basis:
        m = _zeros(realization.natural_dim, realization.natural_dim)
        for key, c in x.terms.items():
            m = m + nat[key] * c
        sub_mats.append(m)

    base_rows = [list(b.flat) for b in borel]
    if not sub_mats and linalg.rank(base_rows) < target:
        return False

    rng = random.Random(seed)
    pos = [nat[("e", r.coords)] for r in rs.positive_roots]
    neg = [nat[("e", (-r).coords)] for r in rs.positive_roots]
    nd = realization.natural_dim
    for _ in range(trials):
        up = _zeros(nd, nd)
        lo = _zeros(nd, nd)
        for p, q in zip(pos, neg):
            up = up + p * rng.randint(-coefficient_range, coefficient_range)
            lo = lo + q * rng.randint(-coefficient_range, coefficient_range)
        t = realization.random_torus_matrix(rng)
        tinv = _zeros(nd, nd)
        for i in range(nd):
            tinv[i, i] = Fraction(1) / t[i, i]
        g = exp_nilpotent(up) @ t @ exp_nilpotent(lo)
        ginv = exp_nilpotent(lo * Fraction(-1)) @ tinv @ exp_nilpotent(up * Fraction(-1))
        rows = list(base_rows)
        for m in sub_mats:
            rows.append(list((g @ m @ ginv).flat))
        if linalg.rank(rows) == target:
            return True
    return False
