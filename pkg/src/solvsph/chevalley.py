"""The Lie algebra in a Chevalley basis with exact integer structure constants.

Basis: one vector e_alpha per root alpha (positive and negative) and one
coroot h_i per simple root, normalized so that [e_alpha, e_{-alpha}] is
the coroot of alpha.  Signs follow the classical recipe: for each
non-simple positive root the decomposition pair (gamma, delta) with gamma
minimal in the root order is given the positive constant p + 1, and every
other constant is forced from those choices by antisymmetry, the
opposite-root sign rule and the four-root relation between constants of
roots summing to zero.  Any consistent sign choice gives the same
downstream results; this one is fixed for reproducibility.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import AlgebraMismatch
from .rootsys import Root, RootSystem


class AlgebraElement:
    """Sparse rational combination of basis vectors.

    Keys are ("e", coords) for root vectors and ("h", i) for simple
    coroots; zero coefficients are never stored.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        self.terms = {}
        if terms:
            for key, coeff in terms.items():
                c = Fraction(coeff)
                if c != 0:
                    self.terms[key] = c

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.algebra is not other.algebra:
            raise AlgebraMismatch("elements of different algebras")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key, 0) + c
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return AlgebraElement(self.algebra, out)

    def __sub__(self, other):
        return self + (other * -1)

    def __mul__(self, scalar):
        s = Fraction(scalar)
        return AlgebraElement(self.algebra, {k: c * s for k, c in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.algebra is other.algebra
            and self.terms == other.terms
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms, key=repr):
            c = self.terms[key]
            name = f"e{key[1]}" if key[0] == "e" else f"h{key[1] + 1}"
            bits.append(f"{c}*{name}")
        return " + ".join(bits)


class ChevalleyAlgebra:
    """Chevalley basis of the semisimple Lie algebra of a root system."""

    def __init__(self, root_system: RootSystem):
        self.root_system = root_system
        self._pos_set = {r.coords for r in root_system.positive_roots}
        self._all_roots = self._pos_set | {tuple(-x for x in c) for c in self._pos_set}
        self._order = {r.coords: i for i, r in enumerate(root_system.positive_roots)}
        self.extraspecial = {}
        self._n = {}
        self._build_constants()

    # -- construction -----------------------------------------------------

    def _string_down(self, beta, alpha):
        """Largest p with beta - p*alpha a root."""
        p = 0
        cur = tuple(b - a for b, a in zip(beta, alpha))
        while cur in self._all_roots:
            p += 1
            cur = tuple(c - a for c, a in zip(cur, alpha))
        return p

    def _form(self, x, y):
        return self.root_system.root_form(Root(tuple(x)), Root(tuple(y)))

    def _build_constants(self):
        pos = [r.coords for r in self.root_system.positive_roots]
        n_pos = {}

        def mixed(x, y):
            """Constant for [e_x, e_{-y}] with x, y distinct positive roots."""
            diff = tuple(a - b for a, b in zip(x, y))
            if diff not in self._all_roots:
                return Fraction(0)
            if diff in self._pos_set:
                return Fraction(self._form(diff, diff), self._form(x, x)) * n_pos[(diff, y)]
            # x - y is a negative root: same constant as [e_y, e_{-x}]
            rev = tuple(-d for d in diff)
            return Fraction(self._form(rev, rev), self._form(y, y)) * n_pos[(rev, x)]

        for eps in pos:
            if sum(eps) == 1:
                continue
            pairs = []
            for a in pos:
                if self._order[a] >= self._order[eps]:
                    break
                b = tuple(e - x for e, x in zip(eps, a))
                if b in self._pos_set and self._order[a] < self._order[b]:
                    pairs.append((a, b))
            gamma, delta = pairs[0]
            self.extraspecial[eps] = (gamma, delta)
            n_gd = Fraction(self._string_down(delta, gamma) + 1)
            n_pos[(gamma, delta)] = n_gd
            n_pos[(delta, gamma)] = -n_gd
            for a, b in pairs[1:]:
                # four-root relation applied to (gamma, delta, -a, -b)
                t2 = Fraction(0)
                da = tuple(d - x for d, x in zip(delta, a))
                if da in self._all_roots:
                    t2 = mixed(delta, a) * mixed(gamma, b) / self._form(da, da)
                t3 = Fraction(0)
                ga = tuple(g - x for g, x in zip(gamma, a))
                if ga in self._all_roots:
                    t3 = -mixed(gamma, a) * mixed(delta, b) / self._form(ga, ga)
                n_ab = Fraction(self._form(eps, eps)) * (t2 + t3) / n_gd
                n_pos[(a, b)] = n_ab
                n_pos[(b, a)] = -n_ab

        # Fill the full signed table from the positive-positive part.
        table = {}
        for (a, b), c in n_pos.items():
            na = tuple(-x for x in a)
            nb = tuple(-x for x in b)
            table[(a, b)] = c
            table[(na, nb)] = -c
        for x in pos:
            for y in pos:
                if x == y:
                    continue
                diff = tuple(a - b for a, b in zip(x, y))
                if diff not in self._all_roots:
                    continue
                ny = tuple(-b for b in y)
                c = mixed(x, y)
                table[(x, ny)] = c
                table[(ny, x)] = -c
        self._n = {k: _as_int(v) for k, v in table.items() if v != 0}

    # -- basis ------------------------------------------------------------

    def e(self, root):
        """The basis vector of a root (a Root, or raw coordinates)."""
        coords = root.coords if isinstance(root, Root) else tuple(int(x) for x in root)
        if coords not in self._all_roots:
            raise ValueError(f"{coords} is not a root")
        return AlgebraElement(self, {("e", coords): 1})

    def h(self, i):
        """The simple coroot basis vector h_i (0-based)."""
        return AlgebraElement(self, {("h", int(i)): 1})

    def coroot(self, root):
        """The coroot of an arbitrary root, as a combination of the h_i."""
        coords = root.coords if isinstance(root, Root) else tuple(root)
        sign = 1
        if coords not in self._pos_set:
            coords = tuple(-c for c in coords)
            sign = -1
        coeffs = self.root_system.coroot_coefficients(Root(coords))
        return AlgebraElement(self, {("h", i): sign * c for i, c in enumerate(coeffs) if c})

    def zero(self):
        return AlgebraElement(self, {})

    def basis_keys(self):
        """All basis keys: root vectors for every root, then simple coroots."""
        keys = [("e", c) for c in sorted(self._all_roots, key=lambda c: (sum(c), c))]
        keys += [("h", i) for i in range(self.root_system.n)]
        return keys

    def basis_element(self, key):
        return AlgebraElement(self, {key: 1})

    def structure_constant(self, a, b):
        """N with [e_a, e_b] = N e_{a+b}; zero when a+b is not a root."""
        a = a.coords if isinstance(a, Root) else tuple(a)
        b = b.coords if isinstance(b, Root) else tuple(b)
        return self._n.get((a, b), 0)

    # -- bracket ----------------------------------------------------------

    def _bracket_basis(self, key_x, key_y):
        kx, vx = key_x
        ky, vy = key_y
        if kx == "h" and ky == "h":
            return self.zero()
        if kx == "h":
            # [h_i, e_alpha] = <alpha | alpha_i> e_alpha
            pair = sum(self.root_system.cartan[vx][j] * vy[j] for j in range(self.root_system.n))
            return AlgebraElement(self, {key_y: pair})
        if ky == "h":
            pair = sum(self.root_system.cartan[vy][j] * vx[j] for j in range(self.root_system.n))
            return AlgebraElement(self, {key_x: -pair})
        s = tuple(a + b for a, b in zip(vx, vy))
        if all(c == 0 for c in s):
            return self.coroot(Root(vx))
        c = self._n.get((vx, vy), 0)
        if c == 0:
            return self.zero()
        return AlgebraElement(self, {("e", s): c})

    def bracket(self, x: AlgebraElement, y: AlgebraElement):
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("bracket of elements from a different algebra")
        out = self.zero()
        for key_x, cx in x.terms.items():
            for key_y, cy in y.terms.items():
                out = out + self._bracket_basis(key_x, key_y) * (cx * cy)
        return out

    def __repr__(self):
        return f"ChevalleyAlgebra({self.root_system.describe()})"


def _as_int(x):
    f = Fraction(x)
    if f.denominator != 1:
        raise ArithmeticError("structure constant is not an integer")
    return int(f)


def build_algebra(root_system):
    """Chevalley algebra of a root system."""
    return ChevalleyAlgebra(root_system)


def bracket(x, y):
    """Lie bracket of two elements of the same algebra."""
    if not isinstance(x, AlgebraElement) or not isinstance(y, AlgebraElement):
        raise TypeError("bracket expects algebra elements")
    if x.algebra is not y.algebra:
        raise AlgebraMismatch("bracket of elements from different algebras")
    return x.algebra.bracket(x, y)
