"""Root systems, weights and Weyl combinatorics of semisimple groups.

Roots are stored as integer coordinate vectors over the simple roots,
weights as rational coordinate vectors over the fundamental weights, so
that ``pairing(omega_i, alpha_j) == delta_ij`` is a coordinate readoff.
All scalars are exact (ints and Fractions); there is no floating point
anywhere in the package.

Conventions.  ``cartan[i][j]`` is the pairing of the simple root alpha_j
against the coroot of alpha_i, i.e. 2(alpha_i, alpha_j)/(alpha_i, alpha_i).
Positive roots are ordered by height and, within a height, so that
alpha_1 < alpha_2 < ...; hence ``positive_roots[:n]`` are the simple roots
in their natural order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidType, NotDominant, ZeroRoot

# admissible ranks per simple type (min, max); None = unbounded
_ADMISSIBLE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


def positive_root_count(letter, rank):
    """Number of positive roots of one simple component."""
    return {
        "A": rank * (rank + 1) // 2,
        "B": rank * rank,
        "C": rank * rank,
        "D": rank * (rank - 1),
        "E": {6: 36, 7: 63, 8: 120}[rank],
        "F": 24,
        "G": 6,
    }[letter]


def _num(x):
    """Normalize a rational to int when it is integral."""
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x)
    return x


@dataclass(frozen=True)
class Root:
    """A root, as integer coefficients over the simple roots."""

    coords: tuple

    @property
    def height(self):
        return sum(self.coords)

    def support(self):
        """Indices (0-based) of the simple roots appearing with k > 0."""
        return frozenset(i for i, k in enumerate(self.coords) if k > 0)

    def __neg__(self):
        return Root(tuple(-k for k in self.coords))

    def __add__(self, other):
        return Root(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Root(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __repr__(self):
        return f"Root{self.coords}"


@dataclass(frozen=True)
class Weight:
    """A weight, as rational coefficients over the fundamental weights."""

    coords: tuple

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(_num(Fraction(c)) for c in self.coords))

    @property
    def is_dominant(self):
        return all(c >= 0 for c in self.coords)

    @property
    def is_integral(self):
        return all(isinstance(c, int) for c in self.coords)

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return Weight(tuple(-c for c in self.coords))

    def __repr__(self):
        return f"Weight{self.coords}"


def _component_cartan(letter, rank):
    """Cartan matrix of one simple component (rows indexed by coroots)."""
    c = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def edge(i, j):
        c[i][j] = -1
        c[j][i] = -1

    if letter in ("A", "B", "C"):
        for i in range(rank - 1):
            edge(i, i + 1)
        if letter == "B" and rank >= 2:
            c[rank - 1][rank - 2] = -2  # last simple root short
        if letter == "C" and rank >= 2:
            c[rank - 2][rank - 1] = -2  # last simple root long
    elif letter == "D":
        for i in range(rank - 2):
            edge(i, i + 1)
        edge(rank - 3, rank - 1)
    elif letter == "E":
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            edge(a, b)
        edge(1, 3)
    elif letter == "F":
        edge(0, 1)
        edge(1, 2)
        edge(2, 3)
        c[2][1] = -2  # alpha_3, alpha_4 short
    elif letter == "G":
        c[0][1] = -3  # alpha_1 short
        c[1][0] = -1
    return c


def _symmetrizer(cartan, n):
    """Positive rationals d_i with d_i * cartan[i][j] symmetric.

    d_i is half the squared length of alpha_i; computed by propagating
    the symmetry condition along the Dynkin graph, normalized so the
    minimum over each connected component is 1.
    """
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        comp = [start]
        d[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i != j and cartan[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(cartan[i][j], cartan[j][i])
                    comp.append(j)
                    queue.append(j)
        low = min(d[i] for i in comp)
        for i in comp:
            d[i] = d[i] / low
    return d


class RootSystem:
    """The root and weight combinatorics of a simply connected semisimple group."""

    def __init__(self, components):
        components = tuple((str(t).upper(), int(r)) for t, r in components)
        if not components:
            raise InvalidType("at least one simple component is required")
        for letter, rank in components:
            if letter not in _ADMISSIBLE:
                raise InvalidType(f"unknown simple type {letter!r}")
            lo, hi = _ADMISSIBLE[letter]
            if rank < lo or (hi is not None and rank > hi):
                raise InvalidType(f"{letter}_{rank} is not an admissible type")
        self.components = components
        self.n = sum(r for _, r in components)
        self.cartan = self._build_cartan()
        self._d = tuple(_symmetrizer(self.cartan, self.n))
        self.positive_roots = self._generate_positive_roots()
        self.simple_roots = tuple(self.positive_roots[: self.n])
        self._pos_set = {r.coords for r in self.positive_roots}
        self._index = {r.coords: i for i, r in enumerate(self.positive_roots)}
        self.symmetrizer = tuple(self.root_form(r, r) for r in self.positive_roots)

    def _build_cartan(self):
        blocks = [_component_cartan(t, r) for t, r in self.components]
        c = [[0] * self.n for _ in range(self.n)]
        off = 0
        for block in blocks:
            k = len(block)
            for i in range(k):
                for j in range(k):
                    c[off + i][off + j] = block[i][j]
            off += k
        return tuple(tuple(row) for row in c)

    def _generate_positive_roots(self):
        n = self.n
        simples = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        known = set(simples)
        layers = {1: list(simples)}
        h = 1
        while layers.get(h):
            nxt = []
            for beta in layers[h]:
                for i in range(n):
                    pair = sum(self.cartan[i][j] * beta[j] for j in range(n))
                    p = 0
                    cur = tuple(b - int(i == j) for j, b in enumerate(beta))
                    while cur in known:
                        p += 1
                        cur = tuple(c - int(i == j) for j, c in enumerate(cur))
                    if p - pair >= 1:
                        gamma = tuple(b + int(i == j) for j, b in enumerate(beta))
                        if gamma not in known:
                            known.add(gamma)
                            nxt.append(gamma)
            h += 1
            if nxt:
                layers[h] = nxt
        ordered = sorted(known, key=lambda c: (sum(c), tuple(-x for x in c)))
        return tuple(Root(c) for c in ordered)

    # -- membership -------------------------------------------------------

    def is_positive_root(self, coords):
        return tuple(coords) in self._pos_set

    def is_root(self, coords):
        c = tuple(coords)
        return c in self._pos_set or tuple(-x for x in c) in self._pos_set

    def root(self, coords):
        """The Root with these coordinates, validated against the root set."""
        c = tuple(int(x) for x in coords)
        if not self.is_root(c):
            raise ValueError(f"{c} is not a root of {self.describe()}")
        return Root(c)

    def root_index(self, root):
        return self._index[root.coords]

    # -- bilinear form ----------------------------------------------------

    def root_form(self, alpha, beta):
        """The invariant inner product of two vectors in the root lattice."""
        a, b = alpha.coords, beta.coords
        return sum(
            self._d[i] * self.cartan[i][j] * a[i] * b[j]
            for i in range(self.n)
            for j in range(self.n)
            if a[i] != 0 and self.cartan[i][j] != 0
        )

    def weight_root_form(self, lam, mu):
        """The invariant inner product of a weight with a root."""
        return sum(c * k * d for c, k, d in zip(lam.coords, mu.coords, self._d) if c != 0 and k != 0)

    def pairing(self, lam, mu):
        """2(lam, mu)/(mu, mu) for a weight (or root) lam and a root mu."""
        if all(k == 0 for k in mu.coords):
            raise ZeroRoot("pairing against the zero vector")
        if isinstance(lam, Root):
            num = self.root_form(lam, mu)
        else:
            num = self.weight_root_form(lam, mu)
        return _num(Fraction(2) * Fraction(num) / Fraction(self.root_form(mu, mu)))

    def support(self, alpha):
        return alpha.support()

    # -- weights ----------------------------------------------------------

    def fundamental_weight(self, i):
        return Weight(tuple(int(i == j) for j in range(self.n)))

    def zero_weight(self):
        return Weight((0,) * self.n)

    def root_to_weight(self, alpha):
        """Fundamental-weight coordinates of a vector in the root lattice."""
        return Weight(
            tuple(sum(self.cartan[i][j] * alpha.coords[j] for j in range(self.n)) for i in range(self.n))
        )

    def reflect(self, lam, i):
        """Simple reflection s_i applied to a weight."""
        ci = lam.coords[i]
        return Weight(tuple(c - ci * self.cartan[k][i] for k, c in enumerate(lam.coords)))

    def dual_weight(self, lam):
        """The highest weight of the dual module: -w0(lam), for dominant lam."""
        if not lam.is_dominant:
            raise NotDominant(f"{lam} is not dominant")
        mu = list(lam.coords)
        while True:
            i = next((k for k, c in enumerate(mu) if c > 0), None)
            if i is None:
                break
            ci = mu[i]
            for k in range(self.n):
                mu[k] -= ci * self.cartan[k][i]
        return Weight(tuple(-c for c in mu))

    def coroot_coefficients(self, alpha):
        """Integer coefficients of the coroot of alpha over the simple coroots."""
        d_alpha = Fraction(self.root_form(alpha, alpha)) / 2
        coeffs = []
        for i, k in enumerate(alpha.coords):
            c = Fraction(k) * self._d[i] / d_alpha
            if c.denominator != 1:
                raise ArithmeticError(f"non-integral coroot coefficient for {alpha}")
            coeffs.append(int(c))
        return tuple(coeffs)

    # -- presentation -----------------------------------------------------

    def describe(self):
        return " x ".join(f"{t}{r}" for t, r in self.components)

    def __repr__(self):
        return f"RootSystem({self.describe()})"


def build_root_system(spec):
    """Build the root system of a product of simple components.

    ``spec`` is a sequence of (type letter, rank) pairs, e.g.
    ``[("A", 3)]`` or ``[("A", 1), ("C", 2)]``.
    """
    return RootSystem(spec)


def fmt_root(root):
    """Readable form of a root, e.g. 'a1+2a2'."""
    parts = []
    for i, k in enumerate(root.coords):
        if k == 0:
            continue
        sign = "-" if k < 0 else ("+" if parts else "")
        mag = abs(k)
        parts.append(f"{sign}{'' if mag == 1 else mag}a{i + 1}")
    return "".join(parts) or "0"


def fmt_weight(w):
    """Readable form of a weight, e.g. 'w1+w3' or '0'."""
    parts = []
    for i, c in enumerate(w.coords):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        parts.append(f"{sign}{'' if mag == 1 else mag}w{i + 1}")
    return "".join(parts) or "0"
