"""Exact root-system geometry for the finite simple Lie types.

Everything is integer or `fractions.Fraction` arithmetic; no floating point
exists anywhere in this package. A weight is a tuple of integers in the
fundamental-weight basis, a simple root doubles as the corresponding row of
the Cartan matrix, and the invariant bilinear form is normalized from first
principles (via the highest root) so that it agrees with the form induced by
the trace form of the adjoint representation. Under that normalization the
adjoint representation has Casimir eigenvalue 1 and (rho, rho) = dim(g)/24.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InvalidCartanType

Weight = tuple[int, ...]

VALID_SERIES = "ABCDEFG"
_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4, "E": 6, "F": 4, "G": 2}
_MAX_RANK = {"E": 8, "F": 4, "G": 2}


def wadd(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def wsub(a: Weight, b: Weight) -> Weight:
    return tuple(x - y for x, y in zip(a, b))


def wneg(a: Weight) -> Weight:
    return tuple(-x for x in a)


def wscale(k: int, a: Weight) -> Weight:
    return tuple(k * x for x in a)


@dataclass(frozen=True, order=True)
class CartanType:
    """A series letter A..G together with a rank, e.g. B3.

    C2 is accepted and constructed as B2 with the root-length labels swapped
    (the two types are isomorphic).
    """

    series: str
    rank: int

    def __post_init__(self) -> None:
        if self.series not in _MIN_RANK:
            raise InvalidCartanType(
                f"unknown series {self.series!r}; valid series are A, B, C, D, E, F, G"
            )
        lo = _MIN_RANK[self.series]
        hi = _MAX_RANK.get(self.series)
        if self.rank < lo:
            raise InvalidCartanType(
                f"{self.series}{self.rank}: series {self.series} requires rank >= {lo}"
            )
        if hi is not None and self.rank > hi:
            raise InvalidCartanType(
                f"{self.series}{self.rank}: series {self.series} requires rank <= {hi}"
            )

    @classmethod
    def parse(cls, text: str) -> "CartanType":
        t = text.strip().upper()
        if len(t) < 2 or t[0] not in VALID_SERIES or not t[1:].isdigit():
            raise InvalidCartanType(
                f"cannot parse Cartan type {text!r}; expected a series letter "
                f"(A, B, C, D, E, F, G) followed by a decimal rank, e.g. A2, D4, E8"
            )
        return cls(t[0], int(t[1:]))

    def __str__(self) -> str:
        return f"{self.series}{self.rank}"


def _cartan_matrix(ct: CartanType) -> list[list[int]]:
    """Cartan matrix with a[i][j] = 2(alpha_i, alpha_j)/(alpha_j, alpha_j)."""
    l = ct.rank
    a = [[2 if i == j else 0 for j in range(l)] for i in range(l)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i][j] = aij
        a[j][i] = aji

    s = ct.series
    if s in "ABC":
        for i in range(l - 1):
            bond(i, i + 1)
        if s == "B" and l >= 2:
            # last simple root is short
            bond(l - 2, l - 1, -2, -1)
        if s == "C" and l >= 2:
            # last simple root is long
            bond(l - 2, l - 1, -1, -2)
    elif s == "D":
        for i in range(l - 2):
            bond(i, i + 1)
        bond(l - 3, l - 1)
    elif s == "E":
        bond(0, 2)
        for i in range(2, l - 1):
            bond(i, i + 1)
        bond(1, 3)
    elif s == "F":
        bond(0, 1)
        bond(1, 2, -2, -1)
        bond(2, 3)
    elif s == "G":
        bond(0, 1, -1, -3)
    return a


def _generate_positive_roots(cartan: list[list[int]], l: int) -> list[tuple[int, ...]]:
    """All positive roots in simple-root coordinates, by closing root strings."""
    known: set[tuple[int, ...]] = set()
    level = []
    for i in range(l):
        e = tuple(1 if j == i else 0 for j in range(l))
        known.add(e)
        level.append(e)
    roots = list(level)
    while level:
        nxt = []
        for rc in level:
            for j in range(l):
                cand = tuple(c + (1 if t == j else 0) for t, c in enumerate(rc))
                if cand in known:
                    continue
                # how far the alpha_j-string through rc extends backwards
                back = 0
                probe = rc
                while True:
                    probe = tuple(c - (1 if t == j else 0) for t, c in enumerate(probe))
                    if min(probe) < 0 or probe not in known:
                        break
                    back += 1
                pairing = sum(rc[i] * cartan[i][j] for i in range(l))
                # the string continues forward iff back - pairing >= 1
                if back - pairing >= 1:
                    known.add(cand)
                    nxt.append(cand)
        roots.extend(nxt)
        level = nxt
    return sorted(roots, key=lambda rc: (sum(rc), rc))


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    n = len(matrix)
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


class RootSystem:
    """Root data and the exact invariant form for one simple Cartan type.

    Immutable after construction; every derived quantity is precomputed here,
    and all operations on it are pure functions.
    """

    def __init__(self, cartan_type: CartanType):
        self.cartan_type = cartan_type
        l = cartan_type.rank
        cartan = _cartan_matrix(cartan_type)
        self.l = l
        self.cartan_matrix = tuple(tuple(row) for row in cartan)

        rcoords = _generate_positive_roots(cartan, l)
        self.positive_root_coords: tuple[tuple[int, ...], ...] = tuple(rcoords)
        self.r = len(rcoords)
        self.n = l + 2 * self.r

        # fundamental coordinates of a root: f_j = sum_i c_i * a[i][j]
        def to_fund(rc: tuple[int, ...]) -> Weight:
            return tuple(sum(rc[i] * cartan[i][j] for i in range(l)) for j in range(l))

        self.positive_roots: tuple[Weight, ...] = tuple(to_fund(rc) for rc in rcoords)
        self.simple_roots: tuple[Weight, ...] = tuple(tuple(row) for row in cartan)
        self.highest_root: Weight = self.positive_roots[-1]
        if self.r > 1:
            # the highest root is the unique root of maximal height
            assert sum(rcoords[-1]) > sum(rcoords[-2])
        self.rho: Weight = (1,) * l
        assert wscale(2, self.rho) == tuple(
            sum(f[j] for f in self.positive_roots) for j in range(l)
        ), "rho is half the sum of the positive roots"

        # symmetrizers: d0[j] proportional to (alpha_j, alpha_j); propagate
        # along the Dynkin graph, anchored at d0[0] = 1
        d0: list[Fraction | None] = [None] * l
        d0[0] = Fraction(1)
        todo = [0]
        while todo:
            i = todo.pop()
            for j in range(l):
                if j != i and cartan[i][j] != 0 and d0[j] is None:
                    d0[j] = d0[i] * Fraction(cartan[j][i], cartan[i][j])
                    todo.append(j)
        assert all(x is not None for x in d0), "Dynkin diagram must be connected"
        gram0 = [[Fraction(cartan[i][j]) * d0[j] for j in range(l)] for i in range(l)]
        assert all(gram0[i][j] == gram0[j][i] for i in range(l) for j in range(l))

        def ip0(x: tuple[int, ...], y: tuple[int, ...]) -> Fraction:
            return sum(
                Fraction(x[i]) * gram0[i][j] * y[j] for i in range(l) for j in range(l)
            )

        theta_rc = rcoords[-1]
        # unique scaling that makes the form reproduce itself over the roots:
        # c = (theta,theta)_0 / sum over all roots beta of (theta,beta)_0^2
        denom = 2 * sum(ip0(theta_rc, rc) ** 2 for rc in rcoords)
        c = ip0(theta_rc, theta_rc) / denom
        self.killing_gram: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(c * gram0[i][j] for j in range(l)) for i in range(l)
        )
        killing_d = [c * d for d in d0]

        frac_cartan = [[Fraction(cartan[i][j]) for j in range(l)] for i in range(l)]
        self._cartan_inverse = _invert(frac_cartan)

        # Gram matrix of the fundamental weights: (w_i, w_j)
        fund_gram = [
            [killing_d[i] * self._cartan_inverse[j][i] for j in range(l)] for i in range(l)
        ]
        assert all(fund_gram[i][j] == fund_gram[j][i] for i in range(l) for j in range(l))
        scale = math.lcm(6, *(q.denominator for row in fund_gram for q in row))
        self._scale = scale
        self._int_gram = tuple(
            tuple(int(q * scale) for q in row) for row in fund_gram
        )
        # per positive root: integer vector G*alpha so (x, alpha) = x . galpha / scale
        self._pos_gvec = tuple(
            tuple(sum(self._int_gram[i][j] * a[j] for j in range(l)) for i in range(l))
            for a in self.positive_roots
        )
        self._rho_gvec = tuple(
            sum(self._int_gram[i][j] * self.rho[j] for j in range(l)) for i in range(l)
        )

    # -- scaled-integer fast paths -------------------------------------------

    def ip_scaled(self, lam: Weight, mu: Weight) -> int:
        """Integer self._scale * (lam, mu)."""
        g = self._int_gram
        return sum(lam[i] * sum(g[i][j] * mu[j] for j in range(self.l)) for i in range(self.l))

    @property
    def scale(self) -> int:
        return self._scale

    # -- misc helpers ----------------------------------------------------------

    def root_coords(self, lam: Weight) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis (rationals)."""
        inv = self._cartan_inverse
        return tuple(
            sum(Fraction(lam[i]) * inv[i][j] for i in range(self.l)) for j in range(self.l)
        )

    def height(self, lam: Weight) -> Fraction:
        return sum(self.root_coords(lam), Fraction(0))

    def is_dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootSystem) and other.cartan_type == self.cartan_type

    def __hash__(self) -> int:
        return hash(self.cartan_type)

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan_type}, r={self.r}, n={self.n})"


@lru_cache(maxsize=None)
def _build(ct: CartanType) -> RootSystem:
    return RootSystem(ct)


def build_root_system(cartan_type: str | CartanType) -> RootSystem:
    """Construct (and memoize) the root system for a Cartan type."""
    ct = cartan_type if isinstance(cartan_type, CartanType) else CartanType.parse(cartan_type)
    return _build(ct)


def killing_inner(rs: RootSystem, lam: Weight, mu: Weight) -> Fraction:
    """The invariant bilinear form (lam, mu), exact."""
    if len(lam) != rs.l or len(mu) != rs.l:
        raise ValueError(f"weight length must be {rs.l}")
    return Fraction(rs.ip_scaled(lam, mu), rs.scale)


def casimir_eigenvalue(rs: RootSystem, lam: Weight) -> Fraction:
    """(lam + rho, lam + rho) - (rho, rho), the Casimir scalar on V_lam."""
    if len(lam) != rs.l:
        raise ValueError(f"weight length must be {rs.l}")
    # equals (lam, lam + 2 rho)
    return Fraction(rs.ip_scaled(lam, wadd(lam, wscale(2, rs.rho))), rs.scale)


def weyl_dim(rs: RootSystem, lam: Weight) -> int:
    """Dimension of the irreducible module with highest weight lam."""
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    lam_rho = wadd(lam, rs.rho)
    dim = Fraction(1)
    for gvec in rs._pos_gvec:
        num = sum(x * g for x, g in zip(lam_rho, gvec))
        den = sum(x * g for x, g in zip(rs.rho, gvec))
        dim *= Fraction(num, den)
    assert dim.denominator == 1 and dim > 0
    return int(dim)


def simple_reflection(rs: RootSystem, i: int, lam: Weight) -> Weight:
    """Reflect lam in the hyperplane of the i-th simple root (0-based)."""
    if not 0 <= i < rs.l:
        raise IndexError(f"simple root index {i} out of range 0..{rs.l - 1}")
    coeff = lam[i]
    alpha = rs.simple_roots[i]
    return tuple(x - coeff * a for x, a in zip(lam, alpha))


def dominant_representative(rs: RootSystem, lam: Weight) -> Weight:
    """The unique dominant weight in the Weyl orbit of lam."""
    cur = lam
    while True:
        for i, x in enumerate(cur):
            if x < 0:
                alpha = rs.simple_roots[i]
                cur = tuple(v - x * a for v, a in zip(cur, alpha))
                break
        else:
            return cur


def weyl_orbit(rs: RootSystem, lam: Weight) -> frozenset[Weight]:
    """The full Weyl orbit of a weight."""
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            for i in range(rs.l):
                if w[i] != 0:
                    im = simple_reflection(rs, i, w)
                    if im not in seen:
                        seen.add(im)
                        nxt.append(im)
        frontier = nxt
    return frozenset(seen)


def simple_types_up_to(max_rank: int) -> list[CartanType]:
    """Canonical list of simple types with rank <= max_rank (C starts at C3)."""
    out = [CartanType("A", k) for k in range(1, max_rank + 1)]
    out += [CartanType("B", k) for k in range(2, max_rank + 1)]
    out += [CartanType("C", k) for k in range(3, max_rank + 1)]
    out += [CartanType("D", k) for k in range(4, max_rank + 1)]
    out += [CartanType("E", k) for k in range(6, min(max_rank, 8) + 1)]
    if max_rank >= 4:
        out.append(CartanType("F", 4))
    if max_rank >= 2:
        out.append(CartanType("G", 2))
    return out
