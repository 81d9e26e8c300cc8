"""The positive-root poset and the upper sets that form ideals of the Borel.

A subset of the positive roots spans an ideal of b contained in the nilradical
exactly when it is an upper set of the root poset (closed under adding simple
roots whenever the sum is again a root). Ideals are represented as frozensets
of indices into the canonically sorted positive-root list.
"""

from __future__ import annotations

from functools import lru_cache

from .root_system import RootSystem, Weight, wadd

NilIdeal = frozenset[int]


class RootPoset:
    """Positive roots ordered by "difference is a nonnegative root sum"."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        index = {rc: t for t, rc in enumerate(rs.positive_root_coords)}
        self._index = index
        l = rs.l
        covers: list[list[int]] = []
        for rc in rs.positive_root_coords:
            ups = []
            for i in range(l):
                cand = tuple(c + (1 if j == i else 0) for j, c in enumerate(rc))
                t = index.get(cand)
                if t is not None:
                    ups.append(t)
            covers.append(sorted(ups))
        self.covers_up = tuple(tuple(c) for c in covers)
        self.simple_indices = tuple(
            index[tuple(1 if j == i else 0 for j in range(l))] for i in range(l)
        )

    def le(self, a: int, b: int) -> bool:
        """a <= b iff root b minus root a has nonnegative integer coordinates."""
        ra = self.rs.positive_root_coords[a]
        rb = self.rs.positive_root_coords[b]
        return all(y >= x for x, y in zip(ra, rb))

    def cover_pairs(self) -> list[tuple[int, int]]:
        return [(a, b) for a, ups in enumerate(self.covers_up) for b in ups]

    @property
    def size(self) -> int:
        return self.rs.r


@lru_cache(maxsize=None)
def root_poset(rs: RootSystem) -> RootPoset:
    return RootPoset(rs)


@lru_cache(maxsize=None)
def _all_ideals(rs: RootSystem) -> tuple[NilIdeal, ...]:
    """Every upper set, by include/exclude descent over a linear extension.

    Roots are visited from the highest down, so an element may be included
    exactly when all of its upward covers already are.
    """
    poset = root_poset(rs)
    r = rs.r
    order = list(range(r - 1, -1, -1))  # descending (height, coords)
    out: list[NilIdeal] = []
    chosen: set[int] = set()

    def descend(pos: int) -> None:
        if pos == r:
            out.append(frozenset(chosen))
            return
        e = order[pos]
        if all(u in chosen for u in poset.covers_up[e]):
            chosen.add(e)
            descend(pos + 1)
            chosen.remove(e)
        descend(pos + 1)

    descend(0)
    key = lambda ideal: tuple(1 if t in ideal else 0 for t in range(r))
    return tuple(sorted(out, key=key))


def enumerate_ideals(rs: RootSystem, size: int | None = None) -> list[NilIdeal]:
    """All ideals, or only those of the given size, sorted by membership vector."""
    if size is not None and not 0 <= size <= rs.r:
        raise ValueError(f"ideal size {size} out of range 0..{rs.r}")
    ideals = _all_ideals(rs)
    if size is None:
        return list(ideals)
    return [i for i in ideals if len(i) == size]


def ideal_weight_sum(rs: RootSystem, ideal: NilIdeal) -> Weight:
    """Sum of the member roots, as a weight."""
    total = (0,) * rs.l
    for t in ideal:
        total = wadd(total, rs.positive_roots[t])
    return total


def verify_weight_sum_injectivity(rs: RootSystem) -> bool:
    """True iff distinct ideals always have distinct weight sums."""
    seen: set[Weight] = set()
    for ideal in _all_ideals(rs):
        s = ideal_weight_sum(rs, ideal)
        if s in seen:
            return False
        seen.add(s)
    return True


Label = tuple[str, int]


def is_b_normal(rs: RootSystem, labels) -> bool:
    """Whether the span of the labelled basis vectors is stable under the Borel.

    Labels name weight vectors of g: ("x", t) and ("y", t) for the root
    vectors of the t-th positive root and its negative, ("h", j) for the j-th
    Cartan basis vector. Stability under the Cartan action is automatic;
    stability under the raising generators reduces to root arithmetic:

    - x-part closed under adding simple roots (within the positive roots);
    - for a y-label at root gamma and simple alpha with gamma - alpha still a
      positive root, the y-label at gamma - alpha must be present;
    - a y-label at a simple root brackets into the Cartan, which (for an
      arbitrary Cartan basis) demands every h-label;
    - any h-label brackets onto every simple x, so all simple x-labels must
      be present.
    """
    poset = root_poset(rs)
    index = poset._index
    xs: set[int] = set()
    ys: set[int] = set()
    hs: set[int] = set()
    for label in labels:
        try:
            kind, t = label
        except (TypeError, ValueError):
            raise ValueError(f"bad label {label!r}; expected (kind, index)")
        if kind == "x" and 0 <= t < rs.r:
            xs.add(t)
        elif kind == "y" and 0 <= t < rs.r:
            ys.add(t)
        elif kind == "h" and 0 <= t < rs.l:
            hs.add(t)
        else:
            raise ValueError(f"unknown label {label!r}")

    for t in xs:
        if any(u not in xs for u in poset.covers_up[t]):
            return False
    for t in ys:
        rc = rs.positive_root_coords[t]
        if sum(rc) == 1:
            if len(hs) != rs.l:
                return False
        for i in range(rs.l):
            down = tuple(c - (1 if j == i else 0) for j, c in enumerate(rc))
            if min(down) >= 0:
                u = index.get(down)
                if u is not None and u not in ys:
                    return False
    if hs and any(s not in xs for s in poset.simple_indices):
        return False
    return True
