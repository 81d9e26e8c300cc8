"""Exact character calculus on the weight lattice.

Weight multiplicities come from the Freudenthal recursion evaluated on the
dominant chamber only and spread over Weyl orbits. The character of a module
with highest weight k*rho has an independent second construction as a product
of box characters over the positive roots, and exterior powers of the adjoint
module are elementary symmetric characters of its weight multiset. A greedy
highest-weight peeling decomposes any genuine module character.
"""

from __future__ import annotations

import math
import threading
from collections import defaultdict
from .errors import BudgetExceeded, MismatchedRootSystems, NotModuleCharacter
from .root_system import (
    RootSystem,
    Weight,
    dominant_representative,
    wadd,
    weyl_dim,
    wneg,
    wscale,
    wsub,
)

DEFAULT_BUDGET = 10_000_000


class Character:
    """A finite Weyl-invariant multiset of weights with multiplicities."""

    __slots__ = ("rs", "entries")

    def __init__(self, rs: RootSystem, entries: dict[Weight, int]):
        self.rs = rs
        self.entries = {w: m for w, m in entries.items() if m != 0}
        assert all(m > 0 for m in self.entries.values()), "multiplicities are positive"

    @property
    def mass(self) -> int:
        return sum(self.entries.values())

    def multiplicity(self, w: Weight) -> int:
        return self.entries.get(w, 0)

    def sorted_entries(self) -> list[tuple[Weight, int]]:
        return sorted(self.entries.items())

    def scaled(self, k: int) -> "Character":
        return Character(self.rs, {w: k * m for w, m in self.entries.items()})

    def negated(self) -> "Character":
        return Character(self.rs, {wneg(w): m for w, m in self.entries.items()})

    def __add__(self, other: "Character") -> "Character":
        if other.rs != self.rs:
            raise MismatchedRootSystems("cannot add characters over different root systems")
        out = dict(self.entries)
        for w, m in other.entries.items():
            out[w] = out.get(w, 0) + m
        return Character(self.rs, out)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Character)
            and other.rs == self.rs
            and other.entries == self.entries
        )

    def __hash__(self) -> int:
        return hash((self.rs.cartan_type, tuple(self.sorted_entries())))

    def __repr__(self) -> str:
        return f"Character({self.rs.cartan_type}, {len(self.entries)} weights, mass {self.mass})"


def tensor_character(chi1: Character, chi2: Character) -> Character:
    """Convolution of two weight maps (character of the tensor product)."""
    if chi1.rs != chi2.rs:
        raise MismatchedRootSystems("cannot tensor characters over different root systems")
    out: dict[Weight, int] = defaultdict(int)
    for w1, m1 in chi1.entries.items():
        for w2, m2 in chi2.entries.items():
            out[wadd(w1, w2)] += m1 * m2
    return Character(chi1.rs, dict(out))


# ---------------------------------------------------------------------------
# Freudenthal multiplicities
# ---------------------------------------------------------------------------

_char_lock = threading.Lock()
_char_cache: dict[tuple[object, Weight], Character] = {}
_disk_cache = None


def set_disk_cache(store) -> None:
    """Install (or clear, with None) a persistent store for irreducible characters.

    The store needs `load(cartan_type, lam) -> dict | None` and
    `save(cartan_type, lam, entries)`. The in-memory cache is reset so the new
    layering takes effect immediately.
    """
    global _disk_cache
    with _char_lock:
        _disk_cache = store
        _char_cache.clear()


def _freudenthal_character(rs: RootSystem, lam: Weight) -> dict[Weight, int]:
    """All weights of V_lam with multiplicities, by lowering level by level.

    Multiplicities are evaluated only at dominant weights; every other weight
    copies the value at its dominant representative. A weight nu at depth d
    (the height of lam - nu) only ever refers to weights at depth < d, so one
    sweep in increasing depth needs no recursion.
    """
    l = rs.l
    pos = list(zip(rs.positive_roots, rs.positive_root_coords))
    rho = rs.rho
    cas_lam = rs.ip_scaled(wadd(lam, rho), wadd(lam, rho))

    entries: dict[Weight, int] = {lam: 1}
    dom: dict[Weight, int] = {lam: 1}
    # frontier maps weight -> root coordinates of lam - weight (integers)
    frontier: dict[Weight, tuple[int, ...]] = {lam: (0,) * l}
    while frontier:
        candidates: dict[Weight, tuple[int, ...]] = {}
        for mu, d in frontier.items():
            for i in range(l):
                nu = wsub(mu, rs.simple_roots[i])
                if nu in entries or nu in candidates:
                    continue
                candidates[nu] = tuple(d[j] + (1 if j == i else 0) for j in range(l))
        nxt: dict[Weight, tuple[int, ...]] = {}
        for nu, dnu in candidates.items():
            plus = dominant_representative(rs, nu)
            if plus == nu:
                m = _freudenthal_eval(rs, lam, nu, dnu, entries, cas_lam, pos)
                if m == 0:
                    continue
                dom[nu] = m
            else:
                m = dom.get(plus, 0)
                if m == 0:
                    continue
            entries[nu] = m
            nxt[nu] = dnu
        frontier = nxt
    assert sum(entries.values()) == weyl_dim(rs, lam), "total mass must match the Weyl dimension"
    return entries


def _freudenthal_eval(
    rs: RootSystem,
    lam: Weight,
    mu: Weight,
    delta_rc: tuple[int, ...],
    entries: dict[Weight, int],
    cas_lam: int,
    pos: list[tuple[Weight, tuple[int, ...]]],
) -> int:
    """One multiplicity at a dominant weight mu from already-known higher ones."""
    total = 0
    for alpha, alpha_rc in pos:
        d = delta_rc
        w = mu
        while True:
            d = tuple(x - y for x, y in zip(d, alpha_rc))
            if min(d) < 0:
                break
            w = wadd(w, alpha)
            m = entries.get(w, 0)
            if m:
                total += m * rs.ip_scaled(w, alpha)
    mu_rho = wadd(mu, rs.rho)
    denom = cas_lam - rs.ip_scaled(mu_rho, mu_rho)
    assert denom > 0, "dominant non-highest weights sit strictly below the Casimir value of lam"
    num = 2 * total
    assert num % denom == 0, "Freudenthal multiplicities are integers"
    return num // denom


def irreducible_character(rs: RootSystem, lam: Weight) -> Character:
    """The character of the irreducible module with highest weight lam."""
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    key = (rs.cartan_type, lam)
    with _char_lock:
        hit = _char_cache.get(key)
    if hit is not None:
        return hit
    store = _disk_cache
    entries = store.load(rs.cartan_type, lam) if store is not None else None
    if entries is None:
        entries = _freudenthal_character(rs, lam)
        if store is not None:
            store.save(rs.cartan_type, lam, entries)
    chi = Character(rs, entries)
    with _char_lock:
        _char_cache[key] = chi
    return chi


def freudenthal_multiplicity(rs: RootSystem, lam: Weight, mu: Weight) -> int:
    """Multiplicity of the weight mu in V_lam (0 when mu lies outside)."""
    if not rs.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    delta = rs.root_coords(wsub(lam, mu))
    if any(c.denominator != 1 or c < 0 for c in delta):
        return 0
    return irreducible_character(rs, lam).multiplicity(mu)


# ---------------------------------------------------------------------------
# box character of V_{k rho}
# ---------------------------------------------------------------------------


def krho_box_character(rs: RootSystem, k: int) -> Character:
    """Character of V_{k rho} built as a product of root strings.

    Multiplies out, over the positive roots alpha, the geometric strings
    e^0 + e^{-alpha} + ... + e^{-k alpha} starting from the weight k*rho.
    The multiplicity at nu counts the integer tuples (c_1..c_r) in [0,k]^r
    with k*rho - sum c_i alpha_i = nu. Never consults the Freudenthal side.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    cur: dict[Weight, int] = {wscale(k, rs.rho): 1}
    for alpha in rs.positive_roots:
        nxt: dict[Weight, int] = defaultdict(int)
        for w, c in cur.items():
            v = w
            for _ in range(k + 1):
                nxt[v] += c
                v = wsub(v, alpha)
        cur = dict(nxt)
    chi = Character(rs, cur)
    assert chi.mass == (k + 1) ** rs.r
    return chi


# ---------------------------------------------------------------------------
# exterior powers of the adjoint module
# ---------------------------------------------------------------------------


def adjoint_weight_multiset(rs: RootSystem) -> list[Weight]:
    """The n weights of g: every root once, plus the zero weight l times."""
    zero = (0,) * rs.l
    out = list(rs.positive_roots)
    out += [wneg(a) for a in rs.positive_roots]
    out += [zero] * rs.l
    return out


_ext_lock = threading.Lock()
_ext_cache: dict[object, list[dict[Weight, int]]] = {}


def _exterior_rows(rs: RootSystem, imax: int) -> list[dict[Weight, int]]:
    """Elementary symmetric characters e_0..e_imax of the adjoint weights."""
    with _ext_lock:
        rows = _ext_cache.get(rs.cartan_type)
        if rows is not None and len(rows) > imax:
            return rows
    basis = adjoint_weight_multiset(rs)
    zero = (0,) * rs.l
    rows = [dict() for _ in range(imax + 1)]
    rows[0][zero] = 1
    for t, gamma in enumerate(basis):
        for j in range(min(t + 1, imax), 0, -1):
            lower = rows[j - 1]
            row = rows[j]
            for w, c in lower.items():
                key = wadd(w, gamma)
                row[key] = row.get(key, 0) + c
    for j in range(imax + 1):
        assert sum(rows[j].values()) == math.comb(rs.n, j)
    with _ext_lock:
        _ext_cache[rs.cartan_type] = rows
    return rows


def exterior_power_character(rs: RootSystem, i: int, budget: int = DEFAULT_BUDGET) -> Character:
    """Character of the i-th exterior power of the adjoint module.

    Degrees above n/2 are evaluated through complementary subsets (the weights
    of g sum to zero, so degree i is the negation of degree n-i), which keeps
    the work bounded by the reported C(n, i).
    """
    n = rs.n
    if not 0 <= i <= n:
        raise ValueError(f"exterior degree {i} out of range 0..{n}")
    if math.comb(n, i) > budget:
        raise BudgetExceeded(
            f"C({n},{i}) = {math.comb(n, i)} exceeds budget {budget}; "
            f"use the ideal-based strategy for this degree"
        )
    j = min(i, n - i)
    row = _exterior_rows(rs, j)[j]
    if i == j:
        return Character(rs, row)
    return Character(rs, {wneg(w): c for w, c in row.items()})


def full_exterior_character(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> Character:
    """Character of the whole exterior algebra: product of (1 + e^gamma)."""
    if 2 ** rs.n > budget:
        raise BudgetExceeded(f"2^{rs.n} exceeds budget {budget}")
    cur: dict[Weight, int] = {(0,) * rs.l: 1}
    for gamma in adjoint_weight_multiset(rs):
        nxt = dict(cur)
        for w, c in cur.items():
            key = wadd(w, gamma)
            nxt[key] = nxt.get(key, 0) + c
        cur = nxt
    chi = Character(rs, cur)
    assert chi.mass == 2 ** rs.n
    return chi


# ---------------------------------------------------------------------------
# decomposition into irreducibles
# ---------------------------------------------------------------------------


def decompose_character(rs: RootSystem, chi: Character) -> dict[Weight, int]:
    """Decompose a module character by greedy highest-weight peeling.

    Repeatedly picks the dominant weight of maximal height (ties broken by
    the lexicographically largest coordinates) with nonzero residual
    multiplicity and subtracts that multiple of its irreducible character.
    Raises NotModuleCharacter when any subtraction would go negative.
    """
    if chi.rs != rs:
        raise MismatchedRootSystems("character belongs to a different root system")
    residual = dict(chi.entries)
    out: dict[Weight, int] = {}
    while residual:
        best = None
        for w in residual:
            if rs.is_dominant(w):
                key = (rs.height(w), w)
                if best is None or key > best[0]:
                    best = (key, w)
        if best is None:
            raise NotModuleCharacter(
                "nonzero residual without a dominant weight; not a module character"
            )
        lam = best[1]
        mult = residual[lam]
        if mult < 0:
            raise NotModuleCharacter(f"negative residual multiplicity at {lam}")
        for w, m in irreducible_character(rs, lam).entries.items():
            left = residual.get(w, 0) - mult * m
            if left < 0:
                raise NotModuleCharacter(f"subtraction went negative at weight {w}")
            if left == 0:
                residual.pop(w, None)
            else:
                residual[w] = left
        out[lam] = out.get(lam, 0) + mult
    return out


def decomposition_dimension(rs: RootSystem, components: dict[Weight, int]) -> int:
    return sum(m * weyl_dim(rs, w) for w, m in components.items())


# ---------------------------------------------------------------------------
# serialization (cache payload format)
# ---------------------------------------------------------------------------


def entries_to_payload(cartan_type, lam: Weight, entries: dict[Weight, int]) -> dict:
    return {
        "type": str(cartan_type),
        "lambda": list(lam),
        "entries": [[list(w), m] for w, m in sorted(entries.items())],
    }


def entries_from_payload(payload: dict, cartan_type, lam: Weight) -> dict[Weight, int] | None:
    """Decode a cache payload; None when it does not match the request."""
    if not isinstance(payload, dict):
        return None
    if payload.get("type") != str(cartan_type) or payload.get("lambda") != list(lam):
        return None
    raw = payload.get("entries")
    if not isinstance(raw, list):
        return None
    out: dict[Weight, int] = {}
    for item in raw:
        try:
            w, m = item
            out[tuple(int(x) for x in w)] = int(m)
        except (TypeError, ValueError):
            return None
    if any(m <= 0 for m in out.values()):
        return None
    return out
