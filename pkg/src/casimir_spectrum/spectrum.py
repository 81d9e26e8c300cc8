"""Maximal Casimir eigenvalues on exterior powers, by three routes.

Degree by degree, the maximum of the Casimir scalar over the relevant weights
is computed by exhaustive subset search (branch and bound over the weight
basis of g), by enumeration of the upper-set ideals of the positive-root
poset, and by decomposing the exterior-power character into irreducibles.
Any disagreement aborts: the three answers are theorems apart, so divergence
means a bug, never data.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .characters import (
    DEFAULT_BUDGET,
    decompose_character,
    exterior_power_character,
    full_exterior_character,
    irreducible_character,
    tensor_character,
)
from .errors import BudgetExceeded, StrategyDisagreement
from .ideals import (
    NilIdeal,
    enumerate_ideals,
    ideal_weight_sum,
    is_b_normal,
    verify_weight_sum_injectivity,
)
from .root_system import (
    RootSystem,
    Weight,
    casimir_eigenvalue,
    wadd,
    weyl_dim,
    wneg,
    wscale,
)

BRUTE = "BRUTE"
IDEAL = "IDEAL"
CHARACTER = "CHARACTER"
DUALITY = "DUALITY"
STRATEGY_ORDER = (BRUTE, IDEAL, CHARACTER, DUALITY)

Label = tuple[str, int]
Components = tuple[tuple[Weight, int], ...]


def basis_weight_labels(rs: RootSystem) -> list[tuple[Label, Weight]]:
    """Labelled weight basis of g: x/y per positive root, h per Cartan slot."""
    zero = (0,) * rs.l
    out: list[tuple[Label, Weight]] = []
    out += [(("x", t), alpha) for t, alpha in enumerate(rs.positive_roots)]
    out += [(("y", t), wneg(alpha)) for t, alpha in enumerate(rs.positive_roots)]
    out += [(("h", j), zero) for j in range(rs.l)]
    return out


@dataclass(frozen=True)
class SpectrumRow:
    i: int
    m: Fraction
    components: Components  # sorted (highest weight, multiplicity) pairs
    dim: int
    strategies: frozenset[str]


@dataclass(frozen=True)
class CheckResult:
    id: str
    description: str
    passed: bool
    details: str


@dataclass(frozen=True)
class VerificationReport:
    cartan_type: str
    n: int
    r: int
    l: int
    budget: int
    observed_p: int
    checks: tuple[CheckResult, ...]
    all_passed: bool


# ---------------------------------------------------------------------------
# strategy 1: exhaustive subset search with branch and bound
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def mi_bruteforce(
    rs: RootSystem, i: int, budget: int = DEFAULT_BUDGET
) -> tuple[Fraction, tuple[tuple[Label, ...], ...]]:
    """Exact max of Cas(sum) over all i-subsets of the weight basis of g.

    Returns the maximum and every label subset attaining it. Candidates are
    ordered by decreasing (rho, gamma); subtrees are pruned only when a valid
    upper bound falls strictly below the incumbent, so ties are never lost.
    The bound uses that any subset sum is a weight of V_{2 rho}, hence has
    squared norm at most (2rho, 2rho) = n/6 and Casimir value at most n/3.
    """
    n = rs.n
    if not 0 <= i <= n:
        raise ValueError(f"degree {i} out of range 0..{n}")
    if math.comb(n, i) > budget:
        raise BudgetExceeded(
            f"C({n},{i}) = {math.comb(n, i)} exceeds budget {budget}; "
            f"use mi_via_ideals for this degree"
        )
    if i == 0:
        return Fraction(0), ((),)

    scale = rs.scale
    l = rs.l
    gram = rs._int_gram

    entries = basis_weight_labels(rs)
    rdot = {lab: rs.ip_scaled(rs.rho, w) for lab, w in entries}
    entries.sort(key=lambda lw: (-rdot[lw[0]], lw[0]))
    labels = [lab for lab, _ in entries]
    funds = [w for _, w in entries]
    count = len(entries)

    gvecs = [tuple(sum(gram[a][b] * w[b] for b in range(l)) for a in range(l)) for w in funds]
    self2 = [rs.ip_scaled(w, w) for w in funds]
    rdots = [rdot[lab] for lab in labels]
    cum = [0]
    for v in rdots:
        cum.append(cum[-1] + v)

    # suffix aggregates for "take everything that remains" leaves
    suf_f = [(0,) * l] * (count + 1)
    for pos in range(count - 1, -1, -1):
        suf_f[pos] = wadd(suf_f[pos + 1], funds[pos])
    suf_gvec = [
        tuple(sum(gram[a][b] * sf[b] for b in range(l)) for a in range(l)) for sf in suf_f
    ]
    suf_quad = [rs.ip_scaled(sf, sf) for sf in suf_f]
    suf_rdot = [cum[count] - cum[pos] for pos in range(count + 1)]

    n3s = rs.n * scale // 3
    n6s = rs.n * scale // 6

    best: list[int | None] = [None]
    argmax: list[tuple[Label, ...]] = []
    sig = [0] * l
    stack: list[Label] = []

    def record(val: int, subset: tuple[Label, ...]) -> None:
        if best[0] is None or val > best[0]:
            best[0] = val
            argmax.clear()
            argmax.append(subset)
        elif val == best[0]:
            argmax.append(subset)

    def descend(pos: int, need: int, quad: int, rho_part: int) -> None:
        if need == 0:
            record(quad + 2 * rho_part, tuple(stack))
            return
        rem = count - pos
        if need > rem:
            return
        if need == rem:
            cross = sum(sig[a] * suf_gvec[pos][a] for a in range(l))
            val = quad + 2 * cross + suf_quad[pos] + 2 * (rho_part + suf_rdot[pos])
            record(val, tuple(stack) + tuple(labels[pos:]))
            return
        bound = n6s + 2 * rho_part + 2 * (cum[pos + need] - cum[pos])
        if bound > n3s:
            bound = n3s
        if best[0] is not None and bound < best[0]:
            return
        # include entries[pos]
        g = gvecs[pos]
        dot = sum(sig[a] * g[a] for a in range(l))
        f = funds[pos]
        for a in range(l):
            sig[a] += f[a]
        stack.append(labels[pos])
        descend(pos + 1, need - 1, quad + 2 * dot + self2[pos], rho_part + rdots[pos])
        stack.pop()
        for a in range(l):
            sig[a] -= f[a]
        descend(pos + 1, need, quad, rho_part)

    descend(0, i, 0, 0)
    assert best[0] is not None
    subsets = tuple(sorted(tuple(sorted(s)) for s in argmax))
    return Fraction(best[0], scale), subsets


# ---------------------------------------------------------------------------
# strategy 2: ideal enumeration
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def mi_via_ideals(rs: RootSystem, i: int) -> tuple[Fraction, tuple[NilIdeal, ...]]:
    """Max of Cas over weight sums of size-i upper-set ideals, with argmax."""
    if not 0 <= i <= rs.r:
        raise ValueError(f"ideal size {i} out of range 0..{rs.r}")
    best: Fraction | None = None
    winners: list[NilIdeal] = []
    for ideal in enumerate_ideals(rs, i):
        val = casimir_eigenvalue(rs, ideal_weight_sum(rs, ideal))
        if best is None or val > best:
            best = val
            winners = [ideal]
        elif val == best:
            winners.append(ideal)
    assert best is not None
    key = lambda ideal: tuple(1 if t in ideal else 0 for t in range(rs.r))
    return best, tuple(sorted(winners, key=key))


# ---------------------------------------------------------------------------
# strategy 3: character decomposition
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def decompose_exterior(rs: RootSystem, i: int, budget: int = DEFAULT_BUDGET) -> Components:
    """Full decomposition of the i-th exterior power of g into irreducibles."""
    chi = exterior_power_character(rs, i, budget)
    parts = decompose_character(rs, chi)
    return tuple(sorted(parts.items()))


@lru_cache(maxsize=None)
def mi_via_characters(
    rs: RootSystem, i: int, budget: int = DEFAULT_BUDGET
) -> tuple[Fraction, Components]:
    """Max Casimir value across the components of the i-th exterior power."""
    parts = decompose_exterior(rs, i, budget)
    values = {w: casimir_eigenvalue(rs, w) for w, _ in parts}
    m = max(values.values())
    top = tuple((w, mult) for w, mult in parts if values[w] == m)
    return m, top


# ---------------------------------------------------------------------------
# assembled table and theorem verification
# ---------------------------------------------------------------------------


def _ideal_components(rs: RootSystem, ideals: tuple[NilIdeal, ...]) -> Components:
    weights = sorted(ideal_weight_sum(rs, ideal) for ideal in ideals)
    assert len(set(weights)) == len(weights), "achieving ideals have distinct weight sums"
    return tuple((w, 1) for w in weights)


@lru_cache(maxsize=None)
def spectrum_table(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> tuple[SpectrumRow, ...]:
    """Rows i = 0..n: degrees up to r from the independent strategies, the
    n/3 plateau across degrees r..r+l, and the mirror rows by duality."""
    n, r, l = rs.n, rs.r, rs.l
    two_rho = wscale(2, rs.rho)
    n_third = Fraction(n, 3)
    rows: list[SpectrumRow] = []

    for i in range(r + 1):
        m, ideals = mi_via_ideals(rs, i)
        components = _ideal_components(rs, ideals)
        strategies = {IDEAL}
        in_budget = math.comb(n, i) <= budget
        if in_budget:
            mb, subsets = mi_bruteforce(rs, i, budget)
            sums = sorted({_subset_sum(rs, s) for s in subsets})
            if mb != m or sums != [w for w, _ in components]:
                raise StrategyDisagreement(
                    f"{rs.cartan_type} degree {i}: exhaustive search gave "
                    f"m={mb}, weights {sums}; ideal enumeration gave m={m}, "
                    f"weights {[w for w, _ in components]}"
                )
            strategies.add(BRUTE)
        if in_budget:
            mc, comps = mi_via_characters(rs, i, budget)
            if mc != m or comps != components:
                raise StrategyDisagreement(
                    f"{rs.cartan_type} degree {i}: character decomposition gave "
                    f"m={mc}, components {comps}; ideal enumeration gave m={m}, "
                    f"components {components}"
                )
            strategies.add(CHARACTER)
        dim = sum(mult * weyl_dim(rs, w) for w, mult in components)
        rows.append(SpectrumRow(i, m, components, dim, frozenset(strategies)))

    if rows[r].m != n_third or rows[r].components != ((two_rho, 1),):
        raise StrategyDisagreement(
            f"{rs.cartan_type} degree {r}: expected the full positive-root ideal "
            f"to reach m={n_third} at weight {two_rho}, got m={rows[r].m}, "
            f"components {rows[r].components}"
        )

    dim_two_rho = weyl_dim(rs, two_rho)
    for s in range(1, l + 1):
        i = r + s
        components: Components = ((two_rho, math.comb(l, s)),)
        strategies = {IDEAL}
        if math.comb(n, i) <= budget:
            mc, comps = mi_via_characters(rs, i, budget)
            if mc != n_third or comps != components:
                raise StrategyDisagreement(
                    f"{rs.cartan_type} degree {i}: character decomposition gave "
                    f"m={mc}, components {comps}; expected m={n_third}, "
                    f"components {components}"
                )
            strategies.add(CHARACTER)
        rows.append(
            SpectrumRow(i, n_third, components, math.comb(l, s) * dim_two_rho, frozenset(strategies))
        )

    for i in range(r + l + 1, n + 1):
        mirror = rows[n - i]
        rows.append(SpectrumRow(i, mirror.m, mirror.components, mirror.dim, frozenset({DUALITY})))
    return tuple(rows)


@lru_cache(maxsize=None)
def _label_weights(rs: RootSystem) -> dict[Label, Weight]:
    return dict(basis_weight_labels(rs))


def _subset_sum(rs: RootSystem, subset: tuple[Label, ...]) -> Weight:
    by_label = _label_weights(rs)
    total = (0,) * rs.l
    for lab in subset:
        total = wadd(total, by_label[lab])
    return total


def observed_commutative_bound(rows: tuple[SpectrumRow, ...]) -> int:
    """Largest degree i with m_i = i (observed, not derived from theory)."""
    return max(row.i for row in rows if row.m == row.i)


def verify_theorems(rs: RootSystem, budget: int = DEFAULT_BUDGET) -> VerificationReport:
    """Machine-check every structural claim about the spectrum for one type.

    Failures are report entries, never exceptions.
    """
    n, r, l = rs.n, rs.r, rs.l
    n_third = Fraction(n, 3)
    two_rho = wscale(2, rs.rho)
    checks: list[CheckResult] = []

    def add(check_id: str, description: str, passed: bool, details: str = "") -> None:
        checks.append(CheckResult(check_id, description, passed, details))

    try:
        rows = spectrum_table(rs, budget)
    except StrategyDisagreement as exc:
        add(
            "strategy_agreement",
            "independent strategies agree on every computed degree",
            False,
            str(exc),
        )
        return VerificationReport(str(rs.cartan_type), n, r, l, budget, -1, tuple(checks), False)

    per_strategy = {
        s: [row.i for row in rows if s in row.strategies] for s in STRATEGY_ORDER
    }
    add(
        "strategy_agreement",
        "independent strategies agree on every computed degree",
        True,
        "; ".join(f"{s}: degrees {_span(v)}" for s, v in per_strategy.items() if v),
    )

    worst = max(rows, key=lambda row: row.m)
    add(
        "casimir_bound",
        "the max Casimir eigenvalue in every degree is at most dim(g)/3",
        all(row.m <= n_third for row in rows),
        f"max m = {worst.m} at degree {worst.i}; dim(g)/3 = {n_third}",
    )

    window = [row.i for row in rows if row.m == n_third]
    add(
        "plateau_window",
        "the value dim(g)/3 is attained exactly in degrees r..r+l",
        window == list(range(r, r + l + 1)),
        f"attained at degrees {window}, expected {list(range(r, r + l + 1))}",
    )

    plateau_checked, plateau_ok, plateau_notes = [], True, []
    for s in range(l + 1):
        i = r + s
        if math.comb(n, i) > budget:
            continue
        mb, subsets = mi_bruteforce(rs, i, budget)
        sums = {_subset_sum(rs, sub) for sub in subsets}
        ok = (
            mb == n_third
            and len(subsets) == math.comb(l, s)
            and sums == {two_rho}
            and all(is_b_normal(rs, sub) for sub in subsets)
        )
        plateau_ok &= ok
        plateau_checked.append(i)
        if not ok:
            plateau_notes.append(
                f"degree {i}: {len(subsets)} maximizers (want C({l},{s}) = "
                f"{math.comb(l, s)}), sums {sorted(sums)}"
            )
    add(
        "plateau_multiplicities",
        "degree r+s has exactly C(l,s) maximizing subsets, all summing to 2*rho "
        "and all spanning Borel-stable subspaces",
        plateau_ok,
        "; ".join(plateau_notes)
        or (f"checked degrees {plateau_checked}" if plateau_checked else "skipped: over budget"),
    )

    increasing = all(rows[i].m < rows[i + 1].m for i in range(r))
    add(
        "strict_increase",
        "the max eigenvalue strictly increases from degree 0 up to degree r",
        increasing,
        f"m_0..m_r = {[str(rows[i].m) for i in range(r + 1)]}",
    )

    dual_table = all(rows[i].m == rows[n - i].m for i in range(n + 1))
    dual_cross, cross_degrees = True, []
    for i in range(n // 2 + 1):
        if math.comb(n, i) > budget:
            continue
        low = mi_via_characters(rs, i, budget)
        high = mi_via_characters(rs, n - i, budget)
        dual_cross &= low == high
        cross_degrees.append(i)
    add(
        "duality",
        "degrees i and n-i carry the same maximum and isomorphic eigenspaces",
        dual_table and dual_cross,
        f"character cross-check at degrees {_span(cross_degrees)}"
        if cross_degrees
        else "table values only (character strategy over budget)",
    )

    mult_free = all(all(m == 1 for _, m in rows[i].components) for i in range(1, r + 1))
    add(
        "multiplicity_free_rows",
        "every top eigenspace in degrees 1..r is multiplicity-free",
        mult_free,
        "",
    )

    all_weights = [w for i in range(r + 1) for w, _ in rows[i].components]
    add(
        "multiplicity_free_sum",
        "the top eigenspaces of degrees 0..r have pairwise distinct highest weights",
        len(set(all_weights)) == len(all_weights),
        f"{len(all_weights)} highest weights across degrees 0..{r}",
    )

    add(
        "weight_sum_injectivity",
        "distinct ideals of the positive-root poset have distinct weight sums",
        verify_weight_sum_injectivity(rs),
        f"{len(enumerate_ideals(rs))} ideals",
    )

    observed_p = observed_commutative_bound(rows)
    kostant_ok = all(rows[i].m <= i for i in range(n + 1)) and all(
        rows[i].m == i for i in range(observed_p + 1)
    )
    add(
        "kostant_consistency",
        "m_i <= i everywhere, with equality up to the observed threshold",
        kostant_ok,
        f"observed_p = {observed_p}",
    )

    if 2**n <= budget:
        lhs = full_exterior_character(rs, budget)
        chi_rho = irreducible_character(rs, rs.rho)
        rhs = tensor_character(chi_rho, chi_rho).scaled(2**l)
        add(
            "wedge_tensor_identity",
            "the exterior-algebra character equals 2^l times the tensor square "
            "of the character at rho",
            lhs == rhs,
            f"mass {lhs.mass} = 2^{n}",
        )
    else:
        add(
            "wedge_tensor_identity",
            "the exterior-algebra character equals 2^l times the tensor square "
            "of the character at rho",
            True,
            f"skipped: 2^{n} exceeds budget {budget}",
        )

    corr_ok, corr_degrees = True, []
    for i in range(1, r + 1):
        if math.comb(n, i) > budget:
            continue
        _, subsets = mi_bruteforce(rs, i, budget)
        _, ideals = mi_via_ideals(rs, i)
        as_ideals = set()
        for sub in subsets:
            if any(kind != "x" for kind, _ in sub):
                corr_ok = False
                break
            as_ideals.add(frozenset(t for _, t in sub))
        corr_ok &= as_ideals == set(ideals)
        corr_ok &= all(is_b_normal(rs, sub) for sub in subsets)
        corr_degrees.append(i)
    add(
        "argmax_ideal_correspondence",
        "in degrees 1..r the exhaustive maximizers are exactly the achieving "
        "ideals, and every maximizer spans a Borel-stable subspace",
        corr_ok,
        f"checked degrees {_span(corr_degrees)}" if corr_degrees else "skipped: over budget",
    )

    all_passed = all(c.passed for c in checks)
    return VerificationReport(
        str(rs.cartan_type), n, r, l, budget, observed_p, tuple(checks), all_passed
    )


def _span(degrees: list[int]) -> str:
    if not degrees:
        return "none"
    lo, hi = min(degrees), max(degrees)
    if degrees == list(range(lo, hi + 1)):
        return f"{lo}..{hi}"
    return ",".join(map(str, degrees))


# ---------------------------------------------------------------------------
# JSON shapes
# ---------------------------------------------------------------------------


def fmt_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def row_to_json(rs: RootSystem, row: SpectrumRow) -> dict:
    return {
        "i": row.i,
        "m": fmt_rational(row.m),
        "components": [
            {"weight": list(w), "mult": mult, "dim": weyl_dim(rs, w)}
            for w, mult in row.components
        ],
        "dim": row.dim,
        "strategies": [s for s in STRATEGY_ORDER if s in row.strategies],
    }


def report_to_json(report: VerificationReport) -> dict:
    return {
        "type": report.cartan_type,
        "n": report.n,
        "r": report.r,
        "l": report.l,
        "budget": report.budget,
        "observed_p": report.observed_p,
        "all_passed": report.all_passed,
        "checks": [
            {
                "id": c.id,
                "description": c.description,
                "passed": c.passed,
                "details": c.details,
            }
            for c in report.checks
        ],
    }
