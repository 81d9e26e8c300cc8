import json
import math
from fractions import Fraction

import pytest

from casimir_spectrum import (
    BudgetExceeded,
    build_root_system,
    basis_weight_labels,
    mi_bruteforce,
    mi_via_characters,
    mi_via_ideals,
    spectrum_table,
    verify_theorems,
)
from casimir_spectrum.root_system import wadd, wneg, wscale
from casimir_spectrum.spectrum import (
    DUALITY,
    STRATEGY_ORDER,
    fmt_rational,
    report_to_json,
    row_to_json,
)

from oracles import RANK3_TYPES, exhaustive_max_casimir

# frozen outputs of the plain exhaustive oracle (tests/oracles.py)
GOLDEN_M = {
    "A1": ["0", "1", "1", "0"],
    "A2": ["0", "1", "2", "8/3", "8/3", "8/3", "2", "1", "0"],
    "B2": ["0", "1", "2", "3", "10/3", "10/3", "10/3", "3", "2", "1", "0"],
}
GOLDEN_M_PREFIX = {
    "G2": ["0", "1", "2", "3", "15/4", "9/2", "14/3"],
    "A3": ["0", "1", "2", "3", "4", "9/2", "5"],
}
A2_DIMS = [1, 8, 20, 27, 54, 27, 20, 8, 1]


@pytest.mark.parametrize("name", RANK3_TYPES)
def test_basis_weight_multiset(name):
    rs = build_root_system(name)
    entries = basis_weight_labels(rs)
    assert len(entries) == rs.n
    total = (0,) * rs.l
    weights = []
    for _, w in entries:
        total = wadd(total, w)
        weights.append(w)
    assert total == (0,) * rs.l
    # negation-closed as a multiset
    assert sorted(weights) == sorted(wneg(w) for w in weights)


@pytest.mark.parametrize("name,degrees", [
    ("A1", range(4)), ("A2", range(9)), ("B2", range(11)),
    ("G2", range(7)), ("A3", range(7)),
])
def test_bruteforce_matches_plain_enumeration(name, degrees):
    rs = build_root_system(name)
    for i in degrees:
        want_m, want_subsets = exhaustive_max_casimir(rs, i)
        got_m, got_subsets = mi_bruteforce(rs, i)
        assert got_m == want_m, (name, i)
        assert got_subsets == want_subsets, (name, i)


def test_bruteforce_budget_guard():
    f4 = build_root_system("F4")
    with pytest.raises(BudgetExceeded) as err:
        mi_bruteforce(f4, 26)
    assert "mi_via_ideals" in str(err.value)


def test_mi_via_ideals_examples():
    a2 = build_root_system("A2")
    idx = {rc: t for t, rc in enumerate(a2.positive_root_coords)}
    theta, s1, s2 = idx[(1, 1)], idx[(1, 0)], idx[(0, 1)]
    m1, winners1 = mi_via_ideals(a2, 1)
    assert m1 == 1 and winners1 == (frozenset({theta}),)
    m2, winners2 = mi_via_ideals(a2, 2)
    assert m2 == 2
    assert set(winners2) == {frozenset({theta, s1}), frozenset({theta, s2})}
    for name in RANK3_TYPES + ["D4", "F4"]:
        rs = build_root_system(name)
        m, winners = mi_via_ideals(rs, rs.r)
        assert m == Fraction(rs.n, 3)
        assert winners == (frozenset(range(rs.r)),)


def test_mi_via_characters_examples():
    a1 = build_root_system("A1")
    assert mi_via_characters(a1, 1) == (Fraction(1), (((2,), 1),))
    a2 = build_root_system("A2")
    m4, comps4 = mi_via_characters(a2, 4)
    assert m4 == Fraction(8, 3) and comps4 == (((2, 2), 2),)
    m2, comps2 = mi_via_characters(a2, 2)
    assert m2 == 2 and comps2 == (((0, 3), 1), ((3, 0), 1))


@pytest.mark.parametrize("name", list(GOLDEN_M))
def test_spectrum_golden_tables(name):
    rs = build_root_system(name)
    rows = spectrum_table(rs)
    assert [fmt_rational(row.m) for row in rows] == GOLDEN_M[name]


@pytest.mark.parametrize("name", list(GOLDEN_M_PREFIX))
def test_spectrum_golden_prefixes(name):
    rs = build_root_system(name)
    rows = spectrum_table(rs)
    got = [fmt_rational(rows[i].m) for i in range(len(GOLDEN_M_PREFIX[name]))]
    assert got == GOLDEN_M_PREFIX[name]


def test_spectrum_a2_components_and_dims():
    a2 = build_root_system("A2")
    rows = spectrum_table(a2)
    assert [row.dim for row in rows] == A2_DIMS
    assert rows[2].components == (((0, 3), 1), ((3, 0), 1))
    assert rows[4].components == (((2, 2), 2),)
    assert rows[3].components == (((2, 2), 1),)
    # strategy sets: full agreement through r, duality above r+l
    for i in range(4):
        assert rows[i].strategies == frozenset({"BRUTE", "IDEAL", "CHARACTER"})
    assert rows[4].strategies == frozenset({"IDEAL", "CHARACTER"})
    for i in range(6, 9):
        assert rows[i].strategies == frozenset({DUALITY})


def test_row_json_wire_format():
    a2 = build_root_system("A2")
    rows = spectrum_table(a2)
    payload = row_to_json(a2, rows[4])
    assert payload == {
        "i": 4,
        "m": "8/3",
        "components": [{"weight": [2, 2], "mult": 2, "dim": 27}],
        "dim": 54,
        "strategies": ["IDEAL", "CHARACTER"],
    }
    assert json.loads(json.dumps(payload)) == payload


@pytest.mark.parametrize("name,plateau", [
    ("A2", (3, 5)), ("B2", (4, 6)), ("G2", (6, 8)),
])
def test_plateau_rows(name, plateau):
    rs = build_root_system(name)
    rows = spectrum_table(rs)
    lo, hi = plateau
    assert (lo, hi) == (rs.r, rs.r + rs.l)
    two_rho = wscale(2, rs.rho)
    for s in range(rs.l + 1):
        row = rows[rs.r + s]
        assert row.m == Fraction(rs.n, 3)
        assert row.components == ((two_rho, math.comb(rs.l, s)),)


def test_duality_rows_mirror():
    for name in ["A2", "B2", "G2"]:
        rs = build_root_system(name)
        rows = spectrum_table(rs)
        for i in range(rs.n + 1):
            assert rows[i].m == rows[rs.n - i].m
            assert rows[i].components == rows[rs.n - i].components


@pytest.mark.parametrize("name,p", [
    ("A1", 1), ("A2", 2), ("A3", 4), ("B2", 3), ("B3", 5), ("C3", 6), ("G2", 3),
])
def test_verify_reports_pass(name, p):
    report = verify_theorems(build_root_system(name))
    assert report.all_passed, [c for c in report.checks if not c.passed]
    assert report.observed_p == p
    payload = report_to_json(report)
    assert payload["observed_p"] == p
    assert payload["all_passed"] is True
    assert [c["id"] for c in payload["checks"]] == [c.id for c in report.checks]


def test_verify_g2_plateau_values():
    rs = build_root_system("G2")
    rows = spectrum_table(rs)
    assert [i for i, row in enumerate(rows) if row.m == Fraction(14, 3)] == [6, 7, 8]


@pytest.mark.parametrize("name", ["A2", "B2", "G2"])
def test_full_decomposition_sum_rule(name):
    # across every degree, multiplicities times dimensions add up to C(n, i)
    from casimir_spectrum import decompose_exterior, weyl_dim

    rs = build_root_system(name)
    for i in range(rs.n + 1):
        parts = decompose_exterior(rs, i)
        assert sum(m * weyl_dim(rs, w) for w, m in parts) == math.comb(rs.n, i)


def test_strategy_order_constant():
    assert STRATEGY_ORDER == ("BRUTE", "IDEAL", "CHARACTER", "DUALITY")


def test_fmt_rational():
    assert fmt_rational(Fraction(8, 3)) == "8/3"
    assert fmt_rational(Fraction(4, 2)) == "2"
    assert fmt_rational(0) == "0"
