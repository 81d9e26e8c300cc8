"""Acceptance suite: one test per criterion, each printing a pass line.

Every assertion is exact (Fraction or integer equality); the only tolerances
here are the wall-clock ceilings that come with some criteria.
"""

import json
import math
import os
import random
import subprocess
import sys
import time
from fractions import Fraction
from pathlib import Path

from casimir_spectrum import (
    build_root_system,
    casimir_eigenvalue,
    exterior_power_character,
    full_exterior_character,
    irreducible_character,
    killing_inner,
    krho_box_character,
    spectrum_table,
    tensor_character,
    verify_theorems,
)
from casimir_spectrum.root_system import wscale
from casimir_spectrum.spectrum import fmt_rational

from oracles import RANK3_TYPES, RANK8_TYPES, SWEEP_TYPES

THREE_STRATEGY_TYPES = RANK3_TYPES
IDEAL_ONLY_TYPES = ["D4", "F4"]
BUDGET = 10**7


def _report(criterion: str, elapsed: float, limit: float | None = None) -> None:
    bound = f" (limit {limit:.0f}s)" if limit else ""
    print(f"PASS {criterion}: {elapsed:.2f}s{bound}")


def test_criterion_1_strange_formula():
    t0 = time.perf_counter()
    for name in RANK8_TYPES:
        rs = build_root_system(name)
        assert killing_inner(rs, rs.rho, rs.rho) == Fraction(rs.n, 24), name
    elapsed = time.perf_counter() - t0
    _report("criterion 1: (rho,rho) = n/24 for every simple type of rank <= 8", elapsed, 5)
    assert elapsed < 5.0


def test_criterion_2_krho_box_equals_freudenthal():
    t0 = time.perf_counter()
    for name in RANK3_TYPES:
        rs = build_root_system(name)
        for k in (1, 2, 3):
            box = krho_box_character(rs, k)
            freud = irreducible_character(rs, wscale(k, rs.rho))
            assert box.mass == (k + 1) ** rs.r, (name, k)
            assert box == freud, (name, k)
    elapsed = time.perf_counter() - t0
    _report("criterion 2: box character of k*rho matches Freudenthal, rank <= 3", elapsed, 60)
    assert elapsed < 60.0


def test_criterion_3_theorem_sweep():
    t0 = time.perf_counter()
    for name in THREE_STRATEGY_TYPES:
        rs = build_root_system(name)
        report = verify_theorems(rs, BUDGET)
        assert report.all_passed, (name, [c.id for c in report.checks if not c.passed])
        rows = spectrum_table(rs, BUDGET)
        for i in range(rs.r + 1):
            assert rows[i].strategies >= {"BRUTE", "IDEAL", "CHARACTER"}, (name, i)
    for name in IDEAL_ONLY_TYPES:
        rs = build_root_system(name)
        report = verify_theorems(rs, BUDGET)
        assert report.all_passed, (name, [c.id for c in report.checks if not c.passed])
        rows = spectrum_table(rs, BUDGET)
        for i in range(rs.r + 1):
            assert "IDEAL" in rows[i].strategies, (name, i)
            if math.comb(rs.n, i) <= BUDGET:
                assert "BRUTE" in rows[i].strategies, (name, i)
    elapsed = time.perf_counter() - t0
    _report("criterion 3: full verification sweep over " + ",".join(SWEEP_TYPES), elapsed, 600)
    assert elapsed < 600.0


def test_criterion_4_golden_tables():
    t0 = time.perf_counter()
    a2 = build_root_system("A2")
    rows = spectrum_table(a2)
    assert [fmt_rational(r.m) for r in rows] == [
        "0", "1", "2", "8/3", "8/3", "8/3", "2", "1", "0"
    ]
    assert rows[2].components == (((0, 3), 1), ((3, 0), 1))
    assert rows[4].components == (((2, 2), 2),)
    b2 = build_root_system("B2")
    assert [fmt_rational(r.m) for r in spectrum_table(b2)] == [
        "0", "1", "2", "3", "10/3", "10/3", "10/3", "3", "2", "1", "0"
    ]
    _report("criterion 4: golden spectrum tables for A2 and B2", time.perf_counter() - t0)


def test_criterion_5_exterior_algebra_identity():
    t0 = time.perf_counter()
    for name in ["A1", "A2", "B2", "G2"]:
        rs = build_root_system(name)
        total = exterior_power_character(rs, 0)
        for i in range(1, rs.n + 1):
            total = total + exterior_power_character(rs, i)
        chi_rho = irreducible_character(rs, rs.rho)
        rhs = tensor_character(chi_rho, chi_rho).scaled(2**rs.l)
        assert total == rhs, name
        assert full_exterior_character(rs) == rhs, name
        # V_{2 rho} appears 2^l times across the plateau
        rows = spectrum_table(rs)
        two_rho = wscale(2, rs.rho)
        copies = sum(dict(rows[rs.r + s].components)[two_rho] for s in range(rs.l + 1))
        assert copies == 2**rs.l == sum(math.comb(rs.l, s) for s in range(rs.l + 1))
    elapsed = time.perf_counter() - t0
    _report("criterion 5: wedge(g) = 2^l V_rho (x) V_rho for A1,A2,B2,G2", elapsed, 120)
    assert elapsed < 120.0


def test_criterion_6_casimir_strict_dominance():
    t0 = time.perf_counter()
    rng = random.Random(20260808)
    for name in RANK3_TYPES:
        rs = build_root_system(name)
        for _ in range(50):
            lam = tuple(rng.randint(0, 4) for _ in range(rs.l))
            top = casimir_eigenvalue(rs, lam)
            chi = irreducible_character(rs, lam)
            for mu in chi.entries:
                if mu != lam:
                    assert casimir_eigenvalue(rs, mu) < top, (name, lam, mu)
    _report(
        "criterion 6: Cas strictly maximal at the highest weight, 50 samples x 7 types",
        time.perf_counter() - t0,
    )


def test_criterion_7_kostant_consistency():
    t0 = time.perf_counter()
    observed = {}
    for name in SWEEP_TYPES:
        report = verify_theorems(build_root_system(name), BUDGET)
        kostant = next(c for c in report.checks if c.id == "kostant_consistency")
        assert kostant.passed, name
        observed[name] = report.observed_p
        rows = spectrum_table(build_root_system(name), BUDGET)
        for i in range(report.observed_p + 1):
            assert rows[i].m == i, (name, i)
    assert observed["A2"] == 2
    assert observed["B2"] == 3
    _report(
        f"criterion 7: observed p per type {observed}",
        time.perf_counter() - t0,
    )


def test_criterion_8_cli_byte_determinism(tmp_path):
    t0 = time.perf_counter()
    src = str(Path(__file__).resolve().parent.parent / "src")
    env = dict(os.environ, PYTHONPATH=src)
    env.pop("CASIMIR_CACHE_DIR", None)
    outputs = []
    for jobs in ("1", "8"):
        proc = subprocess.run(
            [sys.executable, "-m", "casimir_spectrum", "verify",
             "--type", "A2,B2,G2", "--format", "json", "--jobs", jobs],
            capture_output=True,
            env=env,
            timeout=300,
            check=True,
        )
        outputs.append(proc.stdout)
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0])
    assert all(p["all_passed"] for p in payload)
    _report("criterion 8: --jobs 1 and --jobs 8 byte-identical", time.perf_counter() - t0)
