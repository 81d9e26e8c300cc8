"""Command-line front end.

Subcommands render the spectrum table, the ideal listing, the box character
check, the per-type verification reports, and exterior-power decompositions
as markdown, CSV, or JSON. All numbers are exact rationals rendered as p/q;
no output ever contains a float. Exit codes: 0 all checks pass, 1 a
mathematical check failed, 2 usage error.
"""

from __future__ import annotations

import csv
import io
import json
import math
from concurrent.futures import ThreadPoolExecutor

import click

from . import characters
from .cache import CharacterStore
from .characters import (
    DEFAULT_BUDGET,
    irreducible_character,
    krho_box_character,
)
from .errors import BudgetExceeded, InvalidCartanType, StrategyDisagreement
from .ideals import enumerate_ideals, ideal_weight_sum
from .root_system import (
    CartanType,
    build_root_system,
    casimir_eigenvalue,
    simple_types_up_to,
    weyl_dim,
)
from .spectrum import (
    decompose_exterior,
    fmt_rational,
    report_to_json,
    row_to_json,
    spectrum_table,
    verify_theorems,
)

FORMATS = ("json", "csv", "md")


def _parse_types(text: str) -> list[CartanType]:
    out = []
    for chunk in text.split(","):
        if not chunk.strip():
            continue
        try:
            out.append(CartanType.parse(chunk))
        except InvalidCartanType as exc:
            raise click.UsageError(str(exc))
    if not out:
        raise click.UsageError("no Cartan types given")
    return out


def _install_cache(cache_dir: str | None) -> None:
    characters.set_disk_cache(CharacterStore(cache_dir) if cache_dir else None)


def _run_per_type(types, jobs: int, work):
    if jobs <= 1 or len(types) <= 1:
        return [work(t) for t in types]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(work, t) for t in types]
        return [f.result() for f in futures]


def _emit(payloads: list[dict], fmt: str, md_render, csv_rows, csv_header) -> None:
    if fmt == "json":
        click.echo(json.dumps(payloads, indent=2))
    elif fmt == "md":
        click.echo("\n\n".join(md_render(p) for p in payloads))
    else:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(csv_header)
        for payload in payloads:
            writer.writerows(csv_rows(payload))
        click.echo(buf.getvalue().rstrip("\n"))


def _wstr(coords) -> str:
    return "[" + ",".join(str(c) for c in coords) + "]"


type_option = click.option(
    "--type", "types_text", required=True, help="Comma-separated Cartan types, e.g. A2,B3."
)
format_option = click.option(
    "--format", "fmt", type=click.Choice(FORMATS), default="md", show_default=True
)
budget_option = click.option(
    "--budget",
    type=click.IntRange(min=1000),
    default=DEFAULT_BUDGET,
    show_default=True,
    help="Size cap for exhaustive and character strategies.",
)
cache_option = click.option(
    "--cache-dir",
    envvar="CASIMIR_CACHE_DIR",
    type=click.Path(file_okay=False),
    default=None,
    help="Directory for the irreducible-character cache.",
)
jobs_option = click.option(
    "--jobs", type=click.IntRange(min=1), default=1, show_default=True,
    help="Process this many Cartan types concurrently.",
)


@click.group()
def main() -> None:
    """Exact maximal Casimir eigenvalues on exterior powers of simple Lie algebras."""


# ---------------------------------------------------------------------------
# spectrum
# ---------------------------------------------------------------------------


@main.command()
@type_option
@format_option
@budget_option
@cache_option
@jobs_option
def spectrum(types_text: str, fmt: str, budget: int, cache_dir: str | None, jobs: int) -> None:
    """Print the full spectrum table m_0..m_n for each type."""
    types = _parse_types(types_text)
    _install_cache(cache_dir)

    def work(ct: CartanType) -> dict:
        rs = build_root_system(ct)
        rows = spectrum_table(rs, budget)
        return {"type": str(ct), "rows": [row_to_json(rs, row) for row in rows]}

    try:
        payloads = _run_per_type(types, jobs, work)
    except StrategyDisagreement as exc:
        click.echo(f"strategy disagreement: {exc}", err=True)
        raise SystemExit(1)

    def md_render(payload: dict) -> str:
        lines = [f"## {payload['type']}", ""]
        lines.append("| i | m | components | dim | strategies |")
        lines.append("|---|---|---|---|---|")
        for row in payload["rows"]:
            comps = "; ".join(
                f"{_wstr(c['weight'])}:{c['mult']}:{c['dim']}" for c in row["components"]
            )
            lines.append(
                f"| {row['i']} | {row['m']} | {comps} | {row['dim']} | "
                f"{','.join(row['strategies'])} |"
            )
        return "\n".join(lines)

    def csv_rows(payload: dict):
        for row in payload["rows"]:
            comps = ";".join(
                f"{_wstr(c['weight'])}:{c['mult']}:{c['dim']}" for c in row["components"]
            )
            yield [payload["type"], row["i"], row["m"], comps, row["dim"],
                   ";".join(row["strategies"])]

    _emit(payloads, fmt, md_render, csv_rows, ["type", "i", "m", "components", "dim", "strategies"])


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------


@main.command()
@click.option(
    "--type", "types_text", default=None,
    help="Comma-separated Cartan types; defaults to all simple types of rank <= 3.",
)
@format_option
@budget_option
@cache_option
@jobs_option
def verify(types_text: str | None, fmt: str, budget: int, cache_dir: str | None, jobs: int) -> None:
    """Run every verification check per type; exit 0 only if all pass."""
    if types_text is None:
        types = simple_types_up_to(3)
    else:
        types = _parse_types(types_text)
    _install_cache(cache_dir)

    def work(ct: CartanType) -> dict:
        return report_to_json(verify_theorems(build_root_system(ct), budget))

    payloads = _run_per_type(types, jobs, work)

    def md_render(payload: dict) -> str:
        lines = [f"## {payload['type']}", ""]
        lines.append(
            f"n={payload['n']} r={payload['r']} l={payload['l']} "
            f"observed_p={payload['observed_p']}"
        )
        lines.append("")
        lines.append("| check | passed | details |")
        lines.append("|---|---|---|")
        for c in payload["checks"]:
            status = "pass" if c["passed"] else "FAIL"
            lines.append(f"| {c['id']} | {status} | {c['details']} |")
        return "\n".join(lines)

    def csv_rows(payload: dict):
        for c in payload["checks"]:
            yield [payload["type"], c["id"], "pass" if c["passed"] else "FAIL", c["details"]]

    _emit(payloads, fmt, md_render, csv_rows, ["type", "check", "passed", "details"])
    if not all(p["all_passed"] for p in payloads):
        failed = [p["type"] for p in payloads if not p["all_passed"]]
        click.echo(f"verification FAILED for: {', '.join(failed)}", err=True)
        raise SystemExit(1)


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------


@main.command()
@type_option
@click.option("--k", type=int, default=None, help="List only ideals of this size.")
@click.option("--full", is_flag=True, help="List every ideal, not only the counts.")
@format_option
@budget_option
@cache_option
@jobs_option
def ideals(types_text: str, k: int | None, full: bool, fmt: str, budget: int,
           cache_dir: str | None, jobs: int) -> None:
    """Count or list the upper-set ideals of the positive-root poset."""
    types = _parse_types(types_text)
    _install_cache(cache_dir)

    def describe(rs, ideal, max_cas) -> dict:
        s = ideal_weight_sum(rs, ideal)
        cas = casimir_eigenvalue(rs, s)
        return {
            "roots": sorted(list(rs.positive_root_coords[t]) for t in ideal),
            "sum": list(s),
            "cas": fmt_rational(cas),
            "achieves_max": cas == max_cas,
        }

    def work(ct: CartanType) -> dict:
        rs = build_root_system(ct)
        if k is not None:
            if not 0 <= k <= rs.r:
                raise click.UsageError(f"--k {k} out of range 0..{rs.r} for {ct}")
            chosen = enumerate_ideals(rs, k)
            max_cas = max(
                casimir_eigenvalue(rs, ideal_weight_sum(rs, ideal)) for ideal in chosen
            )
            return {
                "type": str(ct),
                "k": k,
                "max_cas": fmt_rational(max_cas),
                "ideals": [describe(rs, ideal, max_cas) for ideal in chosen],
            }
        every = enumerate_ideals(rs)
        by_size = [0] * (rs.r + 1)
        for ideal in every:
            by_size[len(ideal)] += 1
        payload = {"type": str(ct), "total": len(every), "by_size": by_size}
        if full:
            payload["ideals"] = [
                {
                    "size": len(ideal),
                    "roots": sorted(list(rs.positive_root_coords[t]) for t in ideal),
                    "sum": list(ideal_weight_sum(rs, ideal)),
                    "cas": fmt_rational(
                        casimir_eigenvalue(rs, ideal_weight_sum(rs, ideal))
                    ),
                }
                for ideal in every
            ]
        return payload

    payloads = _run_per_type(types, jobs, work)

    def md_render(payload: dict) -> str:
        lines = [f"## {payload['type']}", ""]
        if "ideals" in payload and "k" in payload:
            lines.append(f"size {payload['k']}, max Cas = {payload['max_cas']}")
            lines.append("")
            lines.append("| roots | sum | cas | achieves_max |")
            lines.append("|---|---|---|---|")
            for d in payload["ideals"]:
                roots = ";".join(_wstr(rc) for rc in d["roots"]) or "-"
                lines.append(
                    f"| {roots} | {_wstr(d['sum'])} | {d['cas']} | "
                    f"{'yes' if d['achieves_max'] else 'no'} |"
                )
        else:
            lines.append(f"total: {payload['total']}")
            lines.append(f"by size: {payload['by_size']}")
            if "ideals" in payload:
                lines.append("")
                lines.append("| size | roots | sum | cas |")
                lines.append("|---|---|---|---|")
                for d in payload["ideals"]:
                    roots = ";".join(_wstr(rc) for rc in d["roots"]) or "-"
                    lines.append(f"| {d['size']} | {roots} | {_wstr(d['sum'])} | {d['cas']} |")
        return "\n".join(lines)

    def csv_rows(payload: dict):
        if "k" in payload:
            for d in payload["ideals"]:
                yield [
                    payload["type"], payload["k"],
                    ";".join(_wstr(rc) for rc in d["roots"]),
                    _wstr(d["sum"]), d["cas"], d["achieves_max"],
                ]
        else:
            yield [payload["type"], "", "", "", f"total={payload['total']}",
                   ";".join(map(str, payload["by_size"]))]

    _emit(payloads, fmt, md_render, csv_rows, ["type", "k", "roots", "sum", "cas", "flag"])


# ---------------------------------------------------------------------------
# krho
# ---------------------------------------------------------------------------


@main.command()
@type_option
@click.option("--k", type=click.IntRange(min=0), required=True)
@click.option("--full", is_flag=True, help="Dump the full weight list (json and md output).")
@format_option
@budget_option
@cache_option
@jobs_option
def krho(types_text: str, k: int, full: bool, fmt: str, budget: int,
         cache_dir: str | None, jobs: int) -> None:
    """Box character of V_{k rho}: mass and cross-check against Freudenthal."""
    types = _parse_types(types_text)
    _install_cache(cache_dir)

    def work(ct: CartanType) -> dict:
        rs = build_root_system(ct)
        box = krho_box_character(rs, k)
        expected = (k + 1) ** rs.r
        if expected <= budget:
            freud = irreducible_character(rs, tuple(k for _ in range(rs.l)))
            match = "EQUAL" if box == freud else "UNEQUAL"
        else:
            match = "SKIPPED"
        payload = {
            "type": str(ct),
            "k": k,
            "mass": box.mass,
            "expected_mass": expected,
            "freudenthal_match": match,
        }
        if full:
            payload["weights"] = [[list(w), m] for w, m in box.sorted_entries()]
        return payload

    payloads = _run_per_type(types, jobs, work)

    def md_render(payload: dict) -> str:
        lines = [f"## {payload['type']}", ""]
        lines.append(
            f"k={payload['k']} mass={payload['mass']} "
            f"expected={payload['expected_mass']} verdict={payload['freudenthal_match']}"
        )
        if "weights" in payload:
            lines.append("")
            lines.append("| weight | mult |")
            lines.append("|---|---|")
            for w, m in payload["weights"]:
                lines.append(f"| {_wstr(w)} | {m} |")
        return "\n".join(lines)

    def csv_rows(payload: dict):
        yield [payload["type"], payload["k"], payload["mass"],
               payload["expected_mass"], payload["freudenthal_match"]]

    _emit(payloads, fmt, md_render, csv_rows,
          ["type", "k", "mass", "expected_mass", "freudenthal_match"])


# ---------------------------------------------------------------------------
# decompose-exterior
# ---------------------------------------------------------------------------


@main.command("decompose-exterior")
@type_option
@click.option("--i", "degree", type=click.IntRange(min=0), required=True)
@format_option
@budget_option
@cache_option
@jobs_option
def decompose_exterior_cmd(types_text: str, degree: int, fmt: str, budget: int,
                           cache_dir: str | None, jobs: int) -> None:
    """Decompose the i-th exterior power of g into irreducibles."""
    types = _parse_types(types_text)
    _install_cache(cache_dir)

    def work(ct: CartanType) -> dict:
        rs = build_root_system(ct)
        if not 0 <= degree <= rs.n:
            raise click.UsageError(f"--i {degree} out of range 0..{rs.n} for {ct}")
        parts = decompose_exterior(rs, degree, budget)
        values = {w: casimir_eigenvalue(rs, w) for w, _ in parts}
        max_cas = max(values.values())
        return {
            "type": str(ct),
            "i": degree,
            "mass": math.comb(rs.n, degree),
            "max_cas": fmt_rational(max_cas),
            "components": [
                {
                    "weight": list(w),
                    "mult": mult,
                    "dim": weyl_dim(rs, w),
                    "cas": fmt_rational(values[w]),
                    "max": values[w] == max_cas,
                }
                for w, mult in parts
            ],
        }

    try:
        payloads = _run_per_type(types, jobs, work)
    except BudgetExceeded as exc:
        raise click.UsageError(str(exc))

    def md_render(payload: dict) -> str:
        lines = [f"## {payload['type']}, degree {payload['i']}", ""]
        lines.append(f"mass={payload['mass']} max Cas={payload['max_cas']}")
        lines.append("")
        lines.append("| weight | mult | dim | cas | max |")
        lines.append("|---|---|---|---|---|")
        for c in payload["components"]:
            lines.append(
                f"| {_wstr(c['weight'])} | {c['mult']} | {c['dim']} | {c['cas']} | "
                f"{'yes' if c['max'] else 'no'} |"
            )
        return "\n".join(lines)

    def csv_rows(payload: dict):
        for c in payload["components"]:
            yield [payload["type"], payload["i"], _wstr(c["weight"]), c["mult"],
                   c["dim"], c["cas"], c["max"]]

    _emit(payloads, fmt, md_render, csv_rows,
          ["type", "i", "weight", "mult", "dim", "cas", "max"])


if __name__ == "__main__":
    main()
