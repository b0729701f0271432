"""Command-line surface.

Exit codes: 0 success/confirmed, 2 usage error, 3 unresolved values (a
budget statement, not a disproof), 4 infeasible construction parameters,
5 counterexample found (for proven lemmas this signals an implementation
bug).  Every flag has a SUMSET_-prefixed environment-variable fallback.
"""

import json
import os
import sys

import click

from . import constructions, core, enumeration, series, svgplot
from .core import FillingInfeasibleError

EXIT_UNRESOLVED = 3
EXIT_INFEASIBLE = 4
EXIT_COUNTEREXAMPLE = 5

_CTX = {"auto_envvar_prefix": "SUMSET", "help_option_names": ["-h", "--help"]}


def _parse_set(text: str) -> tuple:
    try:
        return core.as_intset(int(x) for x in text.replace(" ", "").split(","))
    except ValueError as exc:
        raise click.UsageError(f"malformed set {text!r}: {exc}")


@click.group(context_settings=_CTX)
def main():
    """Sumset range toolkit: h-fold sumsets, R(h,k) certification, and the
    explicit constructions behind it."""


@main.command()
@click.option("--set", "elems", required=True, help="comma-separated integers")
@click.option("--h", "h", type=int, required=True)
@click.option("--restricted", is_flag=True, help="sums of h distinct elements")
def sumset(elems, h, restricted):
    """Print hA (or the restricted sumset) and its size."""
    a = _parse_set(elems)
    if restricted:
        try:
            out = core.restricted_sumset(a, h)
        except ValueError as exc:
            raise click.UsageError(str(exc))
    else:
        out = core.iterated_sumset(a, h)
    click.echo(json.dumps({"set": list(out), "size": len(out)}))


@main.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
def delta(h, k):
    """The excluded triangle of sizes: intervals, then the flat set."""
    ds = constructions.delta_set(h, k)
    for lo, hi in ds.intervals:
        click.echo(f"[{lo}, {hi}]")
    click.echo(json.dumps(list(ds.excluded)))


@main.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
def bounds(h, k):
    """The bounding interval [hk-h+1, C(h+k-1,h)]."""
    lo, hi = constructions.bounding_interval(h, k)
    click.echo(f"[{lo}, {hi}]")


@main.command(name="range")
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d-budget", type=int, default=None)
@click.option("--jobs", type=int, default=os.cpu_count())
@click.option("--format", "fmt", type=click.Choice(["json", "text"]), default="text")
def range_cmd(h, k, d_budget, jobs, fmt):
    """Certified gap window plus witnesses for the full range."""
    if h < 1 or k < 2:
        raise click.UsageError("need h >= 1 and k >= 2")
    report = enumeration.verify_range(h, k, d_budget=d_budget, jobs=jobs)
    if fmt == "json":
        click.echo(report.to_json())
    else:
        lo, hi = constructions.bounding_interval(h, k)
        click.echo(f"R({h},{k}) within [{lo}, {hi}], threshold {report.threshold}")
        click.echo(f"certified gaps: {list(report.certified_gaps)}")
        click.echo(f"unresolved: {list(report.unresolved)}")
        click.echo("CONFIRMED" if report.confirmed else "NOT CONFIRMED")
    if report.unresolved:
        sys.exit(EXIT_UNRESOLVED)


@main.command()
@click.option("--k", "k", type=int, required=True)
@click.option("--hmax", type=int, default=3)
@click.option("--stall", type=int, default=None, help="stall window (default 2k)")
@click.option("--d-cap", type=int, default=10_000)
@click.option("--format", "fmt", type=click.Choice(["csv", "svg"]), default="csv")
@click.option("--output", "-o", type=click.Path(), default=None)
def atlas(k, hmax, stall, d_cap, fmt, output):
    """Profile-tuple atlas as CSV (machine artifact) or SVG scatter."""
    at = enumeration.tuple_atlas(k, hmax, stall_window=stall, d_cap=d_cap)
    if fmt == "csv":
        text = at.to_csv()
    else:
        path_g = None
        if hmax == 3 and k >= 4:
            path_g = [constructions.g_of(s) for s in constructions.h3_path_sets(k)]
        text = svgplot.atlas_svg(at, path_g)
    if output:
        with open(output, "w") as f:
            f.write(text)
        click.echo(f"wrote {output} ({len(at.tuples)} tuples, stabilized={at.stabilized})")
    else:
        click.echo(text, nl=False)


@main.group()
def construct():
    """Explicit constructions, re-verified on output."""


@construct.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
def fill(h, d, k):
    """(h,d)-filling set of size k: hA = [0, hd]."""
    try:
        a = constructions.build_filling_set(h, d, k)
    except (FillingInfeasibleError, ValueError) as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    click.echo(json.dumps(list(a)))
    click.echo(f"PASS: {h}A = [0, {h * d}]")


@construct.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d", "d", type=int, required=True)
@click.option("--i", "i", type=int, required=True)
def shift(h, k, d, i):
    """A = {0} u (i+B) with |hA| = h(i+d)-i+2."""
    try:
        a = constructions.shifted_filling_family(h, k, d, i)
    except (FillingInfeasibleError, ValueError) as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    click.echo(json.dumps(list(a)))
    click.echo(f"PASS: |{h}A| = {h * (i + d) - i + 2}")


@construct.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--j", "j", type=int, required=True)
@click.option("--ell", type=int, required=True)
def dense(h, j, ell):
    """B_{j,ell} = [0, ell-2] u {h(ell-2)+2-j}."""
    try:
        a = constructions.dense_B(h, j, ell)
    except ValueError as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    click.echo(json.dumps(list(a)))


@construct.command(name="sparse-s")
@click.option("--m", "m", type=int, required=True)
@click.option("--ell", type=int, required=True)
def sparse_s(m, ell):
    """S_{m,ell} = {0, 1, m, ..., m^(ell-2)}."""
    try:
        a = constructions.sparse_S(m, ell)
    except ValueError as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    click.echo(json.dumps(list(a)))


@construct.command(name="sparse-t")
@click.option("--m", "m", type=int, required=True)
@click.option("--ell", type=int, required=True)
def sparse_t(m, ell):
    """T_{m,ell} = {1, m, ..., m^(ell-1)}."""
    try:
        a = constructions.sparse_T(m, ell)
    except ValueError as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    click.echo(json.dumps(list(a)))


@construct.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--b", "b", type=int, required=True)
@click.option("--j", "j", type=int, default=1)
@click.option("--s", "s", default=None, help="comma-separated s_m for m = 3..h")
@click.option("--t", "t", default=None, help="comma-separated t_m for m = 2..h-1")
@click.option("--all-min", is_flag=True, help="every block size at its minimum 2")
def family(h, k, b, j, s, t, all_min):
    """Disjoint-union family member; prints its truncated series and |hA|."""
    try:
        if all_min or (s is None and t is None):
            params = constructions.FamilyParams.minimal(h, k, b, j)
        else:
            sv = tuple(int(x) for x in s.split(",")) if s else ()
            tv = tuple(int(x) for x in t.split(",")) if t else ()
            params = constructions.FamilyParams(h=h, k=k, b=b, j=j, s=sv, t=tv)
    except ValueError as exc:
        click.echo(f"FAIL: {exc}")
        sys.exit(EXIT_INFEASIBLE)
    f = constructions.family_series(params)
    click.echo(json.dumps({"series": list(f.coeffs), "size": f.coeffs[h]}))
    if k <= 20:
        flat = core.flatten(constructions.family_Ab_member(params), h)
        ok = core.sumset_size(flat, h) == f.coeffs[h]
        click.echo("PASS" if ok else "FAIL")
        if not ok:
            sys.exit(EXIT_COUNTEREXAMPLE)
    else:
        click.echo("PASS (series only; lattice realization skipped at this k)")


@construct.command()
@click.option("--k", "k", type=int, required=True)
def h3path(k):
    """The explicit vertex path joining (2k,3k) to (3k-2,6k-5) at h = 3."""
    if k < 4:
        raise click.UsageError("need k >= 4")
    sets = constructions.h3_path_sets(k)
    gs = [constructions.g_of(a) for a in sets]
    for a, g in zip(sets, gs):
        click.echo(f"{json.dumps(list(a))}  g = {g}")
    ok = all(abs(u[0] - v[0]) <= 1 and abs(u[1] - v[1]) <= 1
             for u, v in zip(gs, gs[1:]))
    click.echo(f"{len(sets)} sets, adjacency {'PASS' if ok else 'FAIL'}")
    if not ok:
        sys.exit(EXIT_COUNTEREXAMPLE)


@main.group()
def verify():
    """Lemma and conjecture scanners."""


@verify.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d-max", type=int, required=True)
def lemmas(h, k, d_max):
    """Exhaustive check of the two diameter lemmas (any hit is a bug)."""
    bad = enumeration.verify_diameter_lemmas(h, k, d_max)
    if bad is None:
        click.echo("PASS")
    else:
        click.echo(f"COUNTEREXAMPLE: A={list(bad[0])}, |{h}A|={bad[1]}")
        sys.exit(EXIT_COUNTEREXAMPLE)


@verify.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d-budget", type=int, default=None)
@click.option("--jobs", type=int, default=os.cpu_count())
def conjecture(h, k, d_budget, jobs):
    """Full-range verification (delegates to verify_range)."""
    report = enumeration.verify_range(h, k, d_budget=d_budget, jobs=jobs)
    click.echo(report.to_json())
    click.echo("CONFIRMED" if report.confirmed else "NOT CONFIRMED")
    if report.unresolved:
        sys.exit(EXIT_UNRESOLVED)


@verify.command()
@click.option("--h", "h", type=int, required=True)
@click.option("--k", "k", type=int, required=True)
@click.option("--d-max", type=int, required=True)
def conj51(h, k, d_max):
    """Minimum-size conjecture scan: min |hA| vs |h([0,k-2] u {d})|."""
    scan = enumeration.conjecture51_scan(h, k, d_max)
    if scan.counterexamples:
        for d, base, mn, wit in scan.counterexamples:
            click.echo(f"COUNTEREXAMPLE d={d}: min {mn} < baseline {base}, A={list(wit)}")
        sys.exit(EXIT_COUNTEREXAMPLE)
    click.echo(f"no counterexample for d <= {d_max}")


if __name__ == "__main__":
    main()
