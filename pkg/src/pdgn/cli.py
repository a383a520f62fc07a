"""Command line front-end: ``pdgn <command> ...``.

Exit codes: 0 when every check passes, 1 when a mathematical check fails,
2 on usage or input errors.  Reports are JSON; apart from the ``timings``
block they depend only on the inputs.
"""

from __future__ import annotations

import functools
import hashlib
import json
import math
import os
import sys
import time

import click

from .atlas import (atlas, class_report, compare_with_table, reference_table, rows_to_csv,
                    rows_to_json)
from .errors import InvalidInput
from .polygon import Triangulation, enumerate_triangulations
from .verify import check, gr2_verify, mutation_case, tropical_check
from .weights import WeightVector

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def resolve_jobs(jobs) -> int:
    env = os.environ.get("PDGN_JOBS")
    if env:
        try:
            jobs = int(env)
        except ValueError:
            raise InvalidInput(f"PDGN_JOBS must be an integer, got {env!r}") from None
    if jobs is None:
        jobs = os.cpu_count() or 1
    if jobs < 1:
        raise InvalidInput("--jobs must be positive")
    return jobs


def digest(inputs) -> str:
    blob = json.dumps(inputs, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def make_report(command, inputs, checks, started, extra=None) -> dict:
    counterexamples = [{"check": c["name"], "counterexample": c["counterexample"]}
                       for c in checks if not c["pass"]]
    report = {
        "command": command,
        "inputs": inputs,
        "inputs_digest": digest(inputs),
        "pass": not counterexamples,
        "checks": checks,
        "counterexamples": counterexamples,
    }
    if extra:
        report.update(extra)
    report["timings"] = {"total_seconds": round(time.perf_counter() - started, 3)}
    return report


def emit(report, out):
    text = json.dumps(report, indent=1, sort_keys=False) + "\n"
    if out in (None, "-"):
        click.echo(text, nl=False)
    else:
        with open(out, "w") as fh:
            fh.write(text)
    sys.exit(EXIT_OK if report["pass"] else EXIT_FAIL)


def read_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from None


def input_errors(func):
    """Turn input errors into exit code 2 with a one-line message."""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except InvalidInput as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


jobs_option = click.option("--jobs", type=int, default=None,
                           help="Parallel workers (default: all cores; PDGN_JOBS overrides).")


@click.group()
@click.version_option(package_name="artifact")
def main():
    """Toric degenerations of Grassmannians: checks, tables and conversions."""


@main.command()
@click.option("--n", "n", type=int, required=True, help="Polygon size, 4..12.")
@click.option("--out", default="-", help="JSON-lines output file (default: stdout).")
@jobs_option
@input_errors
def triangulations(n, out, jobs):
    """Write every triangulation of the n-gon, one JSON object per line."""
    started = time.perf_counter()
    resolve_jobs(jobs)
    if not 4 <= n <= 12:
        raise InvalidInput("n must lie in 4..12")
    lines = [t.to_json() for t in enumerate_triangulations(n)]
    if out == "-":
        click.echo("\n".join(lines))
        return
    with open(out, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    m = n - 2
    catalan = math.comb(2 * m, m) // (m + 1)
    emit(make_report("triangulations", {"n": n},
                     [check("catalan_count", len(lines) == catalan, {"lines": len(lines)})],
                     started, {"lines": len(lines), "out": out}), None)


@main.group()
def gr2():
    """Gr(2,n): tree, plabic, A- and X-degrees and their initial ideals."""


@gr2.command("verify")
@click.option("--n", "n", type=int, required=True)
@click.option("--engine", type=click.Choice(["generators", "buchberger"]), default="generators",
              show_default=True)
@click.option("--out", default="-", help="Report file (default: stdout).")
@jobs_option
@input_errors
def gr2_verify_cmd(n, engine, out, jobs):
    """Check degree equalities and ideal equality for every triangulation."""
    started = time.perf_counter()
    result = gr2_verify(n, engine, resolve_jobs(jobs))
    emit(make_report("gr2 verify", {"n": n, "engine": engine}, result["checks"], started,
                     {"checked": result["checked"], "failures": result["failures"]}), out)


def _parse_diagonal(text):
    try:
        a, b = (int(x) for x in text.split(","))
    except ValueError:
        raise InvalidInput(f"diagonal must look like 3,6; got {text!r}") from None
    return a, b


@main.command()
@click.option("--in", "in_path", required=True, help="Triangulation JSON file.")
@click.option("--diagonal", required=True, help="Diagonal to flip, e.g. 3,6.")
@click.option("--out", default="-", help="Report file (default: stdout).")
@jobs_option
@input_errors
def mutate(in_path, diagonal, out, jobs):
    """Flip a diagonal and check which degenerate relations change."""
    started = time.perf_counter()
    resolve_jobs(jobs)
    data = read_json(in_path)
    try:
        t = Triangulation.from_dict(data)
    except (KeyError, TypeError) as exc:
        raise InvalidInput(f"malformed triangulation: {exc}") from None
    d = _parse_diagonal(diagonal)
    result = mutation_case(t, d)
    checks = result.pop("checks")
    result.pop("pass")
    emit(make_report("mutate", {"triangulation": t.to_dict(), "diagonal": list(d)},
                     checks, started, result), out)


@main.group()
def gr36():
    """Gr(3,6): the 34 plabic graphs and their initial ideals."""


@gr36.command("table")
@click.option("--out", required=True, help="Table output file.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json"]), default="csv",
              show_default=True)
@click.option("--report", "report_path", default="-", help="Report file (default: stdout).")
@jobs_option
@input_errors
def gr36_table(out, fmt, report_path, jobs):
    """Rebuild the Gr(3,6) dictionary and check it against the embedded reference."""
    started = time.perf_counter()
    rows, ideals, partition = atlas(jobs=resolve_jobs(jobs))
    with open(out, "w") as fh:
        fh.write(rows_to_csv(rows) if fmt == "csv" else rows_to_json(rows))
    ref = reference_table()
    report = class_report(rows, ideals, partition)
    flags = [f for c in report["classes"]
             for f in zip(c["members"], c["binomial"], c["monomial_free"])]
    problems = compare_with_table(rows, partition)
    sizes = sorted(len(c) for c in partition.classes)
    expected_sizes = sorted({name: sum(t.class_name == name for t in ref)
                             for name in {t.class_name for t in ref}}.values())
    checks = [
        check("row_count", len(rows) == len(ref), {"rows": len(rows)}),
        check("internal_labels_match",
              {r.internal_labels for r in rows} == {t.labels for t in ref},
              [p for p in problems if "label" in p]),
        check("weights_match", not [p for p in problems if "weight" in p],
              [p for p in problems if "weight" in p]),
        check("classes_match", not [p for p in problems if "class" in p] and
              sizes == expected_sizes, {"sizes": sizes, "problems": problems}),
        check("monomial_free", all(f[2] for f in flags), [f[0] for f in flags if not f[2]]),
        check("binomial", all(f[1] for f in flags), [f[0] for f in flags if not f[1]]),
    ]
    emit(make_report("gr36 table", {"format": fmt}, checks, started,
                     {"out": out, "classes": report}), report_path)


@main.group()
def tropical():
    """Tropical membership of a weight vector."""


@tropical.command("check")
@click.option("--in", "in_path", required=True, help='Weight JSON {"k","n","order","weights"}.')
@click.option("--out", default="-", help="Report file (default: stdout).")
@jobs_option
@input_errors
def tropical_check_cmd(in_path, out, jobs):
    """Four-point test (k=2) or monomial test of the initial ideal (Gr(3,6))."""
    started = time.perf_counter()
    resolve_jobs(jobs)
    w = WeightVector.from_dict(read_json(in_path))
    result = tropical_check(w)
    checks = result.pop("checks")
    result.pop("pass")
    emit(make_report("tropical check", w.to_dict(), checks, started, result), out)


if __name__ == "__main__":
    main()
