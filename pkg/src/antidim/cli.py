"""Command-line frontend.

Every subcommand builds one JSON-serialisable result object; human output is
a rendering of that same object, so the two formats cannot drift.  Exit
codes: 0 for a definite answer, 2 when the answer is unknown or inconclusive,
1 for any usage or input error.
"""

from __future__ import annotations

import json
import sys

import click

from . import experiments
from .anonymity import Confidence, evaluate
from .closure import Verdict, find_antiresolving_basis, find_antiresolving_set
from .graph import Graph, GraphError, generate, read_edge_list, write_edge_list
from .oracle import brute_adim, spectrum

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INDEFINITE = 2


def _load_graph(input_path: str | None, gen_spec: str | None) -> Graph:
    if (input_path is None) == (gen_spec is None):
        raise click.UsageError("exactly one of --input and --gen is required")
    if input_path is not None:
        return read_edge_list(input_path)
    return generate(gen_spec)


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
        return
    for key, value in doc.items():
        if isinstance(value, list):
            value = " ".join(str(x) for x in value)
        click.echo(f"{key}: {value}")


def _labels(g: Graph, vertices) -> list[str] | None:
    if vertices is None:
        return None
    return [g.label_of(v) for v in vertices]


_input_opt = click.option("--input", "input_path", type=click.Path(exists=True), default=None)
_gen_opt = click.option("--gen", "gen_spec", default=None, help="generator spec, e.g. cycle:6")
_fmt_opt = click.option(
    "--format", "fmt", type=click.Choice(["json", "human"]), default="human"
)


@click.group()
def cli() -> None:
    """Antiresolving-set analysis of simple connected graphs."""


@cli.command("adim")
@_input_opt
@_gen_opt
@_fmt_opt
@click.option("--k", type=int, required=True)
@click.option("--mode", type=click.Choice(["oracle", "search"]), default="oracle")
@click.option("--m", type=int, default=2, help="search join depth")
def adim_cmd(input_path, gen_spec, fmt, k, mode, m) -> int:
    """k-metric antidimension of the graph."""
    g = _load_graph(input_path, gen_spec)
    doc: dict = {"n": g.n, "k": k, "mode": mode}
    code = EXIT_OK
    if mode == "oracle":
        hit = brute_adim(g, k)
        if hit is None:
            doc.update(adim=None, status=f"no {k}-antiresolving set", confidence="exact")
        else:
            doc.update(adim=hit[0], witness=_labels(g, hit[1]), confidence="exact")
    else:
        basis = find_antiresolving_basis(g, k, m)
        if basis.found:
            doc.update(adim=len(basis.witness), witness=_labels(g, basis.witness), confidence="certified")
        else:
            outcome = find_antiresolving_set(g, k, m)
            if outcome.found:
                doc.update(
                    adim_upper_bound=len(outcome.witness),
                    witness=_labels(g, outcome.witness),
                    confidence="upper_bound_only",
                )
                code = EXIT_INDEFINITE
            elif Verdict.ABSENT in (basis.verdict, outcome.verdict):
                doc.update(adim=None, status=f"no {k}-antiresolving set", confidence="certified")
            else:
                doc.update(adim=None, status="unknown", confidence="unknown")
                code = EXIT_INDEFINITE
    _emit(doc, fmt)
    return code


@cli.command("anonymity")
@_input_opt
@_gen_opt
@_fmt_opt
@click.option("--ell", type=int, required=True, help="attacker budget")
@click.option("--mode", type=click.Choice(["oracle", "search"]), default="oracle")
@click.option("--m", type=int, default=2)
def anonymity_cmd(input_path, gen_spec, fmt, ell, mode, m) -> int:
    """Smallest k whose k-metric antidimension fits the budget."""
    g = _load_graph(input_path, gen_spec)
    result = evaluate(g, ell, mode=mode, m=m)
    doc = {
        "n": g.n,
        "ell": ell,
        "k": result.k,
        "confidence": result.confidence.value,
        "witness": _labels(g, result.witness),
        "probe_log": [f"k={k}: {note}" for k, note in result.probe_log],
    }
    _emit(doc, fmt)
    if result.confidence in (Confidence.EXACT, Confidence.CERTIFIED):
        return EXIT_OK
    return EXIT_INDEFINITE


@cli.command("spectrum")
@_input_opt
@_gen_opt
@_fmt_opt
def spectrum_cmd(input_path, gen_spec, fmt) -> int:
    """Exact adim_k table over every achievable k (brute force)."""
    g = _load_graph(input_path, gen_spec)
    spec = spectrum(g)
    doc = {
        "n": g.n,
        "antidimensional_k": spec.antidimensional_k,
        "table": [
            {"k": k, "adim": adim, "basis": _labels(g, basis)}
            for k, (adim, basis) in sorted(spec.per_k.items())
        ],
    }
    if fmt == "json":
        click.echo(json.dumps(doc, indent=2))
    else:
        click.echo(f"n: {g.n}")
        click.echo(f"antidimensional_k: {spec.antidimensional_k}")
        for row in doc["table"]:
            click.echo(f"k={row['k']}: adim={row['adim']} basis={' '.join(row['basis'])}")
    return EXIT_OK


def _parse_cells(tokens: tuple[str, str]) -> tuple[tuple[int, ...], tuple[int | str, ...]]:
    m_values: tuple[int, ...] | None = None
    k_values: tuple[int | str, ...] | None = None
    for tok in tokens:
        key, _, rest = tok.partition("=")
        if key == "m":
            m_values = tuple(int(x) for x in rest.split(","))
        elif key == "k":
            if ".." in rest:
                lo, hi = rest.split("..")
                k_values = tuple(range(int(lo), int(hi) + 1))
            else:
                k_values = tuple(
                    x if x == experiments.K_EQUALS_ORDER else int(x) for x in rest.split(",")
                )
        else:
            raise click.UsageError(f"cell spec must start with m= or k=, got {tok!r}")
    if m_values is None or k_values is None:
        raise click.UsageError("--cells needs both an m= and a k= token")
    return m_values, k_values


@cli.command("experiment")
@click.option("--cells", nargs=2, default=None, help='e.g. --cells m=1,2 k=1..4')
@click.option("--per-cell", type=int, default=300)
@click.option("--n-max", type=int, default=40)
@click.option("--seed", type=int, required=True)
@click.option("--out", "out_path", type=click.Path(), required=True, help="CSV report path")
@click.option("--json-out", "json_path", type=click.Path(), default=None)
@click.option("--timing/--no-timing", default=False, help="record mean runtimes (breaks byte determinism)")
def experiment_cmd(cells, per_cell, n_max, seed, out_path, json_path, timing) -> int:
    """Success-rate study of the closure search on random graphs."""
    kwargs: dict = {}
    if cells is not None:
        kwargs["m_values"], kwargs["k_values"] = _parse_cells(cells)
    cfg = experiments.ExperimentConfig(
        graphs_per_cell=per_cell, n_max=n_max, rng_seed=seed, measure_time=timing, **kwargs
    )
    report = experiments.run_success_rate_study(cfg)
    with open(out_path, "w", encoding="utf-8", newline="") as fh:
        fh.write(report.to_csv())
    if json_path is not None:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
    click.echo(f"wrote {len(report.cells)} cells to {out_path}")
    return EXIT_OK


@cli.command("audit")
@click.option("--input", "input_path", type=click.Path(exists=True), required=True)
@click.option("--ell", type=int, required=True)
@click.option("--m", type=int, default=2)
def audit_cmd(input_path, ell, m) -> int:
    """Anonymity audit of a social-graph edge-list file (JSON record)."""
    record = experiments.audit_social_graph(input_path, ell, m)
    click.echo(json.dumps(record, indent=2))
    if record["confidence"] in ("exact", "certified"):
        return EXIT_OK
    return EXIT_INDEFINITE


@cli.command("gen")
@click.option("--family", "gen_spec", required=True, help="generator spec, e.g. family_F:r=3,dx=2,dy=2")
@click.option("--out", "out_path", type=click.Path(), required=True)
def gen_cmd(gen_spec, out_path) -> int:
    """Write a generated family graph as an edge-list file."""
    g = generate(gen_spec)
    write_edge_list(g, out_path)
    click.echo(f"wrote {g.n} vertices / {g.m} edges to {out_path}")
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    try:
        rv = cli.main(args=argv, standalone_mode=False)
    except click.ClickException as exc:
        exc.show(file=sys.stderr)
        return EXIT_ERROR
    except click.exceptions.Abort:
        return EXIT_ERROR
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    return rv if isinstance(rv, int) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
