"""Command-line front end."""

from __future__ import annotations

import functools
import json
import os
import sys

import click

from .foliage import foliage_decomposition
from .formats import export_dot, parse_graph, serialize_graph, sniff_format
from .graph import Graph, construct_named
from .search import (
    DEFAULT_BUDGET,
    DEFAULT_ORBIT_CAP,
    BellPairTarget,
    SearchLimitExceeded,
    can_extract_bell_pairs,
    is_vertex_minor,
    lc_orbit,
)
from .verify import (
    demo_ring_butterfly,
    verify_foliage_invariance,
    verify_line_no_crossing,
    verify_ring_no_crossing,
)


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path).read()
    return parse_graph(text, sniff_format(text))


def _emit_graph(g: Graph, dot: bool) -> None:
    click.echo(export_dot(g) if dot else serialize_graph(g), nl=not dot)


def _wrap_errors(f):
    @functools.wraps(f)
    def inner(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except (ValueError, SearchLimitExceeded, OSError) as e:
            raise click.ClickException(str(e))

    return inner


input_option = click.option(
    "-i", "--input", "src", default="-", help="Graph file (JSON or edge list), '-' for stdin."
)
dot_option = click.option("--dot", is_flag=True, help="Emit DOT instead of JSON.")
json_option = click.option("--json", "as_json", is_flag=True, help="Emit a JSON report.")
budget_option = click.option(
    "--budget", default=DEFAULT_BUDGET, show_default=True, help="Search work budget."
)


@click.group()
def main():
    """Manipulate graph states at the graph level and verify no-crossing sweeps."""


@main.command()
@click.argument("kind", type=click.Choice(["ring", "line", "complete"]))
@click.argument("n", type=int)
@dot_option
@_wrap_errors
def make(kind: str, n: int, dot: bool):
    """Construct a named graph on labels 1..N."""
    _emit_graph(construct_named(kind, n), dot)


@main.command()
@click.argument("vertex", type=int)
@input_option
@dot_option
@_wrap_errors
def lc(vertex: int, src: str, dot: bool):
    """Locally complement at VERTEX."""
    _emit_graph(_read_graph(src).local_complement(vertex), dot)


@main.command()
@click.argument("vertex", type=int)
@click.argument("basis", type=click.Choice(["X", "Y", "Z", "x", "y", "z"]))
@click.option("-w", "--neighbor", type=int, default=None, help="Special neighbour for X.")
@input_option
@dot_option
@_wrap_errors
def measure(vertex: int, basis: str, neighbor: int | None, src: str, dot: bool):
    """Measure VERTEX in a Pauli BASIS and drop it from the graph."""
    _emit_graph(_read_graph(src).measure(vertex, basis, neighbor), dot)


@main.command()
@click.argument("u", type=int)
@click.argument("v", type=int)
@input_option
@dot_option
@_wrap_errors
def cz(u: int, v: int, src: str, dot: bool):
    """Toggle the edge (U, V)."""
    _emit_graph(_read_graph(src).toggle_cz(u, v), dot)


@main.command()
@input_option
@json_option
@dot_option
@_wrap_errors
def foliage(src: str, as_json: bool, dot: bool):
    """Show the leaves, axils, and twin pairs of a graph."""
    g = _read_graph(src)
    dec = foliage_decomposition(g)
    if dot:
        click.echo(export_dot(g, dec), nl=False)
        return
    data = {
        "leaves": sorted(dec.leaves),
        "axils": sorted(dec.axils),
        "twins": sorted(list(p) for p in dec.twins),
        "foliage": sorted(dec.members),
    }
    if as_json:
        click.echo(json.dumps(data, indent=2))
    else:
        click.echo(f"leaves: {data['leaves']}")
        click.echo(f"axils: {data['axils']}")
        click.echo(f"twins: {data['twins']}")
        click.echo(f"foliage: {data['foliage']}")


@main.command()
@input_option
@click.option("--cap", default=DEFAULT_ORBIT_CAP, show_default=True, help="Orbit size cap.")
@json_option
@_wrap_errors
def orbit(src: str, cap: int, as_json: bool):
    """Enumerate the full LC orbit of a graph."""
    members = sorted(lc_orbit(_read_graph(src), cap=cap), key=lambda g: g.edges())
    if as_json:
        click.echo(
            json.dumps(
                {"size": len(members), "graphs": [serialize_graph(m, "edgelist") for m in members]},
                indent=2,
            )
        )
    else:
        click.echo(f"orbit size: {len(members)}")
        for m in members:
            click.echo(serialize_graph(m, "edgelist"))


@main.command()
@click.argument("target", type=click.Path(exists=True, dir_okay=False))
@input_option
@budget_option
@click.option("--no-prune", is_flag=True, help="Disable leaf/axil and component pruning.")
@json_option
@_wrap_errors
def vminor(target: str, src: str, budget: int, no_prune: bool, as_json: bool):
    """Decide whether the graph in TARGET is a vertex-minor of the input graph."""
    g = _read_graph(src)
    h = _read_graph(target)
    report = is_vertex_minor(g, h, prune=not no_prune, budget=budget)
    _emit_decision(report, as_json)


@main.command()
@click.argument("a1", type=int)
@click.argument("a2", type=int)
@click.argument("b1", type=int)
@click.argument("b2", type=int)
@input_option
@budget_option
@json_option
@_wrap_errors
def bell(a1: int, a2: int, b1: int, b2: int, src: str, budget: int, as_json: bool):
    """Decide whether Bell pairs (A1,A2) and (B1,B2) can be extracted."""
    g = _read_graph(src)
    target = BellPairTarget((a1, a2), (b1, b2))
    report = can_extract_bell_pairs(g, target, budget=budget)
    _emit_decision(report, as_json)


def _emit_decision(report, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report.as_dict(), indent=2))
        return
    click.echo(f"decision: {report.decision}")
    if report.witness:
        steps = " ".join(str(s) for s in report.witness.measurements)
        click.echo(f"witness measurements: {steps or '(none)'}")
        click.echo(f"witness lc path: {list(report.witness.lc_path)}")
    s = report.stats
    click.echo(
        f"sequences tried: {s.sequences_tried}, orbit size: {s.orbit_size}, "
        f"reductions: {s.leaf_reductions} leaf / {s.axil_reductions} axil, "
        f"component pruned: {s.component_pruned}, work: {s.work}"
    )


@main.group()
def verify():
    """Exhaustive verification sweeps; exit status 1 on any violation or overrun."""


@verify.command("ring")
@click.option("--n-max", default=8, show_default=True)
@budget_option
@json_option
@_wrap_errors
def verify_ring(n_max: int, budget: int, as_json: bool):
    """No crossing Bell pairs on rings up to N-MAX."""
    report = verify_ring_no_crossing(n_max, budget=budget)
    _emit_report(report, as_json)


@verify.command("line")
@click.option("--n-max", default=8, show_default=True)
@budget_option
@json_option
@_wrap_errors
def verify_line(n_max: int, budget: int, as_json: bool):
    """No crossing Bell pairs on lines up to N-MAX."""
    report = verify_line_no_crossing(n_max, budget=budget)
    _emit_report(report, as_json)


def _emit_report(report, as_json: bool) -> None:
    if as_json:
        click.echo(json.dumps(report.as_dict(), indent=2))
    else:
        for line in report.summary_lines():
            click.echo(line)
    if not report.ok:
        sys.exit(1)


@verify.command("foliage")
@click.option("--n-max", default=6, show_default=True)
@json_option
@_wrap_errors
def verify_foliage(n_max: int, as_json: bool):
    """Foliage preservation under local complementation, exhaustive to n=6."""
    report = verify_foliage_invariance(n_max)
    _emit_report(report, as_json)


@main.group()
def demo():
    """Worked demonstrations."""


@demo.command("butterfly")
@json_option
@_wrap_errors
def demo_butterfly(as_json: bool):
    """Six-ring bottleneck demo: pairs (2,4)+(1,5) by measuring {3,6}; (1,4)+(2,5) with one CZ."""
    result = demo_ring_butterfly()
    if as_json:
        click.echo(json.dumps(result.as_dict(), indent=2))
        return
    for name, transcript in (("without CZ", result.no_cz), ("with CZ(3,6)", result.with_cz)):
        click.echo(f"{name}: achieved {transcript.achieved}")
        for step in transcript.steps:
            args = " ".join(str(a) for a in step.args)
            click.echo(f"  {step.op} {args} -> {serialize_graph(step.graph, 'edgelist')}")
    click.echo(
        "direct crossing (1,4)+(2,5) from the plain six-ring: "
        f"{'feasible' if result.direct_crossing.decision else 'infeasible'}"
    )


@main.command()
@click.option("--host", default=None, help="Bind address (defaults to LCGRAPH_ADDR or 127.0.0.1).")
@click.option("--port", default=None, type=int, help="Port (defaults to LCGRAPH_ADDR or 8000).")
def serve(host: str | None, port: int | None):
    """Run the HTTP session service for the interactive explorer."""
    import uvicorn

    env = os.environ.get("LCGRAPH_ADDR", "127.0.0.1:8000")
    env_host, _, env_port = env.rpartition(":")
    uvicorn.run(
        "lcgraph.service:app",
        host=host or env_host or "127.0.0.1",
        port=port or int(env_port or 8000),
    )


if __name__ == "__main__":
    main()
