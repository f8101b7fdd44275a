"""Command-line front end.

Graphs come in as graph6 strings (arguments or stdin lines) or as one
edge-list file. Results go out as human-readable text, one JSON document,
or JSON lines. Exit codes: 0 success, 1 verification found failures,
2 bad usage or unparseable input, 3 a scale guard refused the computation,
4 an internal cross-check failed.
"""

from __future__ import annotations

import json
import sys
from typing import Iterator

import click

from .corpus import CorpusKind, CorpusSpec
from .errors import GraphFormatError, InvariantViolationError, ScaleLimitError
from .graphs import Graph, parse_edge_list, parse_graph6, to_graph6
from .matching import gallai_edmonds, matching_number
from .nullity import per_nullity_structural
from .permanental import (
    per_nullity_oracle,
    perm_polynomial_interpolation,
    perm_polynomial_sachs,
)
from .verify import CHECKS, run_verification

EXIT_PARSE = 2
EXIT_SCALE = 3
EXIT_INVARIANT = 4


def _die(code: int, message: str) -> "None":
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _read_graphs(graphs: tuple[str, ...], edges: str | None) -> Iterator[Graph]:
    """Yield input graphs in order; parse failures abort with exit 2."""
    if edges is not None and graphs:
        _die(EXIT_PARSE, "give graph6 arguments or --edges, not both")
    if edges is not None:
        try:
            with open(edges, "r", encoding="ascii") as fh:
                yield parse_edge_list(fh.read())
        except OSError as e:
            _die(EXIT_PARSE, f"cannot read {edges}: {e}")
        except GraphFormatError as e:
            _die(EXIT_PARSE, f"{edges}: {e}")
        return
    if graphs:
        source: Iterator[tuple[int, str]] = enumerate(graphs, start=1)
        where = "argument"
    else:
        source = enumerate(sys.stdin, start=1)
        where = "line"
    for pos, raw in source:
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield parse_graph6(line)
        except GraphFormatError as e:
            _die(EXIT_PARSE, f"{where} {pos}: {e}")


def _guarded(fn):
    """Run ``fn``, translating package errors to exit codes."""
    try:
        return fn()
    except ScaleLimitError as e:
        _die(EXIT_SCALE, str(e))
    except InvariantViolationError as e:
        _die(EXIT_INVARIANT, str(e))
    except GraphFormatError as e:
        _die(EXIT_PARSE, str(e))


def _emit(records: list[dict], fmt: str, text_lines: list[str]) -> None:
    if fmt == "text":
        for line in text_lines:
            click.echo(line)
    elif fmt == "jsonl":
        for rec in records:
            click.echo(json.dumps(rec, separators=(",", ":")))
    else:
        doc = records[0] if len(records) == 1 else records
        click.echo(json.dumps(doc, separators=(",", ":")))


_FMT = click.Choice(["text", "json", "jsonl"])


@click.group()
def main() -> None:
    """Permanental nullity of graphs: structure theory vs. exact oracles."""


@main.command()
@click.argument("graphs", nargs=-1)
@click.option("--edges", type=click.Path(), default=None, help="Edge-list file (first line n, then 'u v' per line).")
@click.option("--format", "fmt", type=_FMT, default="text", show_default=True)
@click.option("--oracle", is_flag=True, help="Also run the exact polynomial oracle and cross-check.")
@click.option("--method", type=click.Choice(["sachs", "interp", "both"]), default="sachs", show_default=True, help="Oracle route.")
@click.option("--unsafe-override-guards", is_flag=True, help="Accept exponential runtime beyond the size guards.")
def nullity(graphs, edges, fmt, oracle, method, unsafe_override_guards):
    """Per-graph nullity report from matching structure."""
    records, lines = [], []
    for g in _read_graphs(graphs, edges):
        def compute(g=g):
            rep = per_nullity_structural(
                g,
                with_oracle=oracle,
                oracle_method="sachs" if method == "both" else method,
                unsafe_override_guards=unsafe_override_guards,
            )
            if oracle and method == "both":
                other = per_nullity_oracle(
                    g,
                    method="interp",
                    unsafe_override_guards=unsafe_override_guards,
                )
                if other != rep.eta_oracle:
                    raise InvariantViolationError(
                        f"oracle routes disagree: sachs {rep.eta_oracle}, "
                        f"interpolation {other}",
                        graph6=rep.graph6,
                    )
            return rep
        rep = _guarded(compute)
        records.append(rep.to_json_dict())
        tail = f"  eta_oracle={rep.eta_oracle}" if rep.eta_oracle is not None else ""
        lines.append(
            f"{rep.graph6}  n={rep.n}  nu={rep.nu}  m={rep.m_stat}  "
            f"eta={rep.eta_structural}  case={rep.case_fired}{tail}"
        )
    _emit(records, fmt, lines)


@main.command()
@click.argument("graphs", nargs=-1)
@click.option("--edges", type=click.Path(), default=None)
@click.option("--format", "fmt", type=_FMT, default="text", show_default=True)
def decompose(graphs, edges, fmt):
    """Exposable/boundary/covered partition with its component split."""
    records, lines = [], []
    for g in _read_graphs(graphs, edges):
        dec = _guarded(lambda g=g: gallai_edmonds(g))
        nu = matching_number(g)
        comps = [vs.sorted() for vs in dec.d_components]
        singles = sorted(comps[i][0] for i in dec.d0)
        large = [comps[i] for i in dec.f]
        nu_formula = (g.n - len(comps) + len(dec.b)) // 2
        g6 = to_graph6(g)
        records.append(
            {
                "graph6": g6,
                "n": g.n,
                "d": dec.d.sorted(),
                "b": dec.b.sorted(),
                "c": dec.c.sorted(),
                "components": comps,
                "singletons": singles,
                "large": large,
                "nu": nu,
                "nu_formula": nu_formula,
            }
        )
        lines += [
            f"{g6}  n={g.n}",
            f"  D = {dec.d.sorted()}",
            f"  B = {dec.b.sorted()}",
            f"  C = {dec.c.sorted()}",
            f"  components of G[D] = {comps}",
            f"  singletons = {singles}",
            f"  large components = {large}",
            f"  nu = {nu}  (formula gives {nu_formula})",
        ]
    _emit(records, fmt, lines)


@main.command()
@click.argument("graphs", nargs=-1)
@click.option("--edges", type=click.Path(), default=None)
@click.option("--format", "fmt", type=_FMT, default="text", show_default=True)
@click.option("--method", type=click.Choice(["sachs", "interp", "both"]), default="sachs", show_default=True)
@click.option("--unsafe-override-guards", is_flag=True)
def polynomial(graphs, edges, fmt, method, unsafe_override_guards):
    """Coefficients b_0..b_n of per(xI - A), leading first."""
    records, lines = [], []
    for g in _read_graphs(graphs, edges):
        def compute(g=g):
            if method in ("sachs", "both"):
                ps = perm_polynomial_sachs(
                    g, unsafe_override_guards=unsafe_override_guards
                )
            if method in ("interp", "both"):
                pi = perm_polynomial_interpolation(
                    g, unsafe_override_guards=unsafe_override_guards
                )
            if method == "both":
                if ps.coeffs != pi.coeffs:
                    raise InvariantViolationError(
                        "polynomial routes disagree: "
                        f"sachs {list(ps.coeffs)}, interpolation {list(pi.coeffs)}",
                        graph6=to_graph6(g),
                    )
                return ps
            return ps if method == "sachs" else pi
        poly = _guarded(compute)
        records.append(
            {
                "graph6": to_graph6(g),
                "n": g.n,
                "method": method,
                "coefficients": [str(c) for c in poly.coeffs],
            }
        )
        lines.append(" ".join(str(c) for c in poly.coeffs))
    _emit(records, fmt, lines)


@main.command()
@click.option("--all-labeled", "all_labeled", type=int, default=None, metavar="N", help="Every labeled graph on 1..N vertices.")
@click.option("--connected", type=int, default=None, metavar="N", help="Every connected labeled graph on 1..N vertices.")
@click.option("--unicyclic", type=int, default=None, metavar="COUNT", help="COUNT seeded random one-cycle graphs at size --n.")
@click.option("--n", "size", type=int, default=None, help="Graph size for the random families.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--checks", default=None, metavar="A,B,...", help="Comma-separated check names (default: all).")
@click.option("--format", "fmt", type=_FMT, default="text", show_default=True)
@click.option("--unsafe-override-guards", is_flag=True)
def verify(all_labeled, connected, unicyclic, size, seed, checks, fmt, unsafe_override_guards):
    """Run invariant checks over a corpus; exit 0 only if all pass."""
    chosen = [x for x in (all_labeled, connected, unicyclic) if x is not None]
    if len(chosen) != 1:
        raise click.UsageError(
            "choose exactly one corpus: --all-labeled, --connected, or --unicyclic"
        )
    if all_labeled is not None:
        spec = CorpusSpec(kind=CorpusKind.ALL_LABELED, n_range=(1, all_labeled))
    elif connected is not None:
        spec = CorpusSpec(
            kind=CorpusKind.ALL_CONNECTED_LABELED, n_range=(1, connected)
        )
    else:
        if size is None:
            raise click.UsageError("--unicyclic needs --n")
        spec = CorpusSpec(
            kind=CorpusKind.RANDOM_UNICYCLIC,
            n_range=(size, size),
            count=unicyclic,
            seed=seed,
        )
    names = sorted(CHECKS) if checks is None else checks.split(",")

    def compute():
        try:
            return run_verification(
                spec, names, unsafe_override_guards=unsafe_override_guards
            )
        except ValueError as e:
            _die(EXIT_PARSE, str(e))

    result = _guarded(compute)
    if fmt == "text":
        click.echo(result.to_table())
    else:
        click.echo(result.to_json())
    if not result.ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
