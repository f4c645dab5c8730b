"""Command-line front end.

Subcommands: grundy, reduce, moves, family, verify, scan, fan-table,
fstar-check. Input graphs use the line-based text format ("v N" then one
"e U V" per edge instance). Output is plain text or a JSON record; with
--no-timestamp the bytes are fully deterministic for fixed inputs.

Exit codes: 0 success, 1 verification failure, 2 input error, 3 budget
exhausted.
"""

from __future__ import annotations

import datetime
import json
import os
import sys
from typing import Dict, List, Optional

import click

from . import families, verify
from .cache import CacheFormatError, load_table, save_table
from .engine import (
    DEFAULT_BUDGET,
    BudgetExhausted,
    GrundyTable,
    grundy,
    move_values,
)
from .graph import (
    DeleteVertex,
    GraphInputError,
    format_graph,
    parse_graph_file,
    phi,
)
from .reducer import reduce_with_log

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _fail(code: int, message: str) -> None:
    click.echo(f"error: {message}", err=True)
    sys.exit(code)


def _timestamp(no_timestamp: bool) -> Optional[str]:
    if no_timestamp:
        return None
    return datetime.datetime.now().isoformat(timespec="seconds")


def _strip_runtimes(record: Dict[str, object]) -> None:
    # --no-timestamp promises byte-stable output; runtimes vary like clocks do
    record.pop("runtime", None)
    for sub in record.get("reports", ()):
        sub.pop("runtime", None)


def _emit(record: Dict[str, object], fmt: str, text_lines: List[str]) -> None:
    if fmt == "json":
        click.echo(json.dumps(record, sort_keys=True))
    else:
        for line in text_lines:
            click.echo(line)


def _move_str(move) -> str:
    if isinstance(move, DeleteVertex):
        return f"v {move.vertex}"
    return f"e {move.u} {move.v}"


class _Session:
    """Shared table wiring: load --cache before, save it back after."""

    def __init__(self, cache_path: Optional[str]) -> None:
        self.cache_path = cache_path
        self.table = GrundyTable()
        if cache_path and os.path.exists(cache_path):
            load_table(cache_path, self.table)

    def finish(self) -> None:
        if self.cache_path:
            save_table(self.table, self.cache_path)


def _common(fn):
    fn = click.option("--format", "fmt", type=click.Choice(["text", "json"]),
                      default="text", show_default=True,
                      help="output format")(fn)
    fn = click.option("--cache", "cache_path", type=click.Path(), default=None,
                      help="value-table file to load before and save after")(fn)
    fn = click.option("--budget", type=int, default=DEFAULT_BUDGET,
                      show_default=True,
                      help="table-lookup budget per evaluation")(fn)
    fn = click.option("--no-timestamp", is_flag=True,
                      help="omit the timestamp field for byte-stable output")(fn)
    return fn


@click.group()
def main() -> None:
    """Exact solver for the vertex-and-edge deletion game on multigraphs."""


@main.command("grundy")
@click.argument("input_file", type=click.Path())
@_common
def cmd_grundy(input_file: str, fmt: str, cache_path: Optional[str],
               budget: int, no_timestamp: bool) -> None:
    """Game value, parity value, per-move values and winning moves."""
    try:
        G = parse_graph_file(input_file)
    except (GraphInputError, OSError) as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        value = grundy(G, session.table, budget)
        valuations = move_values(G, session.table, budget)
    except BudgetExhausted as exc:
        session.finish()
        _fail(EXIT_BUDGET, str(exc))
    session.finish()
    winning = [mv.move for mv in valuations if mv.value == 0]
    record: Dict[str, object] = {
        "input": input_file,
        "value": value,
        "phi": phi(G),
        "moves": [{"move": _move_str(mv.move), "value": mv.value}
                  for mv in valuations],
        "winning_moves": [_move_str(m) for m in winning],
        "stats": session.table.stats(),
    }
    ts = _timestamp(no_timestamp)
    if ts:
        record["timestamp"] = ts
    lines = [
        f"value {value}",
        f"phi {phi(G)}",
        f"winner {'second-player' if value == 0 else 'first-player'}",
    ]
    lines += [f"move {_move_str(mv.move)} -> {mv.value}" for mv in valuations]
    lines += [f"winning {_move_str(m)}" for m in winning]
    if ts:
        lines.append(f"timestamp {ts}")
    _emit(record, fmt, lines)


@main.command("moves")
@click.argument("input_file", type=click.Path())
@_common
def cmd_moves(input_file: str, fmt: str, cache_path: Optional[str],
              budget: int, no_timestamp: bool) -> None:
    """Per-move option values only."""
    try:
        G = parse_graph_file(input_file)
    except (GraphInputError, OSError) as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        valuations = move_values(G, session.table, budget)
    except BudgetExhausted as exc:
        session.finish()
        _fail(EXIT_BUDGET, str(exc))
    session.finish()
    record = {
        "input": input_file,
        "moves": [{"move": _move_str(mv.move), "value": mv.value}
                  for mv in valuations],
    }
    ts = _timestamp(no_timestamp)
    if ts:
        record["timestamp"] = ts
    lines = [f"move {_move_str(mv.move)} -> {mv.value}" for mv in valuations]
    _emit(record, fmt, lines)


@main.command("reduce")
@click.argument("input_file", type=click.Path())
@click.option("-o", "--output", type=click.Path(), default=None,
              help="write the reduced graph here instead of stdout")
@_common
def cmd_reduce(input_file: str, output: Optional[str], fmt: str,
               cache_path: Optional[str], budget: int,
               no_timestamp: bool) -> None:
    """Value-preserving reduction, logging each cancellation."""
    try:
        G = parse_graph_file(input_file)
    except (GraphInputError, OSError) as exc:
        _fail(EXIT_INPUT, str(exc))
    reduced, steps, _mapping = reduce_with_log(G)
    text = format_graph(reduced, comment=f"reduced from {input_file}")
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    record = {
        "input": input_file,
        "vertices": reduced.n,
        "edges": reduced.edge_count,
        "cancellations": [
            {"anchor": s.anchor, "piece_size": s.piece_size} for s in steps
        ],
    }
    lines = [f"cancel anchor={s.anchor} piece_size={s.piece_size}"
             for s in steps]
    if not output:
        record["graph"] = text
        lines += text.splitlines()
    _emit(record, fmt, lines)


@main.command("family")
@click.argument("spec")
@click.option("-o", "--output", type=click.Path(), default=None,
              help="write the graph here instead of stdout")
def cmd_family(spec: str, output: Optional[str]) -> None:
    """Emit a named family member, e.g. "wheel:7" or "r:3:7,6,5,3"."""
    try:
        G = families.generate(spec)
    except GraphInputError as exc:
        _fail(EXIT_INPUT, str(exc))
    text = format_graph(G, comment=f"family {spec}")
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def _write_report_files(base: str, rows: List[List[str]], header: List[str],
                        figure_fn) -> None:
    with open(base + ".tsv", "w", encoding="utf-8") as fh:
        fh.write("\t".join(header) + "\n")
        for row in rows:
            fh.write("\t".join(row) + "\n")
    figure_fn(base + ".png")


@main.command("verify")
@click.option("--select", default=None,
              help="comma-separated claim ids (default: all)")
@click.option("--report", "report_dir", type=click.Path(), default=None,
              help="directory for the delimited report and figure")
@_common
def cmd_verify(select: Optional[str], report_dir: Optional[str], fmt: str,
               cache_path: Optional[str], budget: int,
               no_timestamp: bool) -> None:
    """Run the verification suite; nonzero exit if any claim fails."""
    ids = None
    if select:
        ids = [s.strip() for s in select.split(",") if s.strip()]
        unknown = [i for i in ids if i not in verify.claim_ids()]
        if unknown:
            _fail(EXIT_INPUT,
                  f"unknown claim(s) {', '.join(unknown)}; known: "
                  f"{', '.join(verify.claim_ids())}")
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    reports = verify.run_suite(ids, session.table, budget)
    session.finish()
    ts = _timestamp(no_timestamp)
    record = {
        "reports": [r.to_record() for r in reports],
        "failed": sum(r.status == verify.FAIL for r in reports),
        "skipped": sum(r.status == verify.SKIPPED for r in reports),
    }
    if ts:
        record["timestamp"] = ts
    if no_timestamp:
        _strip_runtimes(record)
    lines = []
    for r in reports:
        tail = "" if no_timestamp else f" ({r.runtime:.2f}s)"
        lines.append(f"{r.status.upper():7s} {r.claim_id}{tail}: {r.observed}")
    lines.append(f"{record['failed']} failed, {record['skipped']} skipped, "
                 f"{len(reports)} total")
    _emit(record, fmt, lines)
    if report_dir:
        os.makedirs(report_dir, exist_ok=True)
        from .figrender import render_verify_summary

        base = os.path.join(report_dir, "verify")
        rows = [[r.claim_id, r.status, f"{r.runtime:.3f}", r.expected,
                 r.observed.replace("\t", " ").replace("\n", " | ")]
                for r in reports]
        _write_report_files(
            base, rows, ["claim", "status", "runtime_s", "expected", "observed"],
            lambda png: render_verify_summary(reports, png))
    if record["failed"]:
        sys.exit(EXIT_VERIFY_FAIL)


@main.command("scan")
@click.argument("n", type=int)
@_common
def cmd_scan(n: int, fmt: str, cache_path: Optional[str], budget: int,
             no_timestamp: bool) -> None:
    """Check all wheel subgraphs with parity value 2 for a zero edge move."""
    if n < 3:
        _fail(EXIT_INPUT, "rim size must be at least 3")
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    rep = verify.scan_phi2_subgraphs(n, session.table, budget)
    session.finish()
    record = rep.to_record()
    ts = _timestamp(no_timestamp)
    if ts:
        record["timestamp"] = ts
    else:
        _strip_runtimes(record)
    lines = [f"{rep.status.upper()} {rep.claim_id}: {rep.observed}"]
    _emit(record, fmt, lines)
    if rep.status == verify.FAIL:
        sys.exit(EXIT_VERIFY_FAIL)
    if rep.status == verify.SKIPPED:
        sys.exit(EXIT_BUDGET)


@main.command("fan-table")
@click.argument("n", type=int)
@click.option("--variant", type=click.Choice(["fan", "fanhandle"]),
              default="fan", show_default=True)
@click.option("--report", "report_dir", type=click.Path(), default=None,
              help="directory for the delimited table and figure")
@_common
def cmd_fan_table(n: int, variant: str, report_dir: Optional[str], fmt: str,
                  cache_path: Optional[str], budget: int,
                  no_timestamp: bool) -> None:
    """Per-move value table of a fan, diffed against golden data if known."""
    try:
        G = families.fan(n) if variant == "fan" else families.fan_with_handle(n)
    except GraphInputError as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    try:
        value = grundy(G, session.table, budget)
        valuations = move_values(G, session.table, budget)
    except BudgetExhausted as exc:
        session.finish()
        _fail(EXIT_BUDGET, str(exc))
    session.finish()

    vertex_vals = {mv.move.vertex: mv.value for mv in valuations
                   if isinstance(mv.move, DeleteVertex)}
    edge_vals = {(mv.move.u, mv.move.v): mv.value for mv in valuations
                 if not isinstance(mv.move, DeleteVertex)}
    name = f"{'fan' if variant == 'fan' else 'fanhandle'}{n}"
    mismatches: List[str] = []
    try:
        golden = verify.load_golden_table(name)
    except FileNotFoundError:
        golden = None
    if golden is not None:
        if golden["g"] != value:
            mismatches.append(f"value: golden {golden['g']}, engine {value}")
        for v, want in golden["vertices"].items():
            if vertex_vals.get(v) != want:
                mismatches.append(
                    f"vertex {v}: golden {want}, engine {vertex_vals.get(v)}")
        for (u, v), want in golden["edges"].items():
            if edge_vals.get((u, v)) != want:
                mismatches.append(
                    f"edge {u}-{v}: golden {want}, engine {edge_vals.get((u, v))}")

    record = {
        "family": name,
        "value": value,
        "phi": phi(G),
        "vertices": {str(v): val for v, val in sorted(vertex_vals.items())},
        "edges": {f"{u}-{v}": val for (u, v), val in sorted(edge_vals.items())},
        "golden": "unknown" if golden is None else
                  ("match" if not mismatches else mismatches),
    }
    ts = _timestamp(no_timestamp)
    if ts:
        record["timestamp"] = ts
    lines = [f"family {name}", f"value {value}", f"phi {phi(G)}"]
    lines += [f"vertex {v} -> {val}" for v, val in sorted(vertex_vals.items())]
    lines += [f"edge {u} {v} -> {val}"
              for (u, v), val in sorted(edge_vals.items())]
    if golden is None:
        lines.append("golden: no golden table for this instance")
    elif not mismatches:
        lines.append("golden: match")
    else:
        lines += [f"golden mismatch: {m}" for m in mismatches]
    _emit(record, fmt, lines)

    if report_dir:
        os.makedirs(report_dir, exist_ok=True)
        from .figrender import fan_layout, render_option_diagram

        base = os.path.join(report_dir, name)
        rows = [["vertex", str(v), "", str(val)]
                for v, val in sorted(vertex_vals.items())]
        rows += [["edge", str(u), str(v), str(val)]
                 for (u, v), val in sorted(edge_vals.items())]
        _write_report_files(
            base, rows, ["kind", "u", "v", "value"],
            lambda png: render_option_diagram(
                G, fan_layout(n, variant), vertex_vals, edge_vals,
                f"{name}: value {value}, parity {phi(G)}", png))
    if mismatches:
        sys.exit(EXIT_VERIFY_FAIL)


@main.command("fstar-check")
@click.argument("n", type=int)
@_common
def cmd_fstar_check(n: int, fmt: str, cache_path: Optional[str], budget: int,
                    no_timestamp: bool) -> None:
    """Even fan with a handle: value stays 1 after removing any two spokes."""
    if n < 4 or n % 2 != 0:
        _fail(EXIT_INPUT, "defined for even rim sizes of at least 4")
    try:
        session = _Session(cache_path)
    except CacheFormatError as exc:
        _fail(EXIT_INPUT, str(exc))
    rep = verify.check_fstar_minus_spokes(n, session.table, budget)
    session.finish()
    record = rep.to_record()
    ts = _timestamp(no_timestamp)
    if ts:
        record["timestamp"] = ts
    else:
        _strip_runtimes(record)
    _emit(record, fmt,
          [f"{rep.status.upper()} {rep.claim_id}: {rep.observed}"])
    if rep.status == verify.FAIL:
        sys.exit(EXIT_VERIFY_FAIL)
    if rep.status == verify.SKIPPED:
        sys.exit(EXIT_BUDGET)


if __name__ == "__main__":
    main()
