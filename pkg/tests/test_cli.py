"""CLI subcommands, output formats, exit codes, cache files, reports."""

import json

import pytest
from click.testing import CliRunner

from graphchomp.cache import CacheFormatError, load_table, save_table
from graphchomp.canon import canonical_key
from graphchomp.cli import main
from graphchomp.engine import GrundyTable, grundy
from graphchomp.graph import build_graph, format_graph, parse_graph

TRIANGLE_FILE = "v 3\ne 0 1\ne 1 2\ne 2 0\n"
FIG_FILE = "v 4\ne 0 1\ne 1 2\ne 2 0\ne 2 3\n"


@pytest.fixture()
def runner():
    return CliRunner()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def test_grundy_triangle(runner, tmp_path):
    path = tmp_path / "tri.graph"
    _write(path, TRIANGLE_FILE)
    result = runner.invoke(main, ["grundy", str(path), "--no-timestamp"])
    assert result.exit_code == 0
    assert "value 0" in result.output
    assert "winning" not in result.output  # a lost position has no winning move


def test_grundy_json_record(runner, tmp_path):
    path = tmp_path / "fig.graph"
    _write(path, FIG_FILE)
    result = runner.invoke(
        main, ["grundy", str(path), "--format", "json", "--no-timestamp"])
    assert result.exit_code == 0
    record = json.loads(result.output)
    assert record["value"] == 4
    assert record["phi"] == 0
    assert sorted({m["value"] for m in record["moves"]}) == [0, 1, 2, 3]
    assert record["winning_moves"] == ["v 3"]  # strip back to the bare triangle
    assert set(record["stats"]) == {"entries", "hits", "misses", "inserts"}
    assert "timestamp" not in record


def test_grundy_empty_graph(runner, tmp_path):
    path = tmp_path / "empty.graph"
    _write(path, "v 0\n")
    result = runner.invoke(
        main, ["grundy", str(path), "--format", "json", "--no-timestamp"])
    assert json.loads(result.output)["value"] == 0


def test_grundy_deterministic_output(runner, tmp_path):
    path = tmp_path / "tri.graph"
    _write(path, TRIANGLE_FILE)
    a = runner.invoke(main, ["grundy", str(path), "--no-timestamp"]).output
    b = runner.invoke(main, ["grundy", str(path), "--no-timestamp"]).output
    assert a == b


def test_grundy_parse_error_exit_2(runner, tmp_path):
    path = tmp_path / "bad.graph"
    _write(path, "v 2\ne 0 9\n")
    result = runner.invoke(main, ["grundy", str(path)])
    assert result.exit_code == 2
    assert ":2:" in result.output


def test_grundy_budget_exit_3(runner, tmp_path):
    path = tmp_path / "k5.graph"
    from graphchomp.families import complete

    _write(path, format_graph(complete(5)))
    result = runner.invoke(main, ["grundy", str(path), "--budget", "5"])
    assert result.exit_code == 3


def test_moves_subcommand(runner, tmp_path):
    path = tmp_path / "p2.graph"
    _write(path, "v 2\ne 0 1\n")
    result = runner.invoke(
        main, ["moves", str(path), "--format", "json", "--no-timestamp"])
    moves = {m["move"]: m["value"] for m in json.loads(result.output)["moves"]}
    assert moves == {"v 0": 1, "v 1": 1, "e 0 1": 0}


def test_reduce_subcommand(runner, tmp_path):
    src = tmp_path / "p3.graph"
    out = tmp_path / "reduced.graph"
    _write(src, "v 3\ne 0 1\ne 1 2\n")
    result = runner.invoke(main, ["reduce", str(src), "-o", str(out)])
    assert result.exit_code == 0
    assert "cancel anchor=1 piece_size=1" in result.output
    assert parse_graph(out.read_text()) == build_graph(1)


def test_reduce_no_cancellation(runner, tmp_path):
    src = tmp_path / "tri.graph"
    _write(src, TRIANGLE_FILE)
    result = runner.invoke(
        main, ["reduce", str(src), "--format", "json", "--no-timestamp"])
    record = json.loads(result.output)
    assert record["cancellations"] == []


def test_family_output_round_trips(runner, tmp_path):
    result = runner.invoke(main, ["family", "wheel:5"])
    from graphchomp.families import wheel

    assert parse_graph(result.output) == wheel(5)
    result = runner.invoke(main, ["family", "nosuch:1"])
    assert result.exit_code == 2


def test_verify_selection(runner):
    result = runner.invoke(main, [
        "verify", "--select", "triangle-and-pendant,staircase-mex",
        "--no-timestamp"])
    assert result.exit_code == 0
    assert result.output.count("PASS") == 2
    result = runner.invoke(main, ["verify", "--select", "bogus"])
    assert result.exit_code == 2


def test_verify_report_files(runner, tmp_path):
    rep = tmp_path / "rep"
    result = runner.invoke(main, [
        "verify", "--select", "staircase-mex", "--report", str(rep),
        "--no-timestamp"])
    assert result.exit_code == 0
    assert (rep / "verify.tsv").exists()
    assert (rep / "verify.png").exists()
    header = (rep / "verify.tsv").read_text().splitlines()[0]
    assert header.split("\t") == ["claim", "status", "runtime_s",
                                  "expected", "observed"]


def test_scan_small(runner):
    result = runner.invoke(main, ["scan", "3", "--no-timestamp"])
    assert result.exit_code == 0
    assert "PASS" in result.output


def test_scan_budget_exit_3(runner):
    result = runner.invoke(main, ["scan", "5", "--budget", "3"])
    assert result.exit_code == 3


def test_fan_table_golden_match(runner, tmp_path):
    rep = tmp_path / "fanrep"
    result = runner.invoke(main, [
        "fan-table", "6", "--report", str(rep), "--no-timestamp"])
    assert result.exit_code == 0
    assert "golden: match" in result.output
    assert (rep / "fan6.tsv").exists() and (rep / "fan6.png").exists()


def test_fan_table_without_golden(runner):
    result = runner.invoke(
        main, ["fan-table", "4", "--variant", "fanhandle", "--no-timestamp"])
    assert result.exit_code == 0
    assert "no golden table" in result.output


def test_fstar_check(runner):
    result = runner.invoke(main, ["fstar-check", "4", "--no-timestamp"])
    assert result.exit_code == 0
    result = runner.invoke(main, ["fstar-check", "5"])
    assert result.exit_code == 2


# --- cache files -----------------------------------------------------------------

def test_cache_round_trip(tmp_path):
    table = GrundyTable()
    grundy(build_graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)]), table)
    path = tmp_path / "values.cache"
    save_table(table, str(path))
    loaded = load_table(str(path))
    assert loaded.entries == table.entries


def test_cache_empty_table(tmp_path):
    path = tmp_path / "empty.cache"
    save_table(GrundyTable(), str(path))
    assert load_table(str(path)).entries == {}


def test_cache_warm_replay_identical(tmp_path):
    G = build_graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    cold = GrundyTable()
    value = grundy(G, cold)
    path = tmp_path / "values.cache"
    save_table(cold, str(path))
    warm = load_table(str(path))
    assert grundy(G, warm) == value
    assert warm.hits > 0


def test_cache_rejects_unknown_version(tmp_path):
    path = tmp_path / "bad.cache"
    path.write_text("graphchomp-grundy-cache 99\n")
    with pytest.raises(CacheFormatError, match="version"):
        load_table(str(path))


def test_cache_rejects_corrupt_line(tmp_path):
    path = tmp_path / "bad.cache"
    key = canonical_key(build_graph(1)).hex()
    path.write_text(f"graphchomp-grundy-cache 1\n{key} 1\nnot-hex nope\n")
    with pytest.raises(CacheFormatError, match=":3:"):
        load_table(str(path))


def test_cli_cache_flag_persists(runner, tmp_path):
    graph_path = tmp_path / "tri.graph"
    cache_path = tmp_path / "values.cache"
    _write(graph_path, TRIANGLE_FILE)
    r1 = runner.invoke(main, [
        "grundy", str(graph_path), "--cache", str(cache_path),
        "--format", "json", "--no-timestamp"])
    assert r1.exit_code == 0
    assert cache_path.exists()
    r2 = runner.invoke(main, [
        "grundy", str(graph_path), "--cache", str(cache_path),
        "--format", "json", "--no-timestamp"])
    first = json.loads(r1.output)
    second = json.loads(r2.output)
    assert first["value"] == second["value"]
    assert first["moves"] == second["moves"]
    assert second["stats"]["hits"] > 0


def test_scan_results_independent_of_warmth():
    from graphchomp.verify import scan_phi2_subgraphs
    from graphchomp.families import wheel

    cold = scan_phi2_subgraphs(4)
    warm_table = GrundyTable()
    grundy(wheel(4), warm_table)
    warm = scan_phi2_subgraphs(4, warm_table)
    assert (cold.status, cold.observed) == (warm.status, warm.observed)


def test_verify_output_byte_stable(runner):
    args = ["verify", "--select", "staircase-mex,complete-graphs",
            "--format", "json", "--no-timestamp"]
    a = runner.invoke(main, args).output
    b = runner.invoke(main, args).output
    assert a == b
    assert "runtime" not in a
