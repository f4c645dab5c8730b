"""Acceptance gate: every claim of the verification suite must pass.

One test per criterion, in suite order, each printing its own pass/fail
line (run pytest with -s or check the captured output). All values are
exact integers; there are no tolerances to tune. The session-scoped table
is shared so later positions reuse earlier work, matching warm-cache use.
"""

import pytest

from graphchomp.verify import PASS, run_claim

CRITERIA = [
    ("triangle-and-pendant", 1),
    ("bipartite-parity", 2),
    ("disjoint-union", 3),
    ("reduction-invariance", 4),
    ("complete-graphs", 5),
    ("complete-with-loops", 6),
    ("cycles-and-loop", 7),
    ("unbounded-families", 8),
    ("branch-paths", 9),
    ("cycle-bouquets", 10),
    ("two-hub-paths", 11),
    ("one-attachment-split", 12),
    ("two-attachment-parity", 13),
    ("staircase-mex", 14),
    ("wheels-small", 15),
    ("punctured-wheels", 16),
    ("fan-option-tables", 17),
    ("clique-amalgams", 18),
    ("phi2-edge-scan", 19),
    ("tail-sequence", 20),
]


@pytest.mark.parametrize(
    "claim_id, number", CRITERIA,
    ids=[f"{num:02d}-{cid}" for cid, num in CRITERIA])
def test_criterion(claim_id, number, table):
    report = run_claim(claim_id, table)
    line = (f"criterion {number:2d} {report.status.upper():7s} "
            f"{claim_id} ({report.runtime:.2f}s): {report.observed}")
    print(line)
    assert report.status == PASS, line
