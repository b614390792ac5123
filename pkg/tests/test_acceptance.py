"""One test per acceptance criterion; each prints a PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines.
"""
import pytest

from semiheyting.config import RunConfig
from semiheyting.report import FAIL, INFO, PASS, verify_paper

CRITERIA = {
    1: "enumeration counts on chains of size 1..4",
    2: "corpus algebras and their printed witnesses",
    3: "variety relations on chains of size <= 4",
    4: "anti-Boolean bases agree",
    5: "arithmetic lemma suite",
    6: "SI members of CSH3 of size <= 3",
    7: "h/c term equivalence",
    8: "strong connexivity of the matrices",
    9: "proof checker on the bundled derivation",
    10: "AT1 implies WCOM (conjecture evidence only)",
}


@pytest.fixture(scope="module")
def report():
    return verify_paper(RunConfig(worker_count=1))


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(report, k):
    rows = report.criterion(k)
    checked = [r for r in rows if r.verdict != INFO]
    ok = bool(checked) and all(r.verdict == PASS for r in checked)
    print(f"\ncriterion {k:>2} ({CRITERIA[k]}): {'PASS' if ok else 'FAIL'}")
    for r in rows:
        print("   ", r.line())
    assert ok, [r.line() for r in checked if r.verdict == FAIL]


def test_conjecture_is_labelled_as_evidence(report):
    [row] = report.criterion(10)
    assert "evidence" in row.claim and "not a theorem" in row.claim


def test_report_independent_of_workers(report):
    assert verify_paper(RunConfig(worker_count=2)).to_json() == report.to_json()
