from fractions import Fraction

import pytest

from addcycles.exact_arith import parse_ratfunc


@pytest.fixture
def rf():
    return parse_ratfunc




# Acceptance results: (criterion, edition, status, detail), printed after the run.
ACCEPTANCE: list = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for cid, edition, status, detail in ACCEPTANCE:
        tr.write_line(f"{status:<4}  {cid:<14} [{edition}]  {detail}")
    tr.section("acceptance roll-up")
    groups: dict = {}
    for cid, edition, status, _ in ACCEPTANCE:
        key = (cid.split(".")[0], edition)
        groups[key] = groups.get(key, True) and status == "PASS"
    for (num, edition), ok in sorted(groups.items(), key=lambda kv: (kv[0][1] != "printed", int(kv[0][0]))):
        tr.write_line(f"{'PASS' if ok else 'FAIL':<4}  criterion {num:<3} [{edition}]")
