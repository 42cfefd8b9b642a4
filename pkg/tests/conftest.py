import sys
from collections import defaultdict
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

_ACCEPTANCE = defaultdict(list)


@pytest.fixture
def criterion(request):
    """Record the outcome of one acceptance check under its criterion number."""

    def record(number, title, ok, detail=""):
        _ACCEPTANCE[number].append((title, ok, detail))
        assert ok, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        rows = _ACCEPTANCE[number]
        title = rows[0][0]
        failed = [d for _, ok, d in rows if not ok]
        status = "PASS" if not failed else "FAIL"
        line = f"{status} criterion {number}: {title} ({len(rows) - len(failed)}/{len(rows)} checks)"
        if failed:
            line += "; " + "; ".join(failed)
        tr.write_line(line)
