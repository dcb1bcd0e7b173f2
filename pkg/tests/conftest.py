import os

import pytest

VERDICTS: list[str] = []


def pytest_collection_modifyitems(config, items):
    if os.environ.get("TRIGMONO_SLOW") == "1":
        return
    skip = pytest.mark.skip(reason="slow; set TRIGMONO_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if VERDICTS:
        terminalreporter.section("acceptance criteria")
        for line in VERDICTS:
            terminalreporter.write_line(line)
