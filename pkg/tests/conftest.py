import os

import pytest
from hypothesis import settings

from permucycle.treebuild import build_tree, find_base_tree

settings.register_profile("default", max_examples=200, deadline=None)
settings.register_profile("ci", max_examples=1000, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture(scope="session")
def base_tree():
    return find_base_tree()


@pytest.fixture(scope="session")
def trees(base_tree):
    out = {5: base_tree}
    for n in range(6, 9):
        out[n] = build_tree(n, base=out[n - 1])
    return out


# acceptance criteria report their verdicts here for the terminal summary
CRITERIA: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        ok, title = CRITERIA[num]
        terminalreporter.write_line(f"criterion {num:>2}: {'PASS' if ok else 'FAIL'}  {title}")
