from fractions import Fraction

import pytest

from ppgroups.moebius import ProjMap
from ppgroups.piecewise import PiecewisePP

HALF = Fraction(1, 2)

# the three maps a, b, c written down directly from their piece formulas
A_MAP = PiecewisePP.translation(1)
B_MAP = PiecewisePP([0, HALF, 1], [ProjMap.identity(), ProjMap(1, 0, -1, 1),
                                   ProjMap(3, -1, 1, 0), ProjMap(1, 1, 0, 1)])
C_MAP = PiecewisePP([0, 1], [ProjMap.identity(), ProjMap(2, 0, 1, 1), ProjMap.identity()])


@pytest.fixture
def abc():
    return A_MAP, B_MAP, C_MAP


# -- acceptance report ------------------------------------------------------

_criteria: dict[int, tuple[str, str]] = {}


def pytest_runtest_logreport(report):
    mark = getattr(report, "criterion", None)
    if mark is None:
        return
    number, title = mark
    if report.when == "call" or report.outcome != "passed":
        if number not in _criteria or _criteria[number][1] == "PASS":
            _criteria[number] = (title, "PASS" if report.passed else "FAIL")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    mark = item.get_closest_marker("criterion")
    if mark is not None:
        outcome.get_result().criterion = mark.args


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        title, verdict = _criteria[number]
        terminalreporter.write_line(f"criterion {number}: {verdict}  {title}")
