import pytest

from pftzeta.model import standard

# Named fixture shifts; the letters match the acceptance fixture list.
FIXTURES = {
    "a_full_T1": standard("01", 1, []),
    "a_full_T2": standard("01", 2, []),
    "a_full_T3": standard("01", 3, []),
    "b_golden_mean": standard("01", 1, ["11"]),
    "c_T2_no11": standard("01", 2, ["11"]),
    "d_T3_no11": standard("01", 3, ["11"]),
    "e_T4_no00_11": standard("01", 4, ["00", "11"]),
    "f_empty": standard("01", 1, ["0", "1"]),
}

EXTRA = {
    "T4_no01_11": standard("01", 4, ["01", "11"]),
    "T2_empty": standard("01", 2, ["0", "1"]),
    "T2_l3": standard("01", 2, ["111", "010"]),
    "T6_no11": standard("01", 6, ["11"]),
    "abc_T2": standard("abc", 2, ["aa", "bc"]),
    "abc_T3": standard("abc", 3, ["ab", "ba", "cc"]),
    "T4_l1": standard("01", 4, ["1"]),
}


@pytest.fixture(params=sorted(FIXTURES))
def fixture_pft(request):
    return FIXTURES[request.param]


@pytest.fixture(params=sorted(FIXTURES) + sorted(EXTRA))
def any_pft(request):
    return {**FIXTURES, **EXTRA}[request.param]


_acceptance = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py" in report.nodeid and (report.when == "call" or report.failed):
        name = report.nodeid.split("::")[-1]
        _acceptance[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(_acceptance):
        terminalreporter.write_line(f"{_acceptance[name]}  {name.removeprefix('test_')}")
