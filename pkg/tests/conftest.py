import pytest

CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record one acceptance criterion's verdict; call with (number, description)."""

    def record(number, description):
        CRITERIA[number] = [description, None]
        request.node._criterion = number
        return number

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    number = getattr(item, "_criterion", None)
    if number is not None and report.when == "call":
        CRITERIA[number][1] = report.passed
        verdict = "PASS" if report.passed else "FAIL"
        print(f"\ncriterion {number:2d}: {verdict}  {CRITERIA[number][0]}")


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(CRITERIA):
        description, passed = CRITERIA[number]
        verdict = {True: "PASS", False: "FAIL", None: "NOT RUN"}[passed]
        terminalreporter.write_line(f"criterion {number:2d}: {verdict}  {description}")
