import pytest

# criterion number -> (description, outcome, detail)
ACCEPTANCE: dict[int, list] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, description): acceptance criterion check")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    number, description = marker.args
    detail = getattr(item, "acceptance_detail", "")
    ACCEPTANCE[number] = [description, report.outcome, detail]


@pytest.fixture
def detail(request):
    """Attach a one-line measurement to the acceptance summary."""

    def note(text: str):
        request.node.acceptance_detail = text

    return note


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        description, outcome, detail = ACCEPTANCE[number]
        status = "PASS" if outcome == "passed" else "FAIL"
        line = f"[{status}] criterion {number}: {description}"
        if detail:
            line += f" ({detail})"
        terminalreporter.write_line(line)
