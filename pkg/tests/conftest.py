import pytest

_criteria = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and not rep.passed):
        detail = "; ".join(f"{k}={v}" for k, v in item.user_properties)
        _criteria.append((marker.args[0], marker.args[1], rep.passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(_criteria):
        line = f"{'PASS' if passed else 'FAIL'}  [{number}] {title}"
        if detail:
            line += f"  ({detail})"
        terminalreporter.write_line(line)
