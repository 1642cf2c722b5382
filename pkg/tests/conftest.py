import pytest

ACCEPTANCE: list[tuple[str, bool, str]] = []


@pytest.fixture
def criterion(request):
    """Record one acceptance line: call ``criterion(detail)`` once the
    assertions are done; a test that raises is recorded as FAIL."""
    name = request.node.get_closest_marker("criterion").args[0]
    state = {"detail": ""}

    def done(detail: str = "") -> None:
        state["detail"] = detail

    yield done
    rep = getattr(request.node, "rep_call", None)
    ok = rep is not None and rep.passed
    if ok:
        detail = state["detail"]
    else:
        detail = str(rep.longrepr).strip().splitlines()[-1][:160] if rep is not None else "not run"
    ACCEPTANCE.append((name, ok, detail))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(name): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for name, ok, detail in ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {name}"
        terminalreporter.write_line(f"{line}  [{detail}]" if detail else line)
