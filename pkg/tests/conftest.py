import pytest

_VERDICTS: dict[int, list[tuple[bool, str]]] = {}


@pytest.fixture
def criterion(request):
    """Record one pass/fail line per acceptance criterion."""
    number = request.node.get_closest_marker("criterion").args[0]

    def record(ok: bool, detail: str):
        _VERDICTS.setdefault(number, []).append((bool(ok), detail))
        print(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        return ok
    return record


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_terminal_summary(terminalreporter):
    if not _VERDICTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_VERDICTS):
        runs = _VERDICTS[number]
        ok = all(flag for flag, _ in runs)
        detail = "; ".join(text for _, text in runs)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
