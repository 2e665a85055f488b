_titles: dict[str, tuple[int, str]] = {}
_status: dict[int, tuple[str, bool]] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark:
            _titles[item.nodeid] = mark.args


def pytest_runtest_logreport(report):
    if report.nodeid not in _titles or (report.when != "call" and report.passed):
        return
    num, title = _titles[report.nodeid]
    prev_ok = _status.get(num, (title, True))[1]
    _status[num] = (title, prev_ok and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _status:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_status):
        title, ok = _status[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {num}: {title}")
