"""Shared pytest plumbing: one-line verdict per acceptance criterion."""

import re

_ACCEPTANCE = {}
_PATTERN = re.compile(r"test_(c\d{2})_(\w+)")


def pytest_runtest_makereport(item, call):
    if call.when != "call" or "test_acceptance" not in item.nodeid:
        return
    m = _PATTERN.match(item.name)
    if m:
        _ACCEPTANCE[m.group(1)] = (call.excinfo is None, m.group(2))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        ok, name = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {key}  {name}")
