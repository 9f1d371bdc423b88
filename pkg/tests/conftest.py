import importlib
import pkgutil

import pytest

import freeconv

_CRITERIA: dict[str, tuple[str, str]] = {}


def clear_caches() -> None:
    """Drop every memo table in the package so timings start cold."""
    for info in pkgutil.iter_modules(freeconv.__path__):
        if info.name == "__main__":
            continue
        mod = importlib.import_module(f"freeconv.{info.name}")
        for obj in vars(mod).values():
            if callable(getattr(obj, "cache_clear", None)):
                obj.cache_clear()


@pytest.fixture
def cold_caches():
    clear_caches()
    yield


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    label = marker.args[0] if marker.args else item.name
    if report.when == "call" or (report.when == "setup" and report.failed):
        status = "PASS" if report.passed else "FAIL"
        _CRITERIA[label] = (status, f"{report.duration:.2f}s")


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for label in sorted(_CRITERIA, key=lambda s: int(s.split()[0][2:])):
        status, took = _CRITERIA[label]
        terminalreporter.write_line(f"{status}  {label}  ({took})")
