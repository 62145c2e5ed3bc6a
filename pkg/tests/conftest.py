import os
import sys
from collections import defaultdict

import pytest
from hypothesis import HealthCheck, settings

sys.path.insert(0, os.path.dirname(__file__))

from germcalc import real  # noqa: E402
from germcalc.germs import clear_caches  # noqa: E402

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


# Every conclusive real verdict produced anywhere in the run, keyed by (ideal, f).
REAL_VERDICTS: dict = defaultdict(set)


def _record(ideal_key, f_text, outcome, kind):
    REAL_VERDICTS[(ideal_key, f_text)].add((outcome.value, kind))


real.audit_hooks.append(_record)


def soundness_violations():
    """Pairs (I, f) that were both proved by certificates and refuted by a curve."""
    bad = []
    for key, seen in REAL_VERDICTS.items():
        outcomes = {o for o, _ in seen}
        if "proved" in outcomes and "refuted" in outcomes:
            bad.append((key, sorted(seen)))
    return bad


ACCEPTANCE_LINES: dict = {}


def pytest_collection_modifyitems(session, config, items):
    # the acceptance gate runs last so the soundness audit sees the whole suite
    items.sort(key=lambda it: it.fspath.basename == "test_acceptance.py")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    name = report.nodeid.split("::")[-1]
    if "test_acceptance.py" in report.nodeid and name.startswith("test_criterion_"):
        ACCEPTANCE_LINES[name] = "PASS" if report.passed else "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_LINES, key=lambda n: int(n.split("_")[2])):
        terminalreporter.write_line(f"{ACCEPTANCE_LINES[name]}  {name}")
    bad = soundness_violations()
    terminalreporter.write_line(f"real soundness audit: {len(REAL_VERDICTS)} (I, f) pairs, {len(bad)} violations")


@pytest.fixture(autouse=True)
def _fresh_caches():
    clear_caches()
    yield
