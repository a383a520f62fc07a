import os
import random
import time

import pytest
from hypothesis import HealthCheck, settings


settings.register_profile(
    "default", max_examples=60, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

# (number, title, passed, detail) for each acceptance criterion that ran
ACCEPTANCE = []
TIMINGS = {}


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240611)


@pytest.fixture(scope="session")
def gr36_atlas():
    """(rows, ideals, partition) for the 34 Gr(3,6) graphs; computed once per session."""
    from pdgn.atlas import atlas
    jobs = int(os.environ.get("PDGN_JOBS", os.cpu_count() or 1))
    started = time.perf_counter()
    result = atlas(jobs=jobs)
    TIMINGS["gr36_atlas"] = time.perf_counter() - started
    return result


@pytest.fixture(scope="session")
def acceptance():
    def record(number, title, passed, detail=""):
        line = (number, title, bool(passed), detail)
        ACCEPTANCE.append(line)
        print(format_line(line))
        return passed
    return record


def format_line(line):
    number, title, passed, detail = line
    text = f"criterion {number}: {'PASS' if passed else 'FAIL'}  {title}"
    return f"{text}  ({detail})" if detail else text


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE):
        terminalreporter.write_line(format_line(line))
