from functools import lru_cache

import pytest

from artifact.catext import PointedModel
from artifact.lattice import build_pointed_mtc
from lattices import FIXTURES


@lru_cache(maxsize=None)
def built(name):
    return build_pointed_mtc(FIXTURES[name])


@lru_cache(maxsize=None)
def model(name):
    return PointedModel(built(name))


@pytest.fixture(scope="session")
def semion():
    return built("A1")


@pytest.fixture(scope="session")
def semion_model():
    return model("A1")


@pytest.fixture(scope="session")
def z4_model():
    return model("[[4]]")


@pytest.fixture(scope="session")
def z3_model():
    return model("A2")


ACCEPTANCE = {}  # criterion number -> summary line
WALL_LIMIT = 90.0


def record(number, name, ok, seconds, limit=None, detail=""):
    lim = f" (limit {limit:g} s)" if limit else ""
    extra = f"; {detail}" if detail else ""
    line = f"criterion {number} [{name}]: {'PASS' if ok else 'FAIL'} in {seconds:.2f} s{lim}{extra}"
    ACCEPTANCE[number] = line
    print(line)
    return line


def pytest_sessionstart(session):
    import time

    session.config._artifact_t0 = time.perf_counter()


def pytest_sessionfinish(session, exitstatus):
    import time

    elapsed = time.perf_counter() - session.config._artifact_t0
    if 9 in ACCEPTANCE:
        ok = elapsed < WALL_LIMIT
        ACCEPTANCE["9-wall"] = (
            f"criterion 9 [suite wall-clock]: {'PASS' if ok else 'FAIL'} in {elapsed:.1f} s (limit {WALL_LIMIT:g} s)"
        )
        if not ok:
            session.exitstatus = 1


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE, key=str):
        terminalreporter.write_line(ACCEPTANCE[key])
