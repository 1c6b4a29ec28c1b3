from __future__ import annotations

import sys

import pytest

import covertype as ct


def pytest_terminal_summary(terminalreporter):
    """Re-emit the acceptance pass/fail lines after the run."""
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sphere():
    return ct.load_bundled("sphere_4")


@pytest.fixture(scope="session")
def projective_plane():
    return ct.load_bundled("projective_plane_6")


@pytest.fixture(scope="session")
def torus():
    return ct.load_bundled("torus_7")


@pytest.fixture(scope="session")
def klein_bottle():
    return ct.load_bundled("klein_bottle_8")


@pytest.fixture(scope="session")
def n3_surface():
    return ct.load_bundled("nonorientable_genus3_9")


@pytest.fixture(scope="session")
def genus2():
    return ct.load_bundled("genus2_10")


@pytest.fixture(scope="session")
def side_sphere():
    return ct.load_bundled("side_sphere_5")


@pytest.fixture(scope="session")
def torus_wedge_circle():
    return ct.load_bundled("torus_wedge_circle_9")


@pytest.fixture(scope="session")
def m2_homotopy():
    return ct.load_bundled("m2_homotopy_9")
