import pytest

from qcolour.corpus import CORPUS, fixture


@pytest.fixture(scope="session")
def corpus():
    return CORPUS


def graph_of(name):
    return fixture(name).graph


def rotation_of(name):
    return fixture(name).rotation


def complex_vec(rng, n):
    return rng.standard_normal(n) + 1j * rng.standard_normal(n)


def assert_close(a, b, tol=1e-9, msg=""):
    a, b = complex(a), complex(b)
    scale = max(1.0, abs(a), abs(b))
    assert abs(a - b) <= tol * scale, f"{msg} {a} != {b} (tol {tol})"
