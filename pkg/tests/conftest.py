import pytest

from polydecomp import delta_even, delta_odd, from_facets, make_polytope, polar_complex


@pytest.fixture(scope="session")
def d6():
    return delta_even(3)


@pytest.fixture(scope="session")
def d5():
    return delta_odd(3)


@pytest.fixture(scope="session")
def figure1():
    return polar_complex(make_polytope((3, 5), (2, 2, 2, 2)))


@pytest.fixture
def triangle():
    return from_facets([["a", "b"], ["b", "c"], ["c", "a"]])


@pytest.fixture
def tetra():
    return from_facets([list("abc"), list("abd"), list("acd"), list("bcd")])


@pytest.fixture
def square():
    return from_facets([["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]])


def simplex_boundary(d):
    """Boundary of the d-simplex: all d-subsets of d+1 vertices."""
    verts = [f"p{i}" for i in range(d + 1)]
    return from_facets([[v for v in verts if v != w] for w in verts])


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[key])
