from functools import lru_cache

import pytest
from hypothesis import strategies as st

from pclatt.genlat import generate_all
from pclatt.implication import PCAlgebra
from pclatt.textio import fixture


@lru_cache(maxsize=None)
def small_lattices(max_n: int = 6):
    """Every lattice with 1..max_n elements, up to isomorphism."""
    return tuple(L for n in range(1, max_n + 1) for L in generate_all(n))


def lattices(max_n: int = 6):
    return st.sampled_from(small_lattices(max_n))


def idx(L, labels: str):
    """'a,b,1' -> frozenset of indices."""
    return L.parse_set(labels)


def row(L, f, xs=None):
    """Labels of f(x) over the elements (or xs), joined into one string."""
    xs = L.elements if xs is None else xs
    return "".join(L.label(f(x)) for x in xs)


@pytest.fixture(params=["fig1a", "fig1b", "fig1c"])
def fig(request):
    return request.param, fixture(request.param)


@pytest.fixture
def pc():
    return lambda name: PCAlgebra(fixture(name))
