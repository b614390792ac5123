import pytest

from semiheyting.algebra import corpus
from semiheyting.enumeration import enumerate_sh
from semiheyting.lattice import BOOLEAN_4, make_chain


@pytest.fixture(scope="session")
def C():
    return corpus()


@pytest.fixture(scope="session")
def small_algebras():
    """Every SH algebra on a lattice with at most four elements."""
    algs = [A for n in range(1, 5) for A in enumerate_sh(make_chain(n))]
    return algs + list(enumerate_sh(BOOLEAN_4))
