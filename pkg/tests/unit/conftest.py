"""Shared fixtures for unit tests."""

import pytest
from dotenv import load_dotenv
from hypothesis import strategies as st

from thompson.algebra import SimpleWord, make_signature, simple_expansion, standard_basis
from thompson.automorphism import Automorphism, from_map, load_example
from thompson.config import Config
from thompson.orbits import quasi_normal_basis


@pytest.fixture(scope="session", autouse=True)
def load_env():
    """Load environment variables from .env file for all tests."""
    load_dotenv()


@pytest.fixture(autouse=True)
def fresh_config(tmp_path, monkeypatch):
    """Give every test default limits from an empty workspace."""
    monkeypatch.setenv("THOMPSON_WORKSPACE", str(tmp_path))
    Config.reset_instance()
    yield
    Config.reset_instance()
    quasi_normal_basis.cache_clear()


@pytest.fixture
def sig():
    """V_{2,1}."""
    return make_signature(2, 1)


@pytest.fixture
def x():
    """Shorthand for simple words of V_{n,1}: x(1, 2) is x1 a1 a2."""

    def build(*path: int) -> SimpleWord:
        return SimpleWord(1, tuple(path))

    return build


@pytest.fixture
def example():
    """Loader for the bundled example automorphisms."""
    return load_example


@pytest.fixture
def random_element(sig):
    """Draw a random element of G_{2,1} from hypothesis data.

    Both bases are grown by the same number of simple expansions at drawn leaves,
    then matched by a drawn permutation.
    """

    def build(data, max_expansions: int = 2) -> Automorphism:
        expansions = data.draw(st.integers(min_value=0, max_value=max_expansions))
        bases = []
        for _ in range(2):
            basis = standard_basis(sig)
            for _ in range(expansions):
                basis = simple_expansion(basis, data.draw(st.sampled_from(basis.leaves)))
            bases.append(basis)
        domain, range_ = bases
        images = data.draw(st.permutations(range_.leaves))
        return from_map(sig, zip(domain.leaves, images, strict=True))

    return build
