from __future__ import annotations

import os

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from omarr.signvec import SignedPermutation, SignVector

settings.register_profile("default", max_examples=200, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def sv(text: str) -> SignVector:
    return SignVector.parse(text)


def svs(*texts: str) -> set[SignVector]:
    return {SignVector.parse(t) for t in texts}


@st.composite
def sign_vectors(draw, n: int | None = None, min_n: int = 1, max_n: int = 8):
    if n is None:
        n = draw(st.integers(min_n, max_n))
    signs = draw(st.lists(st.sampled_from((0, 1, -1)), min_size=n, max_size=n))
    return SignVector.from_signs(signs)


@st.composite
def vector_pairs(draw, count: int = 2, max_n: int = 8):
    n = draw(st.integers(1, max_n))
    return tuple(draw(sign_vectors(n)) for _ in range(count))


@st.composite
def signed_permutations(draw, n: int):
    perm = draw(st.permutations(range(n)))
    ori = draw(st.sets(st.integers(0, n - 1)))
    return SignedPermutation(tuple(perm), frozenset(ori))


@pytest.fixture(scope="session")
def catalog_entries():
    from omarr import catalog
    return catalog.entries()


@pytest.fixture(scope="session")
def coned_covectors(catalog_entries):
    """Covector set of the cone of every catalog arrangement, by entry name."""
    from omarr.arrangement import cone, covectors
    return {e.name: covectors(cone(e.arrangement)) for e in catalog_entries}


# acceptance lines recorded by test_acceptance.py, printed once at the end of the run
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
