from __future__ import annotations

import pytest

import faceenum as fe


@pytest.fixture(scope="session")
def cp2():
    return fe.catalog("cp2_9", verify="full").payload


@pytest.fixture(scope="session")
def s2xs2():
    return fe.catalog("s2xs2_sum", verify="full").payload


@pytest.fixture(scope="session")
def bipyramid():
    return fe.catalog("bipyramid").payload  # (complex, coloring)


@pytest.fixture(scope="session")
def torus_poset():
    return fe.catalog("torus_poset").payload


@pytest.fixture(scope="session")
def kl11():
    return fe.kuhnel_lassmann(11, 2)


def rp2_six():
    """The 6-vertex real projective plane."""
    return fe.from_facets(
        [[1, 2, 3], [1, 2, 4], [1, 3, 5], [1, 4, 6], [1, 5, 6],
         [2, 3, 6], [2, 4, 5], [2, 5, 6], [3, 4, 5], [3, 4, 6]]
    )
