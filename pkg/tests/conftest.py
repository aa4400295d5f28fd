from __future__ import annotations

import pytest

from hexcube import GenSpec, generate_q6, make_named

FIVE_EMBEDDABLE = (
    "cube",
    "prism(6)",
    "truncated_octahedron",
    "chamfered_cube",
    "twisted_chamfered_cube",
)


@pytest.fixture(scope="session")
def named_graphs():
    names = FIVE_EMBEDDABLE + (
        "tetrahedron",
        "truncated_tetrahedron",
        "octahedron",
        "icosahedron",
    )
    return {n: make_named(n) for n in names}


@pytest.fixture(scope="session")
def gen4_16():
    return generate_q6(GenSpec(q=4, n_max=16))


@pytest.fixture(scope="session")
def gen4_24():
    return generate_q6(GenSpec(q=4, n_max=24))


@pytest.fixture(scope="session")
def gen3_20():
    return generate_q6(GenSpec(q=3, n_max=20))
