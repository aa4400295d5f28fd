from __future__ import annotations

import random

import pytest

from hexcube import (
    PlaneGraph,
    are_isomorphic,
    automorphism_count,
    canonical_code,
    is_chiral,
    mirror,
)


def shuffled_copy(g: PlaneGraph, rng: random.Random) -> PlaneGraph:
    """Relabel vertices and rotate each neighbor list: same map, new labels."""
    perm = list(range(g.n_vertices))
    rng.shuffle(perm)
    rotations = [None] * g.n_vertices
    for v, nbrs in enumerate(g.neighbors):
        k = rng.randrange(len(nbrs))
        rotations[perm[v]] = [perm[w] for w in nbrs[k:] + nbrs[:k]]
    return PlaneGraph.from_rotations(rotations)


@pytest.mark.parametrize("name", ["cube", "prism(6)", "truncated_octahedron", "tetrahedron"])
def test_code_invariant_under_relabeling(name, named_graphs):
    g = named_graphs[name]
    code = canonical_code(g)
    rng = random.Random(7)
    for _ in range(5):
        assert canonical_code(shuffled_copy(g, rng)) == code


def test_chamfered_and_twist_differ(named_graphs):
    assert canonical_code(named_graphs["chamfered_cube"]) != canonical_code(
        named_graphs["twisted_chamfered_cube"]
    )


def test_mirror_cube_same_code(named_graphs):
    g = named_graphs["cube"]
    assert canonical_code(mirror(g)) == canonical_code(g)
    # the cube even has an orientation-reversing automorphism
    assert canonical_code(mirror(g), include_reflection=False) == canonical_code(
        g, include_reflection=False
    )


def test_explicit_isomorphism_search_agrees(named_graphs):
    rng = random.Random(21)
    graphs = [named_graphs[n] for n in ("cube", "prism(6)", "tetrahedron", "octahedron")]
    for g in graphs:
        assert are_isomorphic(g, shuffled_copy(g, rng))
    for g in graphs:
        for h in graphs:
            same_code = canonical_code(g) == canonical_code(h)
            assert are_isomorphic(g, h) == same_code


def test_automorphism_orders(named_graphs):
    expected = {
        "cube": 48,
        "tetrahedron": 24,
        "prism(6)": 24,
        "truncated_octahedron": 48,
        "chamfered_cube": 48,
        "twisted_chamfered_cube": 12,
        "icosahedron": 120,
        "octahedron": 48,
    }
    for name, order in expected.items():
        assert automorphism_count(named_graphs[name]) == order, name


def test_named_graphs_achiral(named_graphs):
    for name, g in named_graphs.items():
        assert not is_chiral(g), name
