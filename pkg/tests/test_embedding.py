from __future__ import annotations

import numpy as np
import pytest

from hexcube import (
    HypercubeEmbedding,
    NonBipartiteError,
    PlaneGraph,
    all_pairs_distances,
    five_gonal_scan,
    is_five_gonal,
    recognize_partial_cube,
    search_halfcube_embedding,
    search_scale_embedding,
    t_embed_obstruction,
    theta_classes,
    verify_scale_embedding,
)
from hexcube.named import prism
from hexcube.plane_graph import dual


def k23() -> PlaneGraph:
    return PlaneGraph.from_faces([(0, 2, 1, 3), (0, 3, 1, 4), (0, 4, 1, 2)])


def subdivided_k4() -> PlaneGraph:
    return PlaneGraph.from_faces(
        [(0, 4, 1, 5, 2, 6), (0, 7, 3, 8, 1, 4), (1, 8, 3, 9, 2, 5), (2, 9, 3, 7, 0, 6)]
    )


def test_theta_class_counts(named_graphs):
    assert theta_classes(named_graphs["cube"]).m == 3
    assert theta_classes(named_graphs["prism(6)"]).m == 4
    path = PlaneGraph.from_rotations([[1], [0, 2], [1, 3], [2]])
    th = theta_classes(path)
    assert th.m == 3 and len(set(th.class_of)) == 3


def test_theta_cube_classes_are_parallel_quadruples(named_graphs):
    th = theta_classes(named_graphs["cube"])
    sizes = sorted(len(s) for s in th.as_edge_sets())
    assert sizes == [4, 4, 4]


def test_theta_refuses_non_bipartite(named_graphs):
    with pytest.raises(NonBipartiteError):
        theta_classes(named_graphs["tetrahedron"])


def test_recognition_dimensions(named_graphs):
    expected = {
        "cube": 3,
        "prism(6)": 4,
        "truncated_octahedron": 6,
        "chamfered_cube": 7,
        "twisted_chamfered_cube": 7,
    }
    for name, m in expected.items():
        res = recognize_partial_cube(named_graphs[name])
        assert res and res.embedding.m == m
        ok, bad = verify_scale_embedding(named_graphs[name], res.embedding)
        assert ok and bad is None


def test_recognition_failures(named_graphs):
    res = recognize_partial_cube(named_graphs["truncated_tetrahedron"])
    assert not res and res.failure.kind == "odd_cycle"
    res = recognize_partial_cube(k23())
    assert not res and res.failure.kind in ("intransitive_pair", "class_not_cut")


def test_even_prisms_need_one_extra_coordinate():
    # a 2m-gonal prism uses m directions around plus one across
    for k in (4, 6, 8, 10):
        res = recognize_partial_cube(prism(k))
        assert res and res.embedding.m == k // 2 + 1


def test_odd_prisms_fail_but_are_five_gonal():
    for k in (3, 5):
        g = prism(k)
        assert not recognize_partial_cube(g)
        assert is_five_gonal(all_pairs_distances(g))


def test_verify_scale_embedding_detects_perturbation(named_graphs):
    g = named_graphs["cube"]
    emb = recognize_partial_cube(g).embedding
    phi = list(emb.phi)
    phi[3] = phi[3] ^ frozenset({0, 1})
    bad_emb = HypercubeEmbedding(m=emb.m, scale=1, phi=tuple(phi))
    ok, pair = verify_scale_embedding(g, bad_emb)
    assert not ok and 3 in pair


def test_tetrahedron_halfcube_coordinates(named_graphs):
    g = named_graphs["tetrahedron"]
    for phi in (
        (frozenset(), frozenset({0, 1}), frozenset({0, 2}), frozenset({1, 2})),
        (frozenset(), frozenset({0, 1}), frozenset({0, 2}), frozenset({0, 3})),
    ):
        m = 1 + max(max(s, default=0) for s in phi)
        emb = HypercubeEmbedding(m=m, scale=2, phi=phi)
        ok, _ = verify_scale_embedding(g, emb)
        assert ok


def test_five_gonal_trees_and_cube(named_graphs):
    path = PlaneGraph.from_rotations([[1], [0, 2], [1, 3], [2, 4], [3, 5], [4]])
    assert five_gonal_scan(all_pairs_distances(path)) == []
    star = PlaneGraph.from_rotations([[1, 2, 3, 4], [0], [0], [0], [0]])
    assert five_gonal_scan(all_pairs_distances(star)) == []
    assert is_five_gonal(all_pairs_distances(named_graphs["cube"]))
    tiny = PlaneGraph(sigma=(0, 1), vertex_of=(0, 1))
    assert five_gonal_scan(all_pairs_distances(tiny)) == []


def test_truncated_tetrahedron_obstruction(named_graphs):
    g = named_graphs["truncated_tetrahedron"]
    dist = all_pairs_distances(g)
    assert dist.max() == 3
    witnesses = five_gonal_scan(dist)
    assert witnesses
    assert min(w.diameter for w in witnesses) == 3
    assert t_embed_obstruction(dist) == 3
    first = five_gonal_scan(dist, stop_at_first=True)
    assert first == [witnesses[0]]
    for w in witnesses:
        assert w.deficit < 0


def test_witness_deficit_matches_metric(named_graphs):
    dist = all_pairs_distances(named_graphs["truncated_tetrahedron"])
    w = five_gonal_scan(dist, stop_at_first=True)[0]
    lhs = dist[w.a, w.b] + dist[w.x, w.y] + dist[w.x, w.z] + dist[w.y, w.z]
    rhs = sum(dist[w.a, t] + dist[w.b, t] for t in (w.x, w.y, w.z))
    assert w.deficit == rhs - lhs


def test_cube_has_no_obstruction(named_graphs):
    assert t_embed_obstruction(all_pairs_distances(named_graphs["cube"])) is None


def test_dual_chamfered_cube_not_three_embeddable(named_graphs):
    d = dual(named_graphs["chamfered_cube"])
    t0 = t_embed_obstruction(all_pairs_distances(d))
    assert t0 is not None and t0 <= 3


def test_halfcube_search_tetrahedron(named_graphs):
    g = named_graphs["tetrahedron"]
    assert search_halfcube_embedding(g, 3).status == "found"
    assert search_halfcube_embedding(g, 4).status == "found"
    assert search_halfcube_embedding(g, 2).status == "none"
    with pytest.raises(ValueError):
        search_halfcube_embedding(g, 13)


def test_halfcube_search_icosahedron(named_graphs):
    out = search_halfcube_embedding(named_graphs["icosahedron"], 6)
    assert out.status == "found"
    assert out.embedding.m == 6 and out.embedding.scale == 2
    assert all(len(s) % 2 == 0 for s in out.embedding.phi)
    tiny = search_halfcube_embedding(named_graphs["icosahedron"], 6, node_budget=5)
    assert tiny.status == "inconclusive"


def test_scale1_search_agrees_with_recognizer(named_graphs):
    corpus = [
        named_graphs["cube"],
        named_graphs["prism(6)"],
        prism(8),
        k23(),
        subdivided_k4(),
        PlaneGraph.from_rotations([[1], [0, 2], [1, 3], [2]]),
    ]
    for g in corpus:
        res = recognize_partial_cube(g)
        m = theta_classes(g).m
        out = search_scale_embedding(g, m, scale=1)
        assert bool(res) == (out.status == "found")


def test_embedding_json_round_shape(named_graphs):
    emb = recognize_partial_cube(named_graphs["cube"]).embedding
    js = emb.to_json()
    assert js["m"] == 3 and js["scale"] == 1
    assert sorted(map(len, js["phi"])) == sorted(len(s) for s in emb.phi)
