from __future__ import annotations

import pytest

from hexcube import (
    OddFaceError,
    canonical_code,
    face_isometric,
    opposite_edge,
    theta_classes,
    trace_zones,
    zone_clean,
    zone_report,
)
from hexcube.zones import edge_based_self_intersection


def test_opposite_edge_on_square(named_graphs):
    g = named_graphs["cube"]
    f = g.faces[0]
    edges = f.edges()
    assert opposite_edge(g, f, edges[0]) == edges[2]
    assert opposite_edge(g, f, opposite_edge(g, f, edges[1])) == edges[1]


def test_opposite_edge_on_hexagon(named_graphs):
    g = named_graphs["prism(6)"]
    f = next(f for f in g.faces if f.size == 6)
    edges = f.edges()
    assert opposite_edge(g, f, edges[0]) == edges[3]


def test_opposite_edge_odd_face(named_graphs):
    g = named_graphs["tetrahedron"]
    with pytest.raises(OddFaceError):
        opposite_edge(g, g.faces[0], g.faces[0].edges()[0])
    with pytest.raises(OddFaceError):
        trace_zones(g)


def test_zone_counts(named_graphs):
    expected = {
        "cube": 3,
        "prism(6)": 4,
        "truncated_octahedron": 6,
        "chamfered_cube": 7,
        "twisted_chamfered_cube": 7,
    }
    for name, k in expected.items():
        zones = trace_zones(named_graphs[name])
        assert len(zones) == k, name
        assert zone_clean(named_graphs[name])
    assert [z.length for z in trace_zones(named_graphs["cube"])] == [4, 4, 4]


def test_zone_edges_partition(named_graphs, gen4_24):
    graphs = [named_graphs[n] for n in ("cube", "prism(6)", "chamfered_cube")]
    graphs += gen4_24.graphs
    for g in graphs:
        zones = trace_zones(g)
        counted = sum(len(z.edges) for z in zones)
        union = set().union(*(z.edges for z in zones))
        assert counted == g.n_edges == len(union)


def test_zones_match_theta_classes_on_embeddable(named_graphs):
    for name in (
        "cube",
        "prism(6)",
        "truncated_octahedron",
        "chamfered_cube",
        "twisted_chamfered_cube",
    ):
        g = named_graphs[name]
        zsets = {z.edges for z in trace_zones(g)}
        tsets = set(theta_classes(g).as_edge_sets())
        assert zsets == tsets, name


def test_self_intersection_definitions_agree(gen4_24):
    from hexcube import goldberg_coxeter_cube

    graphs = gen4_24.graphs + [goldberg_coxeter_cube(2, 1)]
    flagged = 0
    for g in graphs:
        for z in trace_zones(g):
            face_based = z.self_intersecting
            assert face_based == edge_based_self_intersection(g, z)
            flagged += face_based
    assert flagged > 0  # the corpus genuinely exercises both outcomes


def test_zone_clean_only_for_survivors_at_small_n(gen4_24, named_graphs):
    survivors = {
        canonical_code(named_graphs["cube"]),
        canonical_code(named_graphs["prism(6)"]),
        canonical_code(named_graphs["truncated_octahedron"]),
    }
    for g in gen4_24.graphs:
        assert zone_clean(g) == (canonical_code(g) in survivors)


def test_face_isometric_on_embeddable(named_graphs):
    for name in ("cube", "prism(6)", "truncated_octahedron", "chamfered_cube"):
        assert face_isometric(named_graphs[name])


def test_zone_report_shape(named_graphs):
    rep = zone_report(named_graphs["chamfered_cube"])
    assert rep["zone_count"] == 7
    assert len(rep["lengths"]) == 7
    assert rep["self_intersecting_flags"] == [False] * 7
