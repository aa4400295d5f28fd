"""Per-graph check reports and the end-to-end verification pipelines."""

from __future__ import annotations

import hashlib
import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .canonical import automorphism_count, canonical_code, is_chiral
from .embedding import (
    five_gonal_scan,
    recognize_partial_cube,
    t_embed_obstruction,
)
from .generator import GenSpec, GenerationResult, generate_q6
from .goldberg import goldberg_coxeter_cube
from .named import make_named
from .plane_graph import (
    PlaneGraph,
    all_pairs_distances,
    bipartition,
    face_vector,
    is_three_connected,
    is_three_valent,
)
from .zones import trace_zones, zone_clean

THEOREM_GRAPH_NAMES = (
    "cube",
    "prism(6)",
    "truncated_octahedron",
    "chamfered_cube",
    "twisted_chamfered_cube",
)

THEOREM_DIMENSIONS = {
    "cube": 3,
    "prism(6)": 4,
    "truncated_octahedron": 6,
    "chamfered_cube": 7,
    "twisted_chamfered_cube": 7,
}


def code_digest(code: bytes) -> str:
    return hashlib.sha256(code).hexdigest()[:16]


def theorem_graph_codes() -> dict[bytes, str]:
    return {canonical_code(make_named(n)): n for n in THEOREM_GRAPH_NAMES}


@dataclass(frozen=True)
class CheckReport:
    """Everything the pipelines need to know about one graph."""

    n: int
    code: str
    three_valent: bool
    three_connected: bool
    face_vector: dict[int, int]
    bipartite: bool
    zone_count: int | None
    zone_clean: bool | None
    embeddable: bool
    dimension: int | None
    five_gonal_witnesses: int | None
    five_gonal_clean: bool
    t_obstruction: int | None
    chiral: bool
    aut_order: int

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["face_vector"] = {str(k): v for k, v in sorted(self.face_vector.items())}
        return out


def check_graph(g: PlaneGraph, five_gonal: str = "full") -> CheckReport:
    """Aggregate all predicates; five_gonal is 'full', 'first' or 'skip'."""
    fv = dict(face_vector(g))
    bip = bool(bipartition(g))
    all_even = all(s % 2 == 0 for s in fv)
    zones = trace_zones(g) if all_even else None
    rec = recognize_partial_cube(g)
    dist = all_pairs_distances(g)
    if five_gonal == "skip":
        witnesses = None
        clean = bool(rec)
        t_obs = None
    elif five_gonal == "first":
        first = five_gonal_scan(dist, stop_at_first=True)
        witnesses = None
        clean = not first
        t_obs = None
    else:
        all_w = five_gonal_scan(dist)
        witnesses = len(all_w)
        clean = witnesses == 0
        t_obs = min(w.diameter for w in all_w) if all_w else None
    report = CheckReport(
        n=g.n_vertices,
        code=code_digest(canonical_code(g)),
        three_valent=is_three_valent(g),
        three_connected=is_three_connected(g),
        face_vector=fv,
        bipartite=bip,
        zone_count=len(zones) if zones is not None else None,
        zone_clean=(
            not any(z.self_intersecting for z in zones) if zones is not None else None
        ),
        embeddable=bool(rec),
        dimension=rec.embedding.m if rec else None,
        five_gonal_witnesses=witnesses,
        five_gonal_clean=clean,
        t_obstruction=t_obs,
        chiral=is_chiral(g),
        aut_order=automorphism_count(g),
    )
    # internal consistency: an embedding forces clean zones and no witnesses
    if report.embeddable:
        assert report.zone_clean is None or report.zone_clean
        assert report.five_gonal_clean
    return report


def check_many(
    graphs: list[PlaneGraph], threads: int = 1, five_gonal: str = "full"
) -> list[CheckReport]:
    """Order-preserving parallel map of check_graph (results are identical
    for any thread count)."""
    if threads <= 1 or len(graphs) <= 1:
        return [check_graph(g, five_gonal) for g in graphs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(lambda g: check_graph(g, five_gonal), graphs))


# -- pipelines --------------------------------------------------------------


@dataclass
class TheoremReport:
    """Outcome of the exhaustive embeddability sweep."""

    n_max: int
    total_generated: int
    survivors: list[dict] = field(default_factory=list)
    ok: bool = False
    truncated: bool = False
    complete_bound: bool = True  # n_max covers all five graphs

    def lines(self) -> list[str]:
        out = []
        for s in self.survivors:
            name = s["name"] or "unlisted"
            out.append(f"n={s['n']} m={s['m']} code={s['code']} {name}")
        verdict = "ok" if self.ok else "MISMATCH"
        if self.truncated:
            verdict = "TRUNCATED"
        out.append(
            f"survivors={len(self.survivors)} generated={self.total_generated} "
            f"n_max={self.n_max} verdict={verdict}"
        )
        return out


def verify_theorem(
    n_max: int = 32, threads: int = 1, budget_seconds: float | None = None
) -> TheoremReport:
    """Generate every 4_n with n <= n_max and keep the hypercube-embeddable
    ones; they must be exactly the five known graphs (with dimensions
    3, 4, 6, 7, 7) once n_max >= 32."""
    gen = generate_q6(GenSpec(q=4, n_max=n_max), budget_seconds=budget_seconds)
    names = theorem_graph_codes()
    report = TheoremReport(
        n_max=n_max,
        total_generated=len(gen.graphs),
        truncated=gen.truncated,
        complete_bound=n_max >= 32,
    )

    def probe(g: PlaneGraph):
        return recognize_partial_cube(g)

    if threads > 1 and len(gen.graphs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            recs = list(pool.map(probe, gen.graphs))
    else:
        recs = [probe(g) for g in gen.graphs]
    for g, code, rec in zip(gen.graphs, gen.codes, recs):
        if rec:
            report.survivors.append(
                {
                    "n": g.n_vertices,
                    "m": rec.embedding.m,
                    "code": code_digest(code),
                    "name": names.get(code),
                }
            )
    expected = {
        (THEOREM_DIMENSIONS[name], code_digest(code)) for code, name in names.items()
    }
    got = {(s["m"], s["code"]) for s in report.survivors}
    report.ok = not gen.truncated and report.complete_bound and got == expected
    return report


@dataclass
class ZoneSurveyReport:
    """Outcome of the zone-cleanliness sweep (the fast necessary filter)."""

    n_max: int
    total_generated: int
    survivors: list[dict] = field(default_factory=list)
    counts: dict[int, int] = field(default_factory=dict)
    truncated: bool = False
    embeddable_subset_ok: bool = True
    gc_status: list[dict] = field(default_factory=list)

    def lines(self) -> list[str]:
        out = []
        for s in self.survivors:
            name = s["name"] or "unlisted"
            out.append(
                f"n={s['n']} code={s['code']} aut={s['aut_order']} "
                f"chiral={s['chiral']} embeddable={s['embeddable']} "
                f"three_connected={s['three_connected']} {name}"
            )
        for s in self.gc_status:
            out.append(
                f"gc k={s['k']} l={s['l']} n={s['n']} zone_clean={s['zone_clean']} "
                f"{'survivor' if s['survivor'] else 'filtered'}"
            )
        out.append(
            f"survivors={len(self.survivors)} generated={self.total_generated} "
            f"n_max={self.n_max} embeddable_subset_ok={self.embeddable_subset_ok} "
            f"truncated={self.truncated}"
        )
        return out


def reproduce_zone_computation(
    n_max: int = 40, threads: int = 1, budget_seconds: float | None = None
) -> ZoneSurveyReport:
    """Filter all 4_n with n <= n_max by zone cleanliness and cross-check
    that every hypercube-embeddable graph survives.  The subdivided-cube
    family members within range are reported with their zone status."""
    gen = generate_q6(GenSpec(q=4, n_max=n_max), budget_seconds=budget_seconds)
    names = theorem_graph_codes()
    report = ZoneSurveyReport(
        n_max=n_max, total_generated=len(gen.graphs), truncated=gen.truncated
    )
    for g in gen.graphs:
        report.counts[g.n_vertices] = report.counts.get(g.n_vertices, 0) + 1

    def probe(args):
        g, code = args
        clean = zone_clean(g)
        emb = bool(recognize_partial_cube(g))
        return clean, emb

    pairs = list(zip(gen.graphs, gen.codes))
    if threads > 1 and len(pairs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            flags = list(pool.map(probe, pairs))
    else:
        flags = [probe(p) for p in pairs]
    survivor_codes = set()
    for (g, code), (clean, emb) in zip(pairs, flags):
        if emb and not clean:
            report.embeddable_subset_ok = False
        if clean:
            survivor_codes.add(code)
            report.survivors.append(
                {
                    "n": g.n_vertices,
                    "code": code_digest(code),
                    "name": names.get(code),
                    "aut_order": automorphism_count(g),
                    "chiral": is_chiral(g),
                    "embeddable": emb,
                    "three_connected": is_three_connected(g),
                }
            )
    k = 1
    while 8 * k * k <= n_max:
        for l in range(0, k + 1):
            t = k * k + k * l + l * l
            if 8 * t <= n_max:
                gc = goldberg_coxeter_cube(k, l)
                code = canonical_code(gc)
                report.gc_status.append(
                    {
                        "k": k,
                        "l": l,
                        "n": gc.n_vertices,
                        "zone_clean": zone_clean(gc),
                        "survivor": code in survivor_codes,
                    }
                )
        k += 1
    return report


def reports_to_jsonl(reports: list[CheckReport]) -> str:
    return "".join(
        json.dumps(r.to_json(), sort_keys=True, separators=(",", ":")) + "\n"
        for r in reports
    )


def generation_summary(result: GenerationResult) -> dict:
    return {
        "counts": {str(n): c for n, c in sorted(result.counts.items())},
        "total": len(result.graphs),
        "complete": not result.truncated,
    }
