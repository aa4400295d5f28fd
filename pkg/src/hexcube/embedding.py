"""Isometric hypercube embeddings, edge classes, 5-gonal scans and
scale-2 half-cube search.

A graph embeds isometrically in a hypercube exactly when orienting each
edge class as a cut yields coordinates whose Hamming distances reproduce
the graph metric; the recognizer builds that assignment and then verifies
it exhaustively, so a returned embedding is always certified.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .plane_graph import PlaneGraph, all_pairs_distances, bipartition


class NonBipartiteError(ValueError):
    """Edge classes are only defined here for bipartite graphs."""


@dataclass(frozen=True)
class ThetaClasses:
    """Partition of the edges into parallelism classes.

    Two edges xy and uv are directly related when
    d(x,u) + d(y,v) != d(x,v) + d(y,u); classes are the transitive closure.
    On a hypercube-embeddable graph the classes are the coordinate
    directions, so the class count equals the embedding dimension.
    """

    class_of: tuple[int, ...]
    m: int

    def edges_of_class(self, c: int) -> tuple[int, ...]:
        return tuple(e for e, k in enumerate(self.class_of) if k == c)

    def as_edge_sets(self) -> list[frozenset[int]]:
        out: list[set[int]] = [set() for _ in range(self.m)]
        for e, c in enumerate(self.class_of):
            out[c].add(e)
        return [frozenset(s) for s in out]


@dataclass(frozen=True)
class HypercubeEmbedding:
    """Vertex -> coordinate-set map into H_m at scale 1 or 2."""

    m: int
    scale: int
    phi: tuple[frozenset[int], ...]

    def bit_matrix(self) -> np.ndarray:
        mat = np.zeros((len(self.phi), self.m), dtype=bool)
        for v, s in enumerate(self.phi):
            for c in s:
                mat[v, c] = True
        return mat

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "scale": self.scale,
            "phi": [sorted(s) for s in self.phi],
        }


@dataclass(frozen=True)
class RecognitionFailure:
    """Concrete witness that no isometric hypercube embedding exists.

    kind is one of:
      odd_cycle         -- detail: vertex cycle of odd length
      intransitive_pair -- detail: (class index, edge, edge) where the two
                           edges were merged only transitively and the class
                           is not a 2-sided cut
      class_not_cut     -- detail: (class index, component count)
      distance_mismatch -- detail: (x, y, graph distance, Hamming distance)
    """

    kind: str
    detail: tuple


@dataclass(frozen=True)
class RecognitionResult:
    embedding: HypercubeEmbedding | None
    failure: RecognitionFailure | None

    def __bool__(self) -> bool:
        return self.embedding is not None


@dataclass(frozen=True)
class FiveGonalWitness:
    """Violated instance of the pentagonal inequality

        d(a,b) + d(x,y) + d(x,z) + d(y,z)
            <= d(a,x) + d(a,y) + d(a,z) + d(b,x) + d(b,y) + d(b,z)

    deficit = right side minus left side (negative here); diameter is the
    largest pairwise distance among the five vertices.
    """

    a: int
    b: int
    x: int
    y: int
    z: int
    deficit: int
    diameter: int

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "x": self.x,
            "y": self.y,
            "z": self.z,
            "deficit": self.deficit,
            "diameter": self.diameter,
        }


# -- edge classes ----------------------------------------------------------


def theta_classes(g: PlaneGraph, dist: np.ndarray | None = None) -> ThetaClasses:
    """Edge classes under the transitive closure of the distance relation."""
    bip = bipartition(g)
    if not bip:
        raise NonBipartiteError("graph has an odd cycle")
    if dist is None:
        dist = all_pairs_distances(g)
    ne = g.n_edges
    ends = [g.edge_endpoints(e) for e in range(ne)]
    parent = list(range(ne))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    d = dist
    for e in range(ne):
        x, y = ends[e]
        for f in range(e + 1, ne):
            u, v = ends[f]
            if d[x, u] + d[y, v] != d[x, v] + d[y, u]:
                ri, rj = find(e), find(f)
                if ri != rj:
                    parent[ri] = rj
    labels: dict[int, int] = {}
    class_of = []
    for e in range(ne):
        r = find(e)
        if r not in labels:
            labels[r] = len(labels)
        class_of.append(labels[r])
    return ThetaClasses(class_of=tuple(class_of), m=len(labels))


def _direct_theta(dist: np.ndarray, ends, e: int, f: int) -> bool:
    x, y = ends[e]
    u, v = ends[f]
    return dist[x, u] + dist[y, v] != dist[x, v] + dist[y, u]


# -- recognition -----------------------------------------------------------


def recognize_partial_cube(g: PlaneGraph) -> RecognitionResult:
    """Decide isometric hypercube embeddability, with certificate either way.

    On success the embedding assigns vertex 0 the empty set and each class
    a coordinate; the result is verified on all vertex pairs before being
    returned.
    """
    bip = bipartition(g)
    if not bip:
        return RecognitionResult(
            embedding=None,
            failure=RecognitionFailure(kind="odd_cycle", detail=bip.odd_cycle),
        )
    dist = all_pairs_distances(g)
    theta = theta_classes(g, dist)
    n = g.n_vertices
    ne = g.n_edges
    ends = [g.edge_endpoints(e) for e in range(ne)]
    nbr_edges: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for e, (u, v) in enumerate(ends):
        nbr_edges[u].append((v, e))
        nbr_edges[v].append((u, e))

    phi_bits = np.zeros((n, theta.m), dtype=bool)
    for c in range(theta.m):
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        while stack:
            u = stack.pop()
            for w, e in nbr_edges[u]:
                if theta.class_of[e] != c and not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        if count == n:
            # class edges lie inside one side: not an edge cut at all
            return RecognitionResult(None, _class_failure(dist, ends, theta, c, 1))
        far = [v for v in range(n) if not seen[v]]
        # far side must be a single component as well
        far_seen = {far[0]}
        stack = [far[0]]
        while stack:
            u = stack.pop()
            for w, e in nbr_edges[u]:
                if theta.class_of[e] != c and w not in far_seen and not seen[w]:
                    far_seen.add(w)
                    stack.append(w)
        if len(far_seen) != len(far):
            return RecognitionResult(None, _class_failure(dist, ends, theta, c, 3))
        phi_bits[far, c] = True

    ham = (phi_bits[:, None, :] != phi_bits[None, :, :]).sum(axis=2)
    if not np.array_equal(ham, dist):
        bad = np.argwhere(ham != dist)
        x, y = (int(v) for v in bad[0])
        fail = RecognitionFailure(
            kind="distance_mismatch", detail=(x, y, int(dist[x, y]), int(ham[x, y]))
        )
        return RecognitionResult(None, fail)
    phi = tuple(frozenset(np.flatnonzero(phi_bits[v]).tolist()) for v in range(n))
    emb = HypercubeEmbedding(m=theta.m, scale=1, phi=phi)
    return RecognitionResult(embedding=emb, failure=None)


def _class_failure(dist, ends, theta: ThetaClasses, c: int, comps: int) -> RecognitionFailure:
    edges = theta.edges_of_class(c)
    for e, f in itertools.combinations(edges, 2):
        if not _direct_theta(dist, ends, e, f):
            return RecognitionFailure(kind="intransitive_pair", detail=(c, e, f))
    return RecognitionFailure(kind="class_not_cut", detail=(c, comps))


def verify_scale_embedding(
    g: PlaneGraph, emb: HypercubeEmbedding
) -> tuple[bool, tuple[int, int] | None]:
    """Exact check of scale * d_G(x,y) == Hamming(phi(x), phi(y)) on all pairs.

    Returns (True, None) or (False, first violating pair) in row-major
    vertex order.
    """
    n = g.n_vertices
    if len(emb.phi) != n:
        raise ValueError("embedding does not cover every vertex")
    dist = all_pairs_distances(g)
    bits = emb.bit_matrix()
    ham = (bits[:, None, :] != bits[None, :, :]).sum(axis=2)
    diff = ham != emb.scale * dist
    if not diff.any():
        return True, None
    x, y = (int(v) for v in np.argwhere(diff)[0])
    return False, (x, y)


# -- 5-gonal inequality -----------------------------------------------------

# positions of {a, b} inside an ascending 5-tuple, in scan order
_ROLE_SPLITS = tuple(itertools.combinations(range(5), 2))
_CHUNK = 65536


def five_gonal_scan(
    dist: np.ndarray, stop_at_first: bool = False
) -> list[FiveGonalWitness]:
    """All violated pentagonal inequalities of a metric (or just the first).

    Scans the C(n,5) vertex subsets in ascending lexicographic order and the
    10 role splits per subset in ascending position order, so the first
    witness is deterministic.  Returns [] exactly when the metric is
    5-gonal; n < 5 yields [].
    """
    n = dist.shape[0]
    if n < 5:
        return []
    witnesses: list[FiveGonalWitness] = []
    combos = itertools.combinations(range(n), 5)
    while True:
        chunk = np.fromiter(
            itertools.chain.from_iterable(itertools.islice(combos, _CHUNK)),
            dtype=np.int64,
        ).reshape(-1, 5)
        if chunk.size == 0:
            break
        pair = dist[chunk[:, :, None], chunk[:, None, :]]
        diam = pair.max(axis=(1, 2))
        deficits = np.empty((chunk.shape[0], len(_ROLE_SPLITS)), dtype=np.int64)
        for si, (ia, ib) in enumerate(_ROLE_SPLITS):
            rest = [k for k in range(5) if k not in (ia, ib)]
            ix, iy, iz = rest
            lhs = (
                pair[:, ia, ib]
                + pair[:, ix, iy]
                + pair[:, ix, iz]
                + pair[:, iy, iz]
            )
            rhs = (
                pair[:, ia, ix]
                + pair[:, ia, iy]
                + pair[:, ia, iz]
                + pair[:, ib, ix]
                + pair[:, ib, iy]
                + pair[:, ib, iz]
            )
            deficits[:, si] = rhs - lhs
        bad = np.argwhere(deficits < 0)
        for row, si in bad:
            combo = chunk[row]
            ia, ib = _ROLE_SPLITS[si]
            rest = [k for k in range(5) if k not in (ia, ib)]
            witnesses.append(
                FiveGonalWitness(
                    a=int(combo[ia]),
                    b=int(combo[ib]),
                    x=int(combo[rest[0]]),
                    y=int(combo[rest[1]]),
                    z=int(combo[rest[2]]),
                    deficit=int(deficits[row, si]),
                    diameter=int(diam[row]),
                )
            )
            if stop_at_first:
                return witnesses
    return witnesses


def is_five_gonal(dist: np.ndarray) -> bool:
    return not five_gonal_scan(dist, stop_at_first=True)


def t_embed_obstruction(dist: np.ndarray) -> int | None:
    """Smallest t0 such that some 5-gonal violation has all its pairwise
    distances <= t0.

    A distance-preserving map up to range t sends such a five-point
    configuration isometrically into a hypercube, whose metric satisfies all
    pentagonal inequalities; hence no t-embedding exists for t >= t0.
    Returns None when the metric is 5-gonal.
    """
    witnesses = five_gonal_scan(dist)
    if not witnesses:
        return None
    return min(w.diameter for w in witnesses)


# -- backtracking search for scale embeddings -------------------------------


@dataclass(frozen=True)
class EmbeddingSearchOutcome:
    """status: 'found' | 'none' | 'inconclusive' (budget exhausted)."""

    status: str
    embedding: HypercubeEmbedding | None
    placements: int

    def __bool__(self) -> bool:
        return self.status == "found"


def search_scale_embedding(
    g: PlaneGraph, m: int, scale: int, node_budget: int = 10**8
) -> EmbeddingSearchOutcome:
    """Backtracking search for a scale-1 or scale-2 embedding into H_m.

    Vertices are placed in breadth-first order; images are bitmasks.  Each
    candidate must match scale * d against every placed vertex, and new
    coordinates must be the lowest unused ones (breaking the coordinate
    symmetry, which also pins the first edge).  Exhausting the search space
    proves non-existence; exceeding the budget is reported as inconclusive.
    """
    if scale not in (1, 2):
        raise ValueError("scale must be 1 or 2")
    n = g.n_vertices
    dist = all_pairs_distances(g)
    order = [0]
    seen = [False] * n
    seen[0] = True
    for v in order:
        for w in g.neighbors[v]:
            if not seen[w]:
                seen[w] = True
                order.append(w)
    # distances from each vertex to the already placed ones, premultiplied
    target = [[scale * int(dist[order[i], order[j]]) for j in range(i)] for i in range(n)]
    parents = [0] * n
    for i in range(1, n):
        parents[i] = next(j for j in range(i) if target[i][j] == scale)

    full = (1 << m) - 1
    single = [1 << b for b in range(m)]
    doubles = [
        (1 << b1) | (1 << b2) for b1 in range(m) for b2 in range(b1 + 1, m)
    ]
    deltas = single if scale == 1 else doubles

    images = [0] * n
    used_mask = [0] * (n + 1)  # coordinates used before placing vertex i
    placements = 0

    def lowest_bits(mask: int, k: int) -> int:
        out = 0
        b = 0
        while k:
            if not mask & (1 << b):
                out |= 1 << b
                k -= 1
            b += 1
        return out

    def place(i: int) -> str:
        nonlocal placements
        if i == n:
            return "found"
        base = images[parents[i]]
        trow = target[i]
        for delta in deltas:
            cand = base ^ delta
            placements += 1
            if placements > node_budget:
                return "inconclusive"
            new = cand & ~used_mask[i] & full
            if new and new != lowest_bits(used_mask[i], new.bit_count()):
                continue
            ok = True
            for j in range(i):
                if (cand ^ images[j]).bit_count() != trow[j]:
                    ok = False
                    break
            if ok:
                images[i] = cand
                used_mask[i + 1] = used_mask[i] | cand
                res = place(i + 1)
                if res != "none":
                    return res
        return "none"

    status = place(1) if n > 1 else "found"
    if status != "found":
        return EmbeddingSearchOutcome(status=status, embedding=None, placements=placements)
    phi = [frozenset()] * n
    for i, v in enumerate(order):
        phi[v] = frozenset(b for b in range(m) if images[i] >> b & 1)
    emb = HypercubeEmbedding(m=m, scale=scale, phi=tuple(phi))
    ok, bad = verify_scale_embedding(g, emb)
    assert ok, f"search returned a non-embedding, pair {bad}"
    return EmbeddingSearchOutcome(status="found", embedding=emb, placements=placements)


def search_halfcube_embedding(
    g: PlaneGraph, m: int, node_budget: int = 10**8
) -> EmbeddingSearchOutcome:
    """Search for a scale-2 embedding into the even-weight half of H_m."""
    if m > 12:
        raise ValueError("half-cube search is limited to m <= 12")
    return search_scale_embedding(g, m, scale=2, node_budget=node_budget)
