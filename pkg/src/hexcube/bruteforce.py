"""Brute-force reference enumeration used to certify the main generator.

This is a deliberately plain depth-first search: vertices carry dart
triples (3v, 3v+1, 3v+2) with the rotation fixed, and every fixed-point
free dart matching is explored.  The lowest unmatched dart is always
matched next, either to an unmatched dart of an existing vertex or to a
fresh vertex, so each rooted map arises from exactly one branch;
isomorphism classes are therefore produced with multiplicity (roughly one
copy per rooted start) and duplicates are NOT removed here.

Pruning keeps only what is obviously sound: no loops, no parallel edges,
no face walk longer than six darts, closed faces of size q or 6 with the
Euler-forced cap on q-gons.  Every completed matching is rebuilt and
re-checked with the public predicates (which also discards the rotation
systems of positive genus), so the pruning is not trusted for the final
answer.
"""

from __future__ import annotations

from .plane_graph import MapError, PlaneGraph, is_q6

_Q_CAP = {3: 4, 4: 6, 5: 12}


def _face_walk_ok(alpha: list[int], nxt: list[int], prv: list[int], d: int, q: int):
    """Check the face walk through dart d; returns (ok, closed_size_or_0)."""
    back = 0
    cur = d
    while True:
        p = alpha[prv[cur]]
        if p < 0:
            break
        cur = p
        if cur == d:
            # closed face: count its darts by walking it once
            size = 1
            x = nxt[alpha[d]]
            while x != d:
                size += 1
                x = nxt[alpha[x]]
            return size in (q, 6), size
        back += 1
        if back > 7:
            return False, 0
    length = back + 1
    x = d
    while alpha[x] >= 0:
        x = nxt[alpha[x]]
        length += 1
        if length > 6:
            return False, 0
    return True, 0


def _closed_face_darts(alpha: list[int], nxt: list[int], d: int) -> set[int]:
    out = {d}
    x = nxt[alpha[d]]
    while x != d:
        out.add(x)
        x = nxt[alpha[x]]
    return out


def enumerate_rotation_maps(q: int, n_max: int) -> list[PlaneGraph]:
    """Every connected simple 3-valent plane map with faces in {q, 6} on at
    most n_max vertices, listed with rooted multiplicity (duplicates kept)."""
    if q not in (3, 4, 5):
        raise ValueError("q must be 3, 4 or 5")
    nd_max = 3 * n_max
    nxt = [0] * nd_max
    prv = [0] * nd_max
    for v in range(n_max):
        b = 3 * v
        nxt[b], nxt[b + 1], nxt[b + 2] = b + 1, b + 2, b
        prv[b], prv[b + 1], prv[b + 2] = b + 2, b, b + 1
    cap = _Q_CAP[q]

    alpha = [-1] * nd_max
    adjacent: set[tuple[int, int]] = set()
    results: list[PlaneGraph] = []

    def rebuild(used: int) -> None:
        nd = 3 * used
        perm = [-1] * nd
        nid = 0
        for d in range(nd):
            if perm[d] < 0:
                perm[d] = nid
                perm[alpha[d]] = nid + 1
                nid += 2
        sigma = [0] * nd
        vertex_of = [0] * nd
        for d in range(nd):
            sigma[perm[d]] = perm[nxt[d]]
            vertex_of[perm[d]] = d // 3
        try:
            g = PlaneGraph(sigma=tuple(sigma), vertex_of=tuple(vertex_of))
        except MapError:
            return  # positive genus: a rotation system, but not a plane graph
        if is_q6(g, q):
            results.append(g)

    def extend(used: int, q_faces: int) -> None:
        d = -1
        for i in range(3 * used):
            if alpha[i] < 0:
                d = i
                break
        if d < 0:
            rebuild(used)
            return
        vd = d // 3
        candidates = [e for e in range(d + 1, 3 * used) if alpha[e] < 0]
        if used < n_max:
            candidates.append(3 * used)
        for e in candidates:
            ve = e // 3
            if ve == vd:
                continue
            pair = (vd, ve) if vd < ve else (ve, vd)
            fresh = ve == used
            if not fresh and pair in adjacent:
                continue
            alpha[d] = e
            alpha[e] = d
            adjacent.add(pair)
            ok1, closed1 = _face_walk_ok(alpha, nxt, prv, d, q)
            nq = q_faces + (1 if closed1 == q else 0)
            ok2 = True
            if ok1:
                same_face = closed1 > 0 and e in _closed_face_darts(alpha, nxt, d)
                if not same_face:
                    ok2, closed2 = _face_walk_ok(alpha, nxt, prv, e, q)
                    if closed2 == q:
                        nq += 1
            if ok1 and ok2 and nq <= cap:
                extend(used + 1 if fresh else used, nq)
            alpha[d] = -1
            alpha[e] = -1
            adjacent.discard(pair)

    # root edge: dart 0 matched to the first dart of vertex 1
    alpha[0] = 3
    alpha[3] = 0
    adjacent.add((0, 1))
    extend(2, 0)
    return results
