"""Canonical codes and isomorphism tools for plane graphs.

The code of a rooted oriented map is produced by a breadth-first relabeling
of its darts from the root; the canonical code is the lexicographic minimum
over all roots (and over both orientations when reflections count as
isomorphisms).  Two maps get equal canonical codes exactly when they are
isomorphic, because a map isomorphism is determined by the image of a
single dart.
"""

from __future__ import annotations

import numpy as np

from .plane_graph import PlaneGraph


def _sigma_inverse(sigma: tuple[int, ...]) -> list[int]:
    inv = [0] * len(sigma)
    for d, s in enumerate(sigma):
        inv[s] = d
    return inv


def _rooted_ints(sigma, root: int) -> list[int]:
    """BFS dart relabeling from root; neighbors explored as (sigma, alpha)."""
    nd = len(sigma)
    pos = [-1] * nd
    order = [root]
    pos[root] = 0
    for d in order:
        s = sigma[d]
        if pos[s] < 0:
            pos[s] = len(order)
            order.append(s)
        a = d ^ 1
        if pos[a] < 0:
            pos[a] = len(order)
            order.append(a)
    out = []
    for d in order:
        out.append(pos[sigma[d]])
        out.append(pos[d ^ 1])
    return out


def rooted_code(g: PlaneGraph, root: int, mirrored: bool = False) -> bytes:
    """Code of the map rooted at one dart, in one orientation."""
    sigma = _sigma_inverse(g.sigma) if mirrored else g.sigma
    return np.asarray(_rooted_ints(sigma, root), dtype=">u2").tobytes()


def canonical_code(g: PlaneGraph, include_reflection: bool = True) -> bytes:
    """Isomorphism-class key: minimum rooted code over all roots/orientations."""
    best = None
    tables = [g.sigma]
    if include_reflection:
        tables.append(tuple(_sigma_inverse(g.sigma)))
    for sigma in tables:
        for root in range(len(sigma)):
            code = np.asarray(_rooted_ints(sigma, root), dtype=">u2").tobytes()
            if best is None or code < best:
                best = code
    return best


def automorphism_count(g: PlaneGraph, include_reflection: bool = True) -> int:
    """Order of the automorphism group (orientation-reversing maps included
    when include_reflection is set).  Map automorphisms act freely on darts,
    so the order equals the number of minimum-achieving roots."""
    best = None
    count = 0
    tables = [g.sigma]
    if include_reflection:
        tables.append(tuple(_sigma_inverse(g.sigma)))
    for sigma in tables:
        for root in range(len(sigma)):
            code = np.asarray(_rooted_ints(sigma, root), dtype=">u2").tobytes()
            if best is None or code < best:
                best = code
                count = 1
            elif code == best:
                count += 1
    return count


def is_chiral(g: PlaneGraph) -> bool:
    """True when the map admits no orientation-reversing automorphism."""
    plus = canonical_code(g, include_reflection=False)
    minus_graph = PlaneGraph(
        sigma=tuple(_sigma_inverse(g.sigma)), vertex_of=g.vertex_of
    )
    minus = canonical_code(minus_graph, include_reflection=False)
    return plus != minus


def _try_dart_map(gs, hs, root: int) -> bool:
    """Propagate dart 0 of g -> root of h along sigma and alpha."""
    nd = len(gs)
    image = [-1] * nd
    used = [False] * nd
    image[0] = root
    used[root] = True
    stack = [0]
    while stack:
        d = stack.pop()
        for gn, hn in ((gs[d], hs[image[d]]), (d ^ 1, image[d] ^ 1)):
            if image[gn] < 0:
                if used[hn]:
                    return False
                image[gn] = hn
                used[hn] = True
                stack.append(gn)
            elif image[gn] != hn:
                return False
    return all(x >= 0 for x in image)


def are_isomorphic(g: PlaneGraph, h: PlaneGraph, include_reflection: bool = True) -> bool:
    """Explicit isomorphism search by dart-correspondence propagation.

    Independent of canonical_code; used to cross-check it on small inputs.
    """
    if g.dart_count != h.dart_count:
        return False
    targets = [h.sigma]
    if include_reflection:
        targets.append(tuple(_sigma_inverse(h.sigma)))
    for hs in targets:
        for root in range(h.dart_count):
            if _try_dart_map(g.sigma, hs, root):
                return True
    return False
