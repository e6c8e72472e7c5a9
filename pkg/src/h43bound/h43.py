"""H(4,3) containment: a triangle and a 4-cycle sharing exactly one vertex."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits

# pattern: triangle 0-1-2, 4-cycle 0-3-4-5-0
H43_EDGES = ((0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (0, 5))


def h43_graph() -> Graph:
    return Graph.from_edges(6, H43_EDGES)


@dataclass(frozen=True)
class H43Witness:
    triangle: tuple[int, int, int]
    cycle: tuple[int, int, int, int]  # in cyclic order, starting at the shared vertex
    shared: int


def triangles(g: Graph):
    for a in range(g.n):
        for b in _bits(g.rows[a] >> (a + 1) << (a + 1)):
            for c in _bits(g.rows[a] & g.rows[b] >> (b + 1) << (b + 1)):
                yield a, b, c


def find_h43(g: Graph) -> H43Witness | None:
    """Return a witness copy of H(4,3) in ``g``, or None if ``g`` is H(4,3)-free.

    For each triangle T and each t in T, look for v outside T having two common
    neighbours with t outside T; t-p-v-q-t is then a 4-cycle meeting T only in t.
    """
    for tri in triangles(g):
        tmask = (1 << tri[0]) | (1 << tri[1]) | (1 << tri[2])
        for t in tri:
            rt = g.rows[t] & ~tmask
            for v in _bits(((1 << g.n) - 1) & ~tmask):
                common = rt & g.rows[v]
                if common & (common - 1):
                    p = (common & -common).bit_length() - 1
                    rest = common ^ (1 << p)
                    q = (rest & -rest).bit_length() - 1
                    return H43Witness(tri, (t, p, v, q), t)
    return None


def contains_h43(g: Graph) -> bool:
    return find_h43(g) is not None


def brute_force_h43_oracle(g: Graph) -> bool:
    """Exhaustive search for an injective edge-preserving map of H(4,3) into ``g``."""
    if g.n < 6:
        return False
    pattern = {frozenset(e) for e in H43_EDGES}
    need = [[j for j in range(k) if frozenset((j, k)) in pattern] for k in range(6)]
    image = [-1] * 6

    def extend(k: int) -> bool:
        if k == 6:
            return True
        for v in range(g.n):
            if v in image[:k]:
                continue
            if all(g.has_edge(v, image[j]) for j in need[k]):
                image[k] = v
                if extend(k + 1):
                    return True
        image[k] = -1
        return False

    return extend(0)


def is_witness(g: Graph, w: H43Witness) -> bool:
    a, b, c = w.triangle
    cyc = w.cycle
    ok_tri = g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)
    ok_cyc = len(set(cyc)) == 4 and all(g.has_edge(cyc[i], cyc[(i + 1) % 4]) for i in range(4))
    return ok_tri and ok_cyc and set(w.triangle) & set(cyc) == {w.shared}
