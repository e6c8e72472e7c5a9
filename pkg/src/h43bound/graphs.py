"""Graphs as bit-row adjacency, the named families, and equitable quotients.

Vertex order for every constructor: u* = 0, then A+, then special A0
vertices, then W, then the A0 leaves.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np

from .exact import BiPoly, UniPoly, char_poly as _char_poly, char_poly_symbolic

FAMILY_NAMES = ("s-minus", "t", "same", "dist", "mixed")


@dataclass(frozen=True)
class Graph:
    n: int
    rows: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if len(self.rows) != self.n:
            raise ValueError("row count does not match n")
        for v, r in enumerate(self.rows):
            if r >> v & 1:
                raise ValueError(f"self-loop at {v}")
            if r >> self.n:
                raise ValueError(f"row {v} mentions a vertex >= n")
            for u in _bits(r):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("one label per vertex required")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def from_matrix(cls, a) -> "Graph":
        a = np.asarray(a)
        n = a.shape[0]
        return cls.from_edges(n, ((i, j) for i in range(n) for j in range(i + 1, n) if a[i, j]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [self.degree(v) for v in range(self.n)]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u]) if u < v]

    @property
    def num_edges(self) -> int:
        return sum(self.degrees()) // 2

    def adjacency(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1.0
        return a

    def with_edge(self, u: int, v: int) -> "Graph":
        return Graph.from_edges(self.n, self.edges() + [(u, v)], self.labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        labels = None
        if self.labels is not None:
            lab = [""] * self.n
            for v, p in enumerate(perm):
                lab[p] = self.labels[v]
            labels = lab
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()), labels)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen, frontier = 1, 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.rows[v]
            frontier = nxt & ~seen
            seen |= nxt
        return seen == (1 << self.n) - 1

    def vertices_labelled(self, label: str) -> list[int]:
        if self.labels is None:
            return []
        return [v for v, lab in enumerate(self.labels) if lab == label]

    # serialization

    def to_graph6(self) -> str:
        return to_graph6(self)

    def to_json(self) -> dict:
        d = {"n": self.n, "adjacency": [self.neighbors(v) for v in range(self.n)]}
        if self.labels is not None:
            d["labels"] = list(self.labels)
        return d

    @classmethod
    def from_json(cls, d: dict | str) -> "Graph":
        if isinstance(d, str):
            d = json.loads(d)
        n = d["n"]
        edges = [(u, v) for u, nb in enumerate(d["adjacency"]) for v in nb if u < v]
        g = cls.from_edges(n, edges, d.get("labels"))
        for u, nb in enumerate(d["adjacency"]):
            if sorted(nb) != g.neighbors(u):
                raise ValueError(f"adjacency list of {u} is not symmetric")
        return g

    def canonical_form(self) -> str:
        return canonical_form(self)


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


# graph6 --------------------------------------------------------------------


def _g6_size(n: int) -> str:
    if n < 63:
        return chr(n + 63)
    if n < 258048:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def to_graph6(g: Graph) -> str:
    bits = [1 if g.has_edge(i, j) else 0 for j in range(g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return _g6_size(g.n) + body


def from_graph6(s: str) -> Graph:
    s = s.strip()
    if s.startswith(">>graph6<<"):
        s = s[10:]
    data = [ord(c) - 63 for c in s]
    if any(c < 0 or c > 63 for c in data):
        raise ValueError("not a graph6 string")
    if data[0] == 63:
        if len(data) > 1 and data[1] == 63:
            n = int("".join(f"{c:06b}" for c in data[2:8]), 2)
            data = data[8:]
        else:
            n = int("".join(f"{c:06b}" for c in data[1:4]), 2)
            data = data[4:]
    else:
        n, data = data[0], data[1:]
    need = n * (n - 1) // 2
    if len(data) != (need + 5) // 6:
        raise ValueError(f"graph6 body has {len(data)} bytes, expected {(need + 5) // 6}")
    bits = "".join(f"{c:06b}" for c in data)
    edges, k = [], 0
    for j in range(n):
        for i in range(j):
            if bits[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# canonical form --------------------------------------------------------------


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement; new cells ordered by their neighbor-count signature."""
    cells = [list(c) for c in cells]
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple((g.rows[v] & mk).bit_count() for mk in masks) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) > 1:
                changed = True
            for k in keys:
                out.append([v for v in c if sig[v] == k])
        cells = out
        if not changed:
            return cells


def _adj_string(g: Graph, order: Sequence[int]) -> str:
    return "".join(
        "1" if g.has_edge(order[i], order[j]) else "0"
        for j in range(g.n) for i in range(j)
    )


def canonical_form(g: Graph) -> str:
    """Canonical adjacency string (upper triangle, column-major) of ``g``.

    Individualization-refinement; members of a cell that are twins of an
    already-tried vertex are skipped, since swapping twins is an automorphism.
    """
    if g.n == 0:
        return "0:"
    start = _refine(g, [list(range(g.n))])
    best: list[str | None] = [None]

    def twins(u: int, v: int) -> bool:
        mask = ~((1 << u) | (1 << v))
        return (g.rows[u] & mask) == (g.rows[v] & mask)

    def search(cells: list[list[int]]):
        for idx, c in enumerate(cells):
            if len(c) > 1:
                break
        else:
            s = _adj_string(g, [c[0] for c in cells])
            if best[0] is None or s < best[0]:
                best[0] = s
            return
        tried: list[int] = []
        for v in c:
            if any(twins(v, t) for t in tried):
                continue
            tried.append(v)
            rest = [u for u in c if u != v]
            search(_refine(g, cells[:idx] + [[v], rest] + cells[idx + 1:]))

    search(start)
    return f"{g.n}:{best[0]}"


def canonical_graph(g: Graph) -> Graph:
    return graph_from_canonical(canonical_form(g))


def graph_from_canonical(form: str) -> Graph:
    n, s = form.split(":")
    n = int(n)
    edges, k = [], 0
    for j in range(n):
        for i in range(j):
            if s[k] == "1":
                edges.append((i, j))
            k += 1
    return Graph.from_edges(n, edges)


# families --------------------------------------------------------------------


def _require_even(m: int, lo: int, what: str):
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    if m < lo:
        raise ValueError(f"{what} needs m >= {lo}, got {m}")


def build_s_minus(m: int) -> Graph:
    """K2 v (n-2)K1 with one edge between an apex and the independent set removed, n = (m+4)/2."""
    _require_even(m, 6, "S^-_{(m+4)/2,2}")
    n = (m + 4) // 2
    edges = [(0, 1)] + [(0, i) for i in range(2, n)] + [(1, i) for i in range(3, n)]
    labels = ["apex", "apex-", "pendant"] + ["independent"] * (n - 3)
    return Graph.from_edges(n, edges, labels)


def build_t(m: int) -> Graph:
    """T_m = K1 v (K4 u (m-10)K1)."""
    _require_even(m, 10, "T_m")
    n = m - 5
    edges = [(0, i) for i in range(1, n)] + list(combinations(range(1, 5), 2))
    labels = ["u*"] + ["A+"] * 4 + ["A0"] * (m - 10)
    return Graph.from_edges(n, edges, labels)


EW1_MIN_M = {"same": 14, "dist": 16, "mixed": 14}


def build_ew1_family(kind: str, m: int) -> Graph:
    """The e(W) = 1 graphs: both ends of the W-edge on one A0 vertex, on two, or one end on A+."""
    if kind == "distinct":
        kind = "dist"
    if kind not in EW1_MIN_M:
        raise ValueError(f"unknown e(W)=1 family {kind!r}")
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    if m < EW1_MIN_M[kind]:
        raise ValueError(f"{kind} family has a negative leaf count below m = {EW1_MIN_M[kind]}")
    core = [(0, i) for i in range(1, 5)] + list(combinations(range(1, 5), 2))
    if kind == "same":
        # z = 5, x = 6, y = 7
        extra = [(0, 5), (5, 6), (5, 7), (6, 7)]
        labels = ["u*"] + ["A+"] * 4 + ["A0*", "W", "W"]
    elif kind == "dist":
        # z1 = 5, z2 = 6, x = 7, y = 8
        extra = [(0, 5), (0, 6), (5, 7), (6, 8), (7, 8)]
        labels = ["u*"] + ["A+"] * 4 + ["A0*", "A0*", "W", "W"]
    else:
        # A+ vertex 1 carries x = 6; z = 5 carries y = 7
        extra = [(0, 5), (1, 6), (5, 7), (6, 7)]
        labels = ["u*", "A+w"] + ["A+"] * 3 + ["A0*", "W+", "W0"]
    k = len(labels)
    leaves = m - len(core) - len(extra)
    edges = core + extra + [(0, k + i) for i in range(leaves)]
    return Graph.from_edges(k + leaves, edges, labels + ["A0"] * leaves)


def build_family(name: str, m: int) -> Graph:
    if name == "s-minus":
        return build_s_minus(m)
    if name == "t":
        return build_t(m)
    return build_ew1_family(name, m)


# partitions and quotients ----------------------------------------------------


class NotEquitableError(ValueError):
    def __init__(self, i: int, j: int, counts):
        super().__init__(
            f"partition is not equitable: vertices of block {i} see {sorted(set(counts))} "
            f"neighbours in block {j}"
        )
        self.blocks = (i, j)


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        object.__setattr__(self, "blocks", tuple(tuple(b) for b in blocks))

    def validate(self, n: int):
        seen = [v for b in self.blocks for v in b]
        if any(not b for b in self.blocks):
            raise ValueError("empty block")
        if sorted(seen) != list(range(n)):
            raise ValueError("blocks must be disjoint and cover every vertex")


_ROLE_ORDER = {
    "s-minus": ("apex", "apex-", "pendant", "independent"),
    "t": ("u*", "A+", "A0"),
    "same": ("u*", "A+", "A0*", "W", "A0"),
    "dist": ("u*", "A+", "A0*", "W", "A0"),
    "mixed": ("u*", "A+w", "A+", "A0*", "W+", "W0", "A0"),
}


def role_partition(g: Graph, name: str) -> Partition:
    """Blocks in the order used for the displayed quotient matrices."""
    return Partition([g.vertices_labelled(r) for r in _ROLE_ORDER[name] if g.vertices_labelled(r)])


@dataclass(frozen=True)
class QuotientMatrix:
    entries: tuple[tuple[Fraction, ...], ...]
    sizes: tuple[int, ...]

    def char_poly(self) -> UniPoly:
        return _char_poly(self.entries)

    def as_lists(self) -> list[list[int]]:
        return [[int(e) for e in row] for row in self.entries]


def quotient(g: Graph, p: Partition) -> QuotientMatrix:
    p.validate(g.n)
    masks = [sum(1 << v for v in b) for b in p.blocks]
    rows = []
    for i, b in enumerate(p.blocks):
        row = []
        for j, mk in enumerate(masks):
            counts = [(g.rows[v] & mk).bit_count() for v in b]
            if len(set(counts)) != 1:
                raise NotEquitableError(i, j, counts)
            row.append(Fraction(counts[0]))
        rows.append(tuple(row))
    return QuotientMatrix(tuple(rows), tuple(len(b) for b in p.blocks))


def char_poly(q: QuotientMatrix | Sequence[Sequence]) -> UniPoly:
    if isinstance(q, QuotientMatrix):
        return q.char_poly()
    return _char_poly(q)


def family_quotient(name: str, m: int) -> QuotientMatrix:
    g = build_family(name, m)
    return quotient(g, role_partition(g, name))


def symbolic_quotient(name: str, ms: Sequence[int] = (18, 20, 22, 30)) -> list[list[BiPoly]]:
    """Quotient matrix with entries affine in m, fitted from concrete graphs.

    Entries are interpolated from the first two values of ``ms`` and checked
    against the rest, so a non-affine dependence raises.
    """
    qs = [family_quotient(name, m) for m in ms]
    m0, m1 = ms[0], ms[1]
    k = len(qs[0].entries)
    out = []
    for i in range(k):
        row = []
        for j in range(k):
            e0, e1 = qs[0].entries[i][j], qs[1].entries[i][j]
            slope = (e1 - e0) / (m1 - m0)
            poly = BiPoly({(0, 0): e0 - slope * m0, (0, 1): slope})
            for m, q in zip(ms[2:], qs[2:]):
                if poly.evaluate(0, m) != q.entries[i][j]:
                    raise ValueError(f"entry ({i},{j}) of the {name} quotient is not affine in m")
            row.append(poly)
        out.append(row)
    return out


def symbolic_char_poly(name: str) -> BiPoly:
    return char_poly_symbolic(symbolic_quotient(name))
