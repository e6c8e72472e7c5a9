"""Exhaustive search over residual K4-branch configurations.

A configuration fixes a small graph on W, which W vertices hang off which
A+ vertex, which hang off which special A0 vertex, and how many pendant
leaves u* carries. Everything else (u*, the K4 on A+) is common.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from itertools import combinations, product
from typing import Iterator, Sequence

from .graphs import Graph, canonical_form, from_graph6
from .h43 import contains_h43
from .spectral import PerronFailure, perron_root, rho_prime

log = logging.getLogger(__name__)

APLUS_SIZE = 4
MAX_APLUS_EDGES = 3
GAP_SLACK = 0.2

# best residual rho at m = 18, 20, 22 as tabulated by the original search
PUBLISHED_BEST = {18: 4.314116352656, 20: 4.429504228648, 22: 4.554102569862}


def w_components(w: Graph) -> list[int]:
    """Vertex bitmasks of the connected components of ``w``."""
    comps, seen = [], 0
    for v in range(w.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for u in range(w.n):
                if frontier >> u & 1:
                    nxt |= w.rows[u]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def _reaches_outside(w: Graph, attached: set[int]) -> bool:
    return all(any(c >> v & 1 for v in attached) for c in w_components(w))


def set_partitions(items: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings: block index of each item, blocks numbered by first use."""
    k = len(items)

    def grow(prefix: list[int], top: int):
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for b in range(top + 1):
            yield from grow(prefix + [b], max(top, b + 1))

    yield from grow([], 0)


def enumerate_w_graphs(e_w: int) -> list[Graph]:
    """Isomorphism classes of graphs with ``e_w`` edges and no isolated vertices.

    Brute force over edge subsets of K_{2 e_w}; the result is sorted by
    (vertex count, canonical string) so the order is reproducible.
    """
    if e_w < 1:
        raise ValueError("need at least one edge")
    n = 2 * e_w
    seen: dict[str, Graph] = {}
    for es in combinations(combinations(range(n), 2), e_w):
        used = sorted({v for e in es for v in e})
        idx = {v: i for i, v in enumerate(used)}
        g = Graph.from_edges(len(used), [(idx[u], idx[v]) for u, v in es])
        seen.setdefault(canonical_form(g), g)
    return [seen[k] for k in sorted(seen, key=lambda s: (int(s.split(":")[0]), s))]


@dataclass(frozen=True)
class ResidualConfig:
    """One residual configuration.

    ``aplus_attach[w]`` is None or an A+ class index; W vertices sharing an
    index share their A+ neighbour. ``a0_attach[w]`` is None or a slot id of
    a special A0 vertex (shared ids share the vertex).
    """

    w_graph: Graph
    aplus_attach: tuple[int | None, ...]
    a0_attach: tuple[int | None, ...]
    leaf_count: int

    @property
    def e_w(self) -> int:
        return self.w_graph.num_edges

    @property
    def e_aplus_w(self) -> int:
        return sum(a is not None for a in self.aplus_attach)

    @property
    def e_a0_w(self) -> int:
        return sum(a is not None for a in self.a0_attach)

    @property
    def n_slots(self) -> int:
        return len({a for a in self.a0_attach if a is not None})

    @property
    def a0_size(self) -> int:
        return self.n_slots + self.leaf_count

    @property
    def m(self) -> int:
        return 4 + self.a0_size + 6 + self.e_aplus_w + self.e_a0_w + self.e_w

    def violations(self) -> list[str]:
        w = self.w_graph
        out = []
        if len(self.aplus_attach) != w.n or len(self.a0_attach) != w.n:
            return ["attachment maps must cover every W vertex"]
        if any(w.degree(v) == 0 for v in range(w.n)):
            out.append("W has an isolated vertex")
        if self.leaf_count < 0:
            out.append("negative leaf count")
        for v in range(w.n):
            a, z = self.aplus_attach[v], self.a0_attach[v]
            if a is not None and z is not None:
                out.append(f"W vertex {v} attached to both A+ and A0")
            if w.degree(v) == 1 and a is None and z is None:
                out.append(f"W vertex {v} would have degree 1")
            if a is not None and not 0 <= a < APLUS_SIZE:
                out.append(f"A+ class {a} out of range")
        attached = {v for v in range(w.n) if self.aplus_attach[v] is not None or self.a0_attach[v] is not None}
        if not _reaches_outside(w, attached):
            out.append("a component of W has no attachment (graph would be disconnected)")
        u = [v for v in range(w.n) if self.aplus_attach[v] is not None]
        if any(w.has_edge(x, y) for x, y in combinations(u, 2)):
            out.append("A+-attached W vertices are not independent")
        if len(u) > MAX_APLUS_EDGES:
            out.append(f"e(A+, W) = {len(u)} > {MAX_APLUS_EDGES}")
        return out

    def validate(self):
        bad = self.violations()
        if bad:
            raise ValueError("; ".join(bad))

    def realize(self) -> Graph:
        """u* = 0, A+ = 1..4, then special A0 slots, then W, then leaves."""
        w = self.w_graph
        slots = sorted({a for a in self.a0_attach if a is not None})
        slot_at = {s: 1 + APLUS_SIZE + i for i, s in enumerate(slots)}
        w0 = 1 + APLUS_SIZE + len(slots)
        leaf0 = w0 + w.n
        n = leaf0 + self.leaf_count
        edges = [(0, i) for i in range(1, 1 + APLUS_SIZE)]
        edges += list(combinations(range(1, 1 + APLUS_SIZE), 2))
        edges += [(0, slot_at[s]) for s in slots]
        edges += [(w0 + x, w0 + y) for x, y in w.edges()]
        for v in range(w.n):
            if self.aplus_attach[v] is not None:
                edges.append((1 + self.aplus_attach[v], w0 + v))
            if self.a0_attach[v] is not None:
                edges.append((slot_at[self.a0_attach[v]], w0 + v))
        edges += [(0, v) for v in range(leaf0, n)]
        labels = ["u*"] + ["A+"] * APLUS_SIZE + ["A0*"] * len(slots) + ["W"] * w.n
        labels += ["A0"] * self.leaf_count
        return Graph.from_edges(n, edges, labels)

    def to_json(self) -> dict:
        return {
            "w_edges": self.w_graph.edges(),
            "w_n": self.w_graph.n,
            "aplus_attach": list(self.aplus_attach),
            "a0_attach": list(self.a0_attach),
            "leaf_count": self.leaf_count,
        }


def enumerate_residual(m: int, e_ws: Sequence[int] = (2, 3)) -> Iterator[tuple[ResidualConfig, Graph]]:
    """Every admissible configuration with exactly ``m`` edges, in a fixed order."""
    if m % 2:
        raise ValueError(f"m must be even, got {m}")
    for e_w in e_ws:
        for w in enumerate_w_graphs(e_w):
            for kinds in product((0, 1, 2), repeat=w.n):  # none, A+, A0
                if any(k == 0 and w.degree(v) < 2 for v, k in enumerate(kinds)):
                    continue
                if not _reaches_outside(w, {v for v, k in enumerate(kinds) if k}):
                    continue
                u = [v for v, k in enumerate(kinds) if k == 1]
                z = [v for v, k in enumerate(kinds) if k == 2]
                if len(u) > MAX_APLUS_EDGES or any(w.has_edge(x, y) for x, y in combinations(u, 2)):
                    continue
                for pu in set_partitions(u):
                    for pz in set_partitions(z):
                        n_slots = max(pz) + 1 if pz else 0
                        leaves = m - 10 - len(u) - len(z) - e_w - n_slots
                        if leaves < 0:
                            continue
                        ap = [None] * w.n
                        a0 = [None] * w.n
                        for v, b in zip(u, pu):
                            ap[v] = b
                        for v, b in zip(z, pz):
                            a0[v] = b
                        cfg = ResidualConfig(w, tuple(ap), tuple(a0), leaves)
                        yield cfg, cfg.realize()


@dataclass
class Candidate:
    canonical: str
    graph6: str
    rho: float | None = None
    error: str | None = None


@dataclass
class SearchRow:
    m: int
    rho_prime: float
    rho_prime_interval: tuple[str, str]
    n_configs: int
    n_h43_free: int
    n_unique: int
    best_rho: float | None
    gap: float | None
    best_graph6: str | None
    best_canonical: str | None
    best_config: dict | None
    published_best: float | None
    matches_published: bool | None
    exceeds_published: bool
    within_slack: bool
    reaches_rho_prime: bool
    failures: list[dict] = field(default_factory=list)
    survivors: list[str] = field(default_factory=list)

    def to_json(self, with_survivors: bool = False) -> dict:
        d = asdict(self)
        d["rho_prime_interval"] = list(self.rho_prime_interval)
        if not with_survivors:
            d.pop("survivors")
        return d


@dataclass
class SearchReport:
    rows: list[SearchRow]
    margin: float
    seconds: float

    def to_json(self, with_survivors: bool = False) -> dict:
        return {
            "margin": self.margin,
            "seconds": self.seconds,
            "rows": [r.to_json(with_survivors) for r in self.rows],
        }

    def table(self) -> str:
        head = ("m", "rho'(m)", "best residual rho", "gap")
        body = [
            (
                str(r.m),
                f"{r.rho_prime:.12f}",
                "-" if r.best_rho is None else f"{r.best_rho:.12f}",
                "-" if r.gap is None else f"{r.gap:.12f}",
            )
            for r in self.rows
        ]
        widths = [max(len(x) for x in col) for col in zip(head, *body)]
        fmt = lambda row: "  ".join(x.rjust(w) for x, w in zip(row, widths))
        lines = [fmt(head), "  ".join("-" * w for w in widths)] + [fmt(b) for b in body]
        return "\n".join(lines)

    @property
    def ok(self) -> bool:
        return all(r.within_slack and not r.reaches_rho_prime and not r.failures for r in self.rows)


def _rho_of(g6: str) -> tuple[float | None, str | None]:
    try:
        return perron_root(from_graph6(g6)), None
    except (PerronFailure, ValueError) as exc:
        return None, str(exc)


def _evaluate(cands: list[Candidate], jobs: int):
    g6s = [c.graph6 for c in cands]
    if jobs > 1 and len(g6s) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_rho_of, g6s, chunksize=max(1, len(g6s) // (4 * jobs))))
    else:
        results = [_rho_of(s) for s in g6s]
    for c, (rho, err) in zip(cands, results):
        c.rho, c.error = rho, err


def search_one(m: int, margin: float = 1e-6, jobs: int = 1) -> SearchRow:
    rp = rho_prime(m)
    n_configs = n_free = 0
    uniq: dict[str, tuple[Candidate, ResidualConfig]] = {}
    for cfg, g in enumerate_residual(m):
        n_configs += 1
        if contains_h43(g):
            continue
        n_free += 1
        key = canonical_form(g)
        if key not in uniq:
            uniq[key] = (Candidate(key, g.to_graph6()), cfg)
    cands = [c for c, _ in uniq.values()]
    _evaluate(cands, jobs)
    ok = [c for c in cands if c.rho is not None]
    best = min(ok, key=lambda c: (-c.rho, c.canonical)) if ok else None
    published = PUBLISHED_BEST.get(m)
    best_rho = best.rho if best else None
    row = SearchRow(
        m=m,
        rho_prime=rp.value,
        rho_prime_interval=(str(rp.lo), str(rp.hi)),
        n_configs=n_configs,
        n_h43_free=n_free,
        n_unique=len(cands),
        best_rho=best_rho,
        gap=None if best is None else rp.value - best.rho,
        best_graph6=best.graph6 if best else None,
        best_canonical=best.canonical if best else None,
        best_config=uniq[best.canonical][1].to_json() if best else None,
        published_best=published,
        matches_published=None if published is None or best is None else abs(best_rho - published) <= margin,
        exceeds_published=published is not None and best is not None and best_rho > published + margin,
        within_slack=all(c.rho < rp.value - GAP_SLACK for c in ok),
        reaches_rho_prime=any(c.rho >= rp.value - margin for c in ok),
        failures=[{"canonical": c.canonical, "graph6": c.graph6, "error": c.error} for c in cands if c.error],
        survivors=sorted(c.graph6 for c in cands),
    )
    if row.exceeds_published:
        log.warning("m=%d: residual maximum %.12f exceeds the tabulated %.12f", m, best_rho, published)
    if row.reaches_rho_prime:
        log.error("m=%d: a residual graph reaches rho'(m) = %.12f", m, rp.value)
    return row


def run_search(ms: Sequence[int], margin: float = 1e-6, jobs: int = 1) -> SearchReport:
    for m in ms:
        if m % 2:
            raise ValueError(f"m must be even, got {m}")
    t0 = time.perf_counter()
    rows = [search_one(m, margin, jobs) for m in ms]
    return SearchReport(rows, margin, time.perf_counter() - t0)
