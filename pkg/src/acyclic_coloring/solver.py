"""Exact search for acyclic edge colorings.

The backtracking search colors edges in a fixed order.  Before giving edge
``(u, v)`` color ``c`` it checks, for every color ``c'`` present at both
ends, whether the unique ``(c', c)``-alternating walk out of ``v`` reaches
``u``; if so the new edge would close a bichromatic cycle.

Palette symmetry is broken by letting an edge use a new color only if every
smaller color is already in use.  The ``"star"`` level additionally roots
the edge order at a maximum-degree vertex, which pins that vertex's edges
to colors ``0..Δ-1``.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .bounds import BoundError, graph_lower_bound, regular_baseline
from .coloring import EdgeColoring, verify_acyclic
from .graph import Graph, is_regular

FOUND = "found"
EXHAUSTED = "exhausted"
TIMEOUT = "timeout"

SYMMETRY_LEVELS = ("none", "first-unused", "star")
EDGE_ORDERS = ("bfs", "index")

BRUTE_FORCE_CAP = 10**8


class SolverError(ValueError):
    pass


class InstanceTooLarge(SolverError):
    pass


@dataclass
class SearchConfig:
    edge_order: str = "bfs"
    symmetry_breaking: str = "first-unused"
    node_limit: Optional[int] = None
    time_limit: Optional[float] = None  # seconds

    def __post_init__(self):
        if self.edge_order not in EDGE_ORDERS:
            raise SolverError(f"unknown edge order {self.edge_order!r}")
        if self.symmetry_breaking not in SYMMETRY_LEVELS:
            raise SolverError(f"unknown symmetry level {self.symmetry_breaking!r}")
        if self.node_limit is not None and self.node_limit <= 0:
            raise SolverError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise SolverError("time_limit must be positive")


@dataclass
class SolveResult:
    status: str
    k: int
    witness: Optional[EdgeColoring] = None
    nodes_explored: int = 0
    elapsed: float = 0.0

    def to_json(self) -> dict:
        return {"status": self.status, "k": self.k, "nodes": self.nodes_explored,
                "elapsed_ms": round(self.elapsed * 1000, 3)}


def bfs_edge_order(g: Graph, root: int = 0) -> list[int]:
    """Edges in the order their first endpoint is reached by BFS from ``root``.

    Unreached components are continued from their smallest vertex.
    """
    n = g.num_vertices
    emitted = [False] * g.num_edges
    seen = [False] * n
    order: list[int] = []
    starts = [root] + [v for v in range(n) if v != root] if n else []
    for s in starts:
        if seen[s]:
            continue
        seen[s] = True
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w, eid in g.adjacency[u]:
                if not emitted[eid]:
                    emitted[eid] = True
                    order.append(eid)
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order


def _edge_order(g: Graph, cfg: SearchConfig) -> list[int]:
    if cfg.edge_order == "index":
        order = list(range(g.num_edges))
        if cfg.symmetry_breaking == "star" and g.num_vertices:
            root = _max_degree_vertex(g)
            star = [eid for _, eid in g.adjacency[root]]
            in_star = set(star)
            order = star + [e for e in order if e not in in_star]
        return order
    root = _max_degree_vertex(g) if cfg.symmetry_breaking == "star" and g.num_vertices else 0
    return bfs_edge_order(g, root)


def _max_degree_vertex(g: Graph) -> int:
    degs = g.degrees()
    return degs.index(max(degs))


def exists_acyclic_coloring(g: Graph, k: int, cfg: Optional[SearchConfig] = None) -> SolveResult:
    """Decide whether ``g`` has an acyclic edge coloring with ``k`` colors."""
    if k < 0:
        raise SolverError(f"negative palette size {k}")
    cfg = cfg or SearchConfig()
    t0 = time.perf_counter()
    deadline = None if cfg.time_limit is None else t0 + cfg.time_limit
    m = g.num_edges
    order = _edge_order(g, cfg)
    ends = g.edges
    use_fu = cfg.symmetry_breaking != "none"

    color_of = [-1] * m
    at = [[-1] * k for _ in range(g.num_vertices)]  # at[v][c]: neighbor via color c
    nxt = [0] * (m + 1)
    used = [0] * (m + 1)  # distinct colors used by order[:depth]
    nodes = 0
    node_limit = cfg.node_limit

    def closes_cycle(u: int, v: int, c: int) -> bool:
        at_u, at_v = at[u], at[v]
        for c2 in range(k):
            if c2 == c or at_u[c2] < 0 or at_v[c2] < 0:
                continue
            x, col = v, c2
            while True:
                y = at[x][col]
                if y < 0:
                    break
                if y == u:
                    return True
                x = y
                col = c if col == c2 else c2
        return False

    status = None
    depth = 0
    while True:
        if depth == m:
            status = FOUND
            break
        if depth < 0:
            status = EXHAUSTED
            break
        e = order[depth]
        u, v = ends[e]
        prev = color_of[e]
        if prev >= 0:
            at[u][prev] = -1
            at[v][prev] = -1
            color_of[e] = -1
        hi = min(k, used[depth] + 1) if use_fu else k
        c = nxt[depth]
        placed = False
        while c < hi:
            if at[u][c] < 0 and at[v][c] < 0 and not closes_cycle(u, v, c):
                color_of[e] = c
                at[u][c] = v
                at[v][c] = u
                nxt[depth] = c + 1
                used[depth + 1] = max(used[depth], c + 1)
                depth += 1
                nxt[depth] = 0
                nodes += 1
                placed = True
                break
            c += 1
        if not placed:
            nxt[depth] = 0
            depth -= 1
        if node_limit is not None and nodes >= node_limit and depth < m:
            status = TIMEOUT
            break
        if deadline is not None and (nodes & 1023) == 0 and time.perf_counter() > deadline:
            status = TIMEOUT
            break

    elapsed = time.perf_counter() - t0
    if status == FOUND:
        witness = EdgeColoring(k, list(color_of))
        verdict = verify_acyclic(g, witness)
        if not verdict.ok:
            raise AssertionError(f"solver produced a non-acyclic witness: {verdict}")
        return SolveResult(FOUND, k, witness, nodes, elapsed)
    return SolveResult(status, k, None, nodes, elapsed)


def brute_force_oracle(g: Graph, k: int) -> SolveResult:
    """Try every one of the ``k ** |E|`` assignments; no pruning."""
    m = g.num_edges
    if k < 0:
        raise SolverError(f"negative palette size {k}")
    if k ** m > BRUTE_FORCE_CAP:
        raise InstanceTooLarge(f"{k}^{m} assignments exceeds cap {BRUTE_FORCE_CAP}")
    t0 = time.perf_counter()
    tried = 0
    for assignment in itertools.product(range(k), repeat=m):
        tried += 1
        c = EdgeColoring(k, list(assignment))
        if verify_acyclic(g, c).ok:
            return SolveResult(FOUND, k, c, tried, time.perf_counter() - t0)
    return SolveResult(EXHAUSTED, k, None, tried, time.perf_counter() - t0)


@dataclass
class IndexResult:
    """Outcome of computing the acyclic chromatic index.

    ``value`` is set when the search settled it; otherwise ``bracket`` holds
    the best ``(lo, hi)`` known, ``hi`` being ``None`` if nothing was found.
    ``trace`` lists ``(k, reason)`` steps for each certified lower bound.
    """

    status: str
    value: Optional[int]
    witness: Optional[EdgeColoring]
    bracket: tuple[int, Optional[int]]
    trace: list[tuple[int, str]] = field(default_factory=list)
    nodes_explored: int = 0
    elapsed: float = 0.0


def starting_lower_bound(g: Graph) -> tuple[int, str]:
    delta = g.max_degree()
    lo, why = delta, "max degree"
    d = is_regular(g)
    if d is not None and d > 0:
        try:
            rep = graph_lower_bound(g)
            if rep.bound > lo:
                lo, why = rep.bound, f"{rep.rule} bound (d={d}, m={g.num_vertices // 2})"
        except BoundError:
            if regular_baseline(d) > lo:
                lo, why = regular_baseline(d), f"regular-baseline (d={d})"
    return lo, why


def acyclic_chromatic_index(g: Graph, cfg: Optional[SearchConfig] = None,
                            start: Optional[int] = None) -> IndexResult:
    """Smallest ``k`` admitting an acyclic coloring, searching upward from a lower bound.

    ``start`` overrides the bound-derived starting point; it must not exceed it
    or the returned value is only an upper bound.
    """
    t0 = time.perf_counter()
    lo, why = starting_lower_bound(g)
    trace = [(lo, why)]
    if start is not None:
        lo = start
    nodes = 0
    k = lo
    while True:
        res = exists_acyclic_coloring(g, k, cfg)
        nodes += res.nodes_explored
        if res.status == FOUND:
            return IndexResult(FOUND, k, res.witness, (k, k), trace, nodes, time.perf_counter() - t0)
        if res.status == TIMEOUT:
            # every edge on its own color is always acyclic
            return IndexResult(TIMEOUT, None, None, (k, max(k, g.num_edges)), trace, nodes,
                               time.perf_counter() - t0)
        trace.append((k + 1, f"exhausted k={k}"))
        k += 1
