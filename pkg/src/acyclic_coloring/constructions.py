"""Graph families and constructive machinery.

* standard generators: complete, complete bipartite, cycle, cocktail-party,
  circulant;
* the splice that plants a dense gadget (``K_{d+1}`` or a cocktail-party
  graph) into an arbitrary d-regular graph, forcing d+2 colors;
* cyclic perfect 1-factorizations of ``K_{p,p}`` for odd primes ``p`` and
  their restriction to acyclic colorings of smaller complete bipartite
  graphs;
* the one-vertex-per-side extension of an (n+1)-coloring of ``K_{n,n}``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional

from .bounds import BoundReport, robust_counting_check
from .coloring import (
    EdgeColoring,
    class_sizes,
    missing_colors,
    verify_acyclic,
)
from .graph import Graph, delete_vertices, is_regular
from .permutations import (
    PerfectMatchingSet,
    Permutation,
    PermutationError,
    are_disjoint,
    union_is_hamiltonian,
)


class ConstructionError(ValueError):
    pass


class InfeasibleParameters(ConstructionError):
    pass


@dataclass(frozen=True)
class BipartiteLabeling:
    """Side A is ``0..n_a-1``, side B is ``n_a..n_a+n_b-1``."""

    n_a: int
    n_b: int

    @property
    def n(self) -> int:
        if self.n_a != self.n_b:
            raise ConstructionError("unbalanced bipartition has no single side size")
        return self.n_a

    @property
    def side_a(self) -> range:
        return range(self.n_a)

    @property
    def side_b(self) -> range:
        return range(self.n_a, self.n_a + self.n_b)

    def a(self, j: int) -> int:
        return j

    def b(self, j: int) -> int:
        return self.n_a + j

    def crosses(self, u: int, v: int) -> bool:
        return (u < self.n_a) != (v < self.n_a)


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ConstructionError(f"complete graph needs n >= 1, got {n}")
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def complete_bipartite(n_a: int, n_b: Optional[int] = None) -> tuple[Graph, BipartiteLabeling]:
    """``K_{n_a,n_b}`` (``K_{n,n}`` when ``n_b`` is omitted)."""
    n_b = n_a if n_b is None else n_b
    if n_a < 1 or n_b < 1:
        raise ConstructionError(f"complete bipartite graph needs sides >= 1, got {n_a}, {n_b}")
    lab = BipartiteLabeling(n_a, n_b)
    g = Graph.from_edges(n_a + n_b, ((a, lab.b(j)) for a in range(n_a) for j in range(n_b)))
    return g, lab


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"cycle needs n >= 3, got {n}")
    return Graph.from_edges(n, sorted((min(i, (i + 1) % n), max(i, (i + 1) % n)) for i in range(n)))


def cocktail_party_graph(v: int) -> Graph:
    """Complete graph on ``v`` vertices minus the matching ``{2i, 2i+1}``."""
    if v % 2 or v < 4:
        raise ConstructionError(f"cocktail-party graph needs even v >= 4, got {v}")
    return Graph.from_edges(v, ((a, b) for a, b in itertools.combinations(range(v), 2)
                                if not (a % 2 == 0 and b == a + 1)))


def circulant_graph(v: int, offsets: Iterable[int]) -> Graph:
    """Vertex ``i`` adjacent to ``i +- o mod v`` for each offset.

    Each offset adds degree 2, except ``v/2`` for even ``v`` which adds 1.
    """
    offsets = sorted(set(offsets))
    half = v // 2
    for o in offsets:
        if not 1 <= o <= half:
            raise ConstructionError(f"offset {o} outside 1..{half}")
    pairs = set()
    for i in range(v):
        for o in offsets:
            j = (i + o) % v
            pairs.add((min(i, j), max(i, j)))
    return Graph.from_edges(v, sorted(pairs))


@dataclass
class SpliceSpec:
    d: int
    n: int
    gadget: str  # "complete" or "cocktail-party"
    gadget_order: int
    host_offsets: tuple[int, ...]
    removed: tuple[tuple[int, int], tuple[int, int]]
    added: tuple[tuple[int, int], tuple[int, int]]
    robust_report: BoundReport

    @property
    def gadget_vertices(self) -> range:
        return range(self.gadget_order)


def _splice_gadget_order(d: int) -> int:
    return d + 1 if d % 2 else d + 2


def theorem2_splice(d: int, n: int) -> tuple[Graph, SpliceSpec]:
    """Connected d-regular graph on ``n`` vertices that needs d+2 colors.

    Vertices ``0..n'-1`` hold the gadget (``K_{d+1}`` for odd d, the
    cocktail-party graph on ``d+2`` vertices for even d); the rest hold a
    circulant host with offsets ``1..floor(d/2)`` (plus the antipodal offset
    for odd d).  The lexicographically smallest edge of each part is cut
    and the four loose ends are rejoined smallest-to-smallest.
    """
    if d < 5:
        raise InfeasibleParameters(f"need d >= 5, got d={d}")
    if n < 2 * d + 3:
        raise InfeasibleParameters(f"need n >= 2d+3 = {2 * d + 3}, got n={n}")
    n_gadget = _splice_gadget_order(d)
    n_host = n - n_gadget
    if (d * n) % 2:
        raise InfeasibleParameters(
            f"parity: d*n = {d * n} is odd; the host would need {n_host} vertices "
            f"with d*{n_host} = {d * n_host} odd")
    if n_host < d + 1:
        raise InfeasibleParameters(f"host needs at least d+1 = {d + 1} vertices, has {n_host}")
    if (d * n_host) % 2:
        raise InfeasibleParameters(f"parity: host on {n_host} vertices with d*{n_host} = {d * n_host} odd")

    gadget = complete_graph(n_gadget) if d % 2 else cocktail_party_graph(n_gadget)
    offsets = list(range(1, d // 2 + 1))
    if d % 2:
        offsets.append(n_host // 2)
    host = circulant_graph(n_host, offsets)
    if is_regular(host) != d:
        raise ConstructionError(f"host circulant is not {d}-regular")

    a, a2 = gadget.edges[0]
    b, b2 = (x + n_gadget for x in host.edges[0])
    g = Graph(n)
    for u, v in gadget.edges[1:]:
        g.add_edge(u, v)
    for u, v in host.edges[1:]:
        g.add_edge(u + n_gadget, v + n_gadget)
    g.add_edge(a, b)
    g.add_edge(a2, b2)

    _, report = robust_counting_check(d, n_gadget // 2, 1)
    spec = SpliceSpec(d, n, "complete" if d % 2 else "cocktail-party", n_gadget, tuple(offsets),
                      ((a, a2), (b, b2)), ((a, b), (a2, b2)), report)
    return g, spec


def gadget_minus_edge(spec: SpliceSpec) -> Graph:
    """The gadget with its cut edge removed, as planted in the splice."""
    gadget = complete_graph(spec.gadget_order) if spec.gadget == "complete" \
        else cocktail_party_graph(spec.gadget_order)
    return Graph.from_edges(spec.gadget_order, gadget.edges[1:])


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def cyclic_p1f(p: int) -> PerfectMatchingSet:
    """Matching ``i`` is ``j -> j + i mod p``.  Relative shifts are nonzero mod
    a prime, hence single ``p``-cycles."""
    if p % 2 == 0 or not is_prime(p):
        raise ConstructionError(f"p={p} is not an odd prime")
    return PerfectMatchingSet(p, [Permutation.shift(p, i) for i in range(p)])


def is_perfect_1factorization(ms: PerfectMatchingSet) -> tuple[bool, Optional[tuple[int, int]]]:
    """Check disjointness, count ``n`` and pairwise Hamiltonian unions.

    Returns ``(ok, failing_pair)``; ``failing_pair`` is ``None`` when the
    failure is the matching count.
    """
    pis = ms.matchings
    for i, j in itertools.combinations(range(len(pis)), 2):
        if not are_disjoint(pis[i], pis[j]):
            return False, (i, j)
    if len(pis) != ms.n:
        return False, None
    for i, j in itertools.combinations(range(len(pis)), 2):
        if not union_is_hamiltonian(pis[i], pis[j]):
            return False, (i, j)
    return True, None


def matchings_graph(n: int, matchings: Iterable[Permutation]) -> Graph:
    """Union of matchings as a subgraph of ``K_{n,n}`` (B side offset by n)."""
    g = Graph(2 * n)
    for pi in matchings:
        for j in range(n):
            if not g.has_edge(j, n + pi[j]):
                g.add_edge(j, n + pi[j])
    return g


def p1f_coloring(ms: PerfectMatchingSet) -> tuple[Graph, BipartiteLabeling, EdgeColoring]:
    """``K_{m,m}`` with each edge colored by the index of its matching."""
    g, lab = complete_bipartite(ms.n)
    c = EdgeColoring.empty(g, len(ms))
    for i, pi in enumerate(ms.matchings):
        for j in range(ms.n):
            c[g.edge_id(j, lab.b(pi[j]))] = i
    return g, lab, c


def p1f_restrict(ms: PerfectMatchingSet, drop_a: int, drop_b: int) -> tuple[Graph, EdgeColoring]:
    """Delete the highest ``drop_a`` A-vertices and ``drop_b`` B-vertices of a
    perfect 1-factorization; the induced m-coloring is acyclic."""
    m = ms.n
    ok, pair = is_perfect_1factorization(ms)
    if not ok:
        raise ConstructionError(f"not a perfect 1-factorization (failing pair {pair})")
    if drop_b < 1:
        raise ConstructionError("drop_b must be >= 1: every color pair of the full P1F is a Hamiltonian cycle")
    if not (0 <= drop_a < m and drop_b < m):
        raise ConstructionError(f"drops must be below m={m}, got {drop_a}, {drop_b}")
    full, lab, c_full = p1f_coloring(ms)
    doomed = list(range(m - drop_a, m)) + [lab.b(j) for j in range(m - drop_b, m)]
    g, mapping = delete_vertices(full, doomed)
    c = EdgeColoring.empty(g, m)
    for eid, (u, v) in enumerate(full.edges):
        if u in mapping and v in mapping:
            c[g.edge_id(mapping[u], mapping[v])] = c_full[eid]
    verdict = verify_acyclic(g, c)
    if not verdict.ok:
        raise AssertionError(f"restricted P1F coloring is not acyclic: {verdict}")
    return g, c


@dataclass
class Extension:
    """Result of extending an (n+1)-coloring of ``K_{n,n}`` to ``K_{n+1,n+1}``.

    ``matchings`` holds the classes alpha, beta, gamma as permutations
    (A-index -> B-index) when each is a perfect matching of the new graph;
    ``hamiltonian`` records the pairwise union checks.
    """

    graph: Graph
    labeling: BipartiteLabeling
    coloring: EdgeColoring
    alpha: int
    beta: int
    gamma: int
    a1: int
    b1: int
    a2: int
    b2: int
    matchings: dict[int, Permutation] = field(default_factory=dict)
    hamiltonian: dict[tuple[int, int], bool] = field(default_factory=dict)

    def __iter__(self):
        return iter((self.graph, self.coloring))


def _class_permutation(g: Graph, lab: BipartiteLabeling, c: EdgeColoring, color: int) -> Optional[Permutation]:
    images = [-1] * lab.n_a
    for eid, (u, v) in enumerate(g.edges):
        if c[eid] == color:
            a, b = (u, v) if u < lab.n_a else (v, u)
            if images[a] >= 0:
                return None
            images[a] = b - lab.n_a
    if min(images, default=0) < 0:
        return None
    try:
        return Permutation(images)
    except PermutationError:
        return None


def extend_to_bipartite_plus_one(g: Graph, lab: BipartiteLabeling, c: EdgeColoring) -> Extension:
    """Add one vertex per side, color each new edge by the color missing at its
    old endpoint, and give the new-new edge the unique full class alpha.

    ``a1`` is the smallest A-vertex; beta is the color it misses, ``b1`` the
    B-vertex missing beta, gamma the color of ``(a1, b1)``, and ``a2``, ``b2``
    the vertices missing gamma.  Old vertex ``j`` of side B moves to
    ``n + 1 + j`` in the new labeling.
    """
    n = lab.n
    expected, _ = complete_bipartite(n)
    if g != expected:
        raise ConstructionError(f"graph is not K_{{{n},{n}}} in the standard labeling")
    if c.palette_size != n + 1:
        raise ConstructionError(f"palette must have n+1 = {n + 1} colors, has {c.palette_size}")
    verdict = verify_acyclic(g, c)
    if not verdict.ok:
        raise ConstructionError(f"coloring is not acyclic ({verdict.status})")
    sizes = class_sizes(c)
    profile = sorted(sizes.values(), reverse=True)
    if len(sizes) != n + 1 or profile != [n] + [n - 1] * n:
        raise ConstructionError(f"class sizes {profile} are not (n, n-1, ..., n-1)")
    alpha = next(col for col, s in sizes.items() if s == n)
    miss = missing_colors(g, c)
    m_of = [next(iter(s)) for s in miss]

    new_g, new_lab = complete_bipartite(n + 1)

    def relabel(x: int) -> int:
        return x if x < n else x + 1

    a_new, b_new = new_lab.a(n), new_lab.b(n)
    new_c = EdgeColoring.empty(new_g, n + 1)
    for eid, (u, v) in enumerate(g.edges):
        new_c[new_g.edge_id(relabel(u), relabel(v))] = c[eid]
    for j in range(n):
        new_c[new_g.edge_id(a_new, new_lab.b(j))] = m_of[lab.b(j)]
        new_c[new_g.edge_id(new_lab.a(j), b_new)] = m_of[lab.a(j)]
    new_c[new_g.edge_id(a_new, b_new)] = alpha

    a1 = 0
    beta = m_of[a1]
    b1 = next(v for v in lab.side_b if m_of[v] == beta)
    gamma = c[g.edge_id(a1, b1)]
    if gamma == alpha:
        raise ConstructionError("edge (a1, b1) carries alpha; no (alpha, beta) Hamiltonian path exists")
    a2 = next(v for v in lab.side_a if m_of[v] == gamma)
    b2 = next(v for v in lab.side_b if m_of[v] == gamma)

    ext = Extension(new_g, new_lab, new_c, alpha, beta, gamma, a1, b1, a2, b2)
    for col in (alpha, beta, gamma):
        pi = _class_permutation(new_g, new_lab, new_c, col)
        if pi is not None:
            ext.matchings[col] = pi
    if len(ext.matchings) == 3:
        for x, y in itertools.combinations((alpha, beta, gamma), 2):
            ext.hamiltonian[(x, y)] = union_is_hamiltonian(ext.matchings[x], ext.matchings[y])
    return ext
