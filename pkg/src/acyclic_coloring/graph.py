"""Simple undirected graphs with dense, stable vertex and edge indices.

Edges are identified by their insertion index so colorings can live in
flat lists keyed by edge id.  Adjacency lists hold ``(neighbor, edge_id)``
pairs.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Optional


class GraphError(ValueError):
    """Base class for graph construction errors."""


class SelfLoopError(GraphError):
    pass


class VertexRangeError(GraphError):
    pass


class DuplicateEdgeError(GraphError):
    pass


class GraphFormatError(GraphError):
    """Malformed edge-list text.  ``line`` is 1-based."""

    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class Graph:
    """Undirected simple graph on vertices ``0..num_vertices-1``.

    Edges are stored normalized as ``(min, max)`` in insertion order.
    """

    def __init__(self, num_vertices: int = 0):
        if num_vertices < 0:
            raise GraphError(f"negative vertex count {num_vertices}")
        self.num_vertices = num_vertices
        self.edges: list[tuple[int, int]] = []
        self.adjacency: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
        self._index: dict[tuple[int, int], int] = {}

    @classmethod
    def from_edges(cls, num_vertices: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        g = cls(num_vertices)
        for u, v in edges:
            g.add_edge(u, v)
        return g

    def add_edge(self, u: int, v: int) -> int:
        """Append edge ``{u, v}`` and return its edge id."""
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        for x in (u, v):
            if not 0 <= x < self.num_vertices:
                raise VertexRangeError(f"vertex {x} out of range [0, {self.num_vertices})")
        key = (u, v) if u < v else (v, u)
        if key in self._index:
            raise DuplicateEdgeError(f"duplicate edge {key}")
        eid = len(self.edges)
        self.edges.append(key)
        self._index[key] = eid
        self.adjacency[u].append((v, eid))
        self.adjacency[v].append((u, eid))
        return eid

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def edge_id(self, u: int, v: int) -> Optional[int]:
        return self._index.get((u, v) if u < v else (v, u))

    def has_edge(self, u: int, v: int) -> bool:
        return self.edge_id(u, v) is not None

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adjacency]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def neighbors(self, v: int) -> list[int]:
        return [w for w, _ in self.adjacency[v]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.num_vertices == other.num_vertices and self.edges == other.edges

    def __repr__(self) -> str:
        return f"Graph(num_vertices={self.num_vertices}, num_edges={self.num_edges})"


def new_graph(num_vertices: int) -> Graph:
    return Graph(num_vertices)


def add_edge(g: Graph, u: int, v: int) -> int:
    return g.add_edge(u, v)


def degree_profile(g: Graph) -> list[int]:
    return sorted(g.degrees())


def is_regular(g: Graph) -> Optional[int]:
    """Return the common degree if ``g`` is regular, else ``None``."""
    degs = set(g.degrees())
    if len(degs) == 1:
        return degs.pop()
    return None


def is_connected(g: Graph) -> bool:
    if g.num_vertices <= 1:
        return True
    seen = [False] * g.num_vertices
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for w, _ in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                queue.append(w)
    return count == g.num_vertices


def delete_vertices(g: Graph, vs: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Induced subgraph on the vertices not in ``vs``.

    Survivors are renumbered in increasing original order; the returned
    mapping sends old indices to new ones.  Surviving edges keep their
    relative order.
    """
    drop = set(vs)
    for v in drop:
        if not 0 <= v < g.num_vertices:
            raise VertexRangeError(f"vertex {v} out of range [0, {g.num_vertices})")
    mapping: dict[int, int] = {}
    for v in range(g.num_vertices):
        if v not in drop:
            mapping[v] = len(mapping)
    h = Graph(len(mapping))
    for u, v in g.edges:
        if u in mapping and v in mapping:
            h.add_edge(mapping[u], mapping[v])
    return h, mapping


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: header ``V E`` then ``E`` lines ``u v``.

    Lines starting with ``#`` and blank lines are ignored.
    """
    header: Optional[tuple[int, int]] = None
    g: Optional[Graph] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise GraphFormatError(f"expected integers, got {raw!r}", lineno) from None
        if len(nums) != 2:
            raise GraphFormatError(f"expected 2 fields, got {len(nums)}", lineno)
        if header is None:
            if nums[0] < 0 or nums[1] < 0:
                raise GraphFormatError("negative count in header", lineno)
            header = (nums[0], nums[1])
            g = Graph(nums[0])
            continue
        assert g is not None
        if g.num_edges >= header[1]:
            raise GraphFormatError(f"more than {header[1]} edge lines", lineno)
        try:
            g.add_edge(nums[0], nums[1])
        except GraphError as exc:
            raise GraphFormatError(str(exc), lineno) from None
    if header is None or g is None:
        raise GraphFormatError("missing 'V E' header", 1)
    if g.num_edges != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {g.num_edges}", lineno)
    return g


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.num_vertices} {g.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write(serialize_graph(g))
