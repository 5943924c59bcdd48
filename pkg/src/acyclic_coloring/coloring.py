"""Edge colorings: properness, bichromatic cycles, color-class structure."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .graph import Graph, GraphFormatError

ACYCLIC = "acyclic"
IMPROPER = "improper"
BICHROMATIC_CYCLE = "bichromatic-cycle"


class ColoringError(ValueError):
    pass


class PartialColoringError(ColoringError):
    pass


class ImproperColoringError(ColoringError):
    pass


class NotAcyclicError(ColoringError):
    pass


@dataclass
class EdgeColoring:
    """Assignment edge id -> color in ``[0, palette_size)``; ``None`` means uncolored."""

    palette_size: int
    assignment: list[Optional[int]]

    def __post_init__(self):
        if self.palette_size < 0:
            raise ColoringError("negative palette size")
        for eid, c in enumerate(self.assignment):
            if c is not None and not 0 <= c < self.palette_size:
                raise ColoringError(f"edge {eid}: color {c} outside palette of size {self.palette_size}")

    @classmethod
    def empty(cls, g: Graph, palette_size: int) -> "EdgeColoring":
        return cls(palette_size, [None] * g.num_edges)

    @property
    def is_total(self) -> bool:
        return all(c is not None for c in self.assignment)

    def __getitem__(self, eid: int) -> Optional[int]:
        return self.assignment[eid]

    def __setitem__(self, eid: int, color: Optional[int]) -> None:
        if color is not None and not 0 <= color < self.palette_size:
            raise ColoringError(f"color {color} outside palette of size {self.palette_size}")
        self.assignment[eid] = color

    def __len__(self) -> int:
        return len(self.assignment)


@dataclass
class Verdict:
    status: str
    improper_pair: Optional[tuple[int, int]] = None
    cycle: Optional[list[int]] = None
    colors: Optional[tuple[int, int]] = None

    @property
    def ok(self) -> bool:
        return self.status == ACYCLIC


@dataclass
class Component:
    kind: str  # "path" or "cycle"
    vertices: list[int]

    @property
    def num_edges(self) -> int:
        n = len(self.vertices)
        return n if self.kind == "cycle" else n - 1


@dataclass
class ClassStructure:
    colors: tuple[int, int]
    components: list[Component] = field(default_factory=list)

    def is_hamiltonian_path(self, num_vertices: int) -> bool:
        return (len(self.components) == 1 and self.components[0].kind == "path"
                and len(self.components[0].vertices) == num_vertices)


def _check_shape(g: Graph, c: EdgeColoring) -> None:
    if len(c.assignment) != g.num_edges:
        raise ColoringError(f"coloring has {len(c.assignment)} entries, graph has {g.num_edges} edges")


def _require_total(g: Graph, c: EdgeColoring) -> None:
    _check_shape(g, c)
    if not c.is_total:
        raise PartialColoringError("coloring is partial")


def _color_maps(g: Graph, c: EdgeColoring) -> list[dict[int, int]]:
    # per vertex: color -> neighbor; assumes properness
    at: list[dict[int, int]] = [{} for _ in range(g.num_vertices)]
    for eid, (u, v) in enumerate(g.edges):
        col = c.assignment[eid]
        at[u][col] = v
        at[v][col] = u
    return at


def is_proper(g: Graph, c: EdgeColoring) -> tuple[bool, Optional[tuple[int, int]]]:
    """Return ``(True, None)`` or ``(False, (e, f))`` with adjacent same-colored edges."""
    _require_total(g, c)
    for v in range(g.num_vertices):
        seen: dict[int, int] = {}
        for _, eid in g.adjacency[v]:
            col = c.assignment[eid]
            if col in seen:
                e, f = seen[col], eid
                return False, (min(e, f), max(e, f))
            seen[col] = eid
    return True, None


def _trace(at: list[dict[int, int]], start: int, first: int, second: int) -> tuple[list[int], bool]:
    """Walk from ``start`` alternating colors ``first``, ``second``.

    Returns the visited vertex sequence and whether the walk closed up.
    """
    seq = [start]
    x, col = start, first
    while True:
        y = at[x].get(col)
        if y is None:
            return seq, False
        if y == start:
            return seq, True
        seq.append(y)
        x = y
        col = second if col == first else first


def _pair_cycle(g: Graph, at: list[dict[int, int]], c1: int, c2: int) -> Optional[list[int]]:
    visited = set()
    for v in range(g.num_vertices):
        if v in visited or c1 not in at[v] or c2 not in at[v]:
            continue
        seq, closed = _trace(at, v, c1, c2)
        visited.update(seq)
        if closed:
            # v is the smallest vertex on this cycle; head toward its smaller neighbor
            if at[v][c2] < at[v][c1]:
                seq = [v] + seq[:0:-1]
            return seq
    return None


def find_bichromatic_cycle(g: Graph, c: EdgeColoring) -> Optional[tuple[list[int], tuple[int, int]]]:
    """Return one bichromatic cycle as ``(vertices, (c1, c2))`` or ``None``.

    Color pairs are scanned in lexicographic order; the cycle starts at its
    smallest vertex and heads toward that vertex's smaller cycle neighbor.
    """
    ok, pair = is_proper(g, c)
    if not ok:
        raise ImproperColoringError(f"edges {pair} share a vertex and a color")
    at = _color_maps(g, c)
    used = sorted(set(c.assignment))
    for i, c1 in enumerate(used):
        for c2 in used[i + 1:]:
            cyc = _pair_cycle(g, at, c1, c2)
            if cyc is not None:
                return cyc, (c1, c2)
    return None


def verify_acyclic(g: Graph, c: EdgeColoring) -> Verdict:
    ok, pair = is_proper(g, c)
    if not ok:
        return Verdict(IMPROPER, improper_pair=pair)
    found = find_bichromatic_cycle(g, c)
    if found is not None:
        cyc, cols = found
        return Verdict(BICHROMATIC_CYCLE, cycle=cyc, colors=cols)
    return Verdict(ACYCLIC)


def class_sizes(c: EdgeColoring) -> dict[int, int]:
    if not c.is_total:
        raise PartialColoringError("coloring is partial")
    return dict(sorted(Counter(c.assignment).items()))


def pair_structure(g: Graph, c: EdgeColoring, t1: int, t2: int) -> ClassStructure:
    """Components of the subgraph formed by color classes ``t1`` and ``t2``.

    Each component is a path listed from its smaller endpoint.  Components
    are ordered by smallest vertex.
    """
    if t1 == t2:
        raise ColoringError("need two distinct colors")
    verdict = verify_acyclic(g, c)
    if not verdict.ok:
        raise NotAcyclicError(f"coloring is not acyclic ({verdict.status})")
    at = _color_maps(g, c)
    seen = set()
    comps: list[tuple[int, Component]] = []
    for v in range(g.num_vertices):
        if v in seen:
            continue
        present = [col for col in (t1, t2) if col in at[v]]
        if len(present) != 1:
            continue  # isolated in the union, or interior of a path
        other = t2 if present[0] == t1 else t1
        seq, _ = _trace(at, v, present[0], other)
        seen.update(seq)
        comps.append((min(seq), Component("path", seq)))
    comps.sort(key=lambda t: t[0])
    return ClassStructure((t1, t2), [comp for _, comp in comps])


def missing_colors(g: Graph, c: EdgeColoring) -> list[frozenset[int]]:
    _require_total(g, c)
    palette = set(range(c.palette_size))
    return [frozenset(palette - {c.assignment[eid] for _, eid in g.adjacency[v]})
            for v in range(g.num_vertices)]


def parse_coloring(text: str, g: Graph) -> EdgeColoring:
    """Parse ``V E K`` then ``E`` lines ``u v c`` in the graph's edge order."""
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            rows.append((lineno, [int(p) for p in line.split()]))
        except ValueError:
            raise GraphFormatError(f"expected integers, got {raw!r}", lineno) from None
    if not rows:
        raise GraphFormatError("missing 'V E K' header", 1)
    lineno, head = rows[0]
    if len(head) != 3:
        raise GraphFormatError("header must be 'V E K'", lineno)
    nv, ne, k = head
    if nv != g.num_vertices or ne != g.num_edges:
        raise GraphFormatError(f"header {nv} {ne} does not match graph {g.num_vertices} {g.num_edges}", lineno)
    if k < 0:
        raise GraphFormatError("negative palette size", lineno)
    if len(rows) - 1 != ne:
        raise GraphFormatError(f"expected {ne} edge lines, found {len(rows) - 1}", rows[-1][0])
    assignment: list[Optional[int]] = []
    for eid, (lineno, fields) in enumerate(rows[1:]):
        if len(fields) != 3:
            raise GraphFormatError("edge line must be 'u v c'", lineno)
        u, v, col = fields
        if (min(u, v), max(u, v)) != g.edges[eid]:
            raise GraphFormatError(f"edge ({u}, {v}) does not match graph edge {eid} {g.edges[eid]}", lineno)
        if not 0 <= col < k:
            raise GraphFormatError(f"color {col} outside [0, {k})", lineno)
        assignment.append(col)
    return EdgeColoring(k, assignment)


def serialize_coloring(g: Graph, c: EdgeColoring) -> str:
    _require_total(g, c)
    lines = [f"{g.num_vertices} {g.num_edges} {c.palette_size}"]
    lines.extend(f"{u} {v} {c.assignment[eid]}" for eid, (u, v) in enumerate(g.edges))
    return "\n".join(lines) + "\n"


def coloring_from_classes(g: Graph, palette_size: int, classes: Sequence[Sequence[tuple[int, int]]]) -> EdgeColoring:
    """Build a coloring from explicit color classes given as endpoint pairs."""
    c = EdgeColoring.empty(g, palette_size)
    for col, edges in enumerate(classes):
        for u, v in edges:
            eid = g.edge_id(u, v)
            if eid is None:
                raise ColoringError(f"({u}, {v}) is not an edge")
            c[eid] = col
    return c
