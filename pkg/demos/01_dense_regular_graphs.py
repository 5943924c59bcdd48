"""
Dense regular graphs that need Δ+2 colors
==========================================

Counting color classes gives a lower bound for d-regular graphs on 2m
vertices when d > m.  We check it against exact search on K_4 and K_6, then
build a sparse 5-regular graph that inherits the bound from a planted
K_6-minus-an-edge.
"""

from acyclic_coloring import (
    SearchConfig,
    acyclic_chromatic_index,
    counting_lower_bound,
    exists_acyclic_coloring,
    is_connected,
    is_regular,
    robust_counting_check,
    theorem2_splice,
)
from acyclic_coloring.constructions import complete_graph, gadget_minus_edge

# K_4 is 3-regular on 4 vertices: one class can be a perfect matching (2
# edges), the other three at most 1 edge each, 2 + 3 = 5 < 6 edges.
rep = counting_lower_bound(3, 2)
print("K_4 bound:", rep.bound, f"({rep.lhs} < {rep.rhs})")
res = acyclic_chromatic_index(complete_graph(4))
print("K_4 index:", res.value, "trace:", res.trace)

# K_6: the bound says 7.  The search confirms 6 colors are impossible.
print("K_6 bound:", counting_lower_bound(5, 3).bound)
r6 = exists_acyclic_coloring(complete_graph(6), 6, SearchConfig(symmetry_breaking="star"))
print("K_6 with 6 colors:", r6.status, f"after {r6.nodes_explored} nodes")
print("K_6 with 7 colors:", exists_acyclic_coloring(complete_graph(6), 7).status)

# The bound survives deleting x edges while m + x < d.
for x in (1, 2):
    ok, rep = robust_counting_check(5, 3, x)
    print(f"K_6 minus {x} edge(s) still needs 7: {ok}  ({rep.lhs} < {rep.rhs})")

# Splice K_6 minus an edge into a 5-regular circulant on 8 vertices.
g, spec = theorem2_splice(5, 14)
print(f"splice: {g.num_vertices} vertices, {g.num_edges} edges, "
      f"{is_regular(g)}-regular, connected={is_connected(g)}")
print("cut", spec.removed, "rejoined", spec.added)
planted = gadget_minus_edge(spec)
print("planted gadget with 6 colors:", exists_acyclic_coloring(planted, 6).status)
