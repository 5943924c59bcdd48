"""
Complete bipartite graphs and perfect 1-factorizations
======================================================

For K_{n,n} the counting argument is silent (d = n).  For odd n an
(n+1)-coloring would extend to three pairwise Hamiltonian perfect matchings
of K_{n+1,n+1}, which cannot exist.  Here we look at K_{3,3} from three
sides: exact search, brute force, and a coloring cut out of a perfect
1-factorization of K_{5,5}.
"""

from acyclic_coloring import (
    PerfectMatchingSet,
    brute_force_oracle,
    class_sizes,
    complete_bipartite,
    cyclic_p1f,
    exists_acyclic_coloring,
    extend_to_bipartite_plus_one,
    is_perfect_1factorization,
    p1f_restrict,
    theorem3_bound,
    verify_acyclic,
)

g, lab = complete_bipartite(3)
print("bound for K_{3,3}:", theorem3_bound(3))
print("search, 4 colors:", exists_acyclic_coloring(g, 4).status)
print("brute force, 4 colors:", brute_force_oracle(g, 4).status)

# Cyclic shifts mod 5 pair up into Hamiltonian cycles.  Drop two vertices per
# side and every color pair becomes a union of paths.
ms = cyclic_p1f(5)
print("cyclic 1-factorization of K_{5,5} is perfect:", is_perfect_1factorization(ms))
h, c = p1f_restrict(ms, 2, 2)
print("restricted coloring of K_{3,3}:", verify_acyclic(h, c).status, "with", c.palette_size, "colors")
print("so a'(K_{3,3}) = 5")

# Even n behaves differently: K_{2,2} has a 3-coloring, and the extension
# step turns it into a perfect 1-factorization of K_{3,3}.
g2, lab2 = complete_bipartite(2)
c2 = exists_acyclic_coloring(g2, 3).witness
print("K_{2,2} class sizes:", class_sizes(c2))
ext = extend_to_bipartite_plus_one(g2, lab2, c2)
print(f"alpha={ext.alpha} beta={ext.beta} gamma={ext.gamma}")
print("pairwise Hamiltonian:", ext.hamiltonian)
trio = PerfectMatchingSet(3, [ext.matchings[k] for k in sorted(ext.matchings)])
print("extension is a perfect 1-factorization:", is_perfect_1factorization(trio))
