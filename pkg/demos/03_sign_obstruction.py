"""
Why even K_{n,n} has no three pairwise Hamiltonian matchings
=============================================================

A perfect matching of K_{n,n} is a permutation.  Two disjoint matchings form
a Hamiltonian cycle exactly when one permutation's inverse times the other
is a single n-cycle, which is odd when n is even.  The three relative signs
of any triple multiply to +1, so they cannot all be -1.
"""

import random

from acyclic_coloring import (
    PerfectMatchingSet,
    Permutation,
    compose,
    cycle_type,
    inverse,
    lemma1_exhaustive_oracle,
    lemma1_sign_check,
    sign,
)

shift = [Permutation.shift(4, s) for s in range(3)]
for i in range(3):
    for j in range(i + 1, 3):
        rel = compose(inverse(shift[i]), shift[j])
        print(f"shift{i}^-1 shift{j}: cycle type {cycle_type(rel)}, sign {sign(rel):+d}")

verdict = lemma1_sign_check(PerfectMatchingSet(4, shift))
print(verdict.explain())

# sign is multiplicative; spot-check a few random pairs
rng = random.Random(1)
for _ in range(3):
    p = Permutation(rng.sample(range(6), 6))
    q = Permutation(rng.sample(range(6), 6))
    print(p, "|", q, "->", sign(compose(p, q)), "=", sign(p) * sign(q))

for n in (2, 4, 6):
    print(f"n={n}: no pairwise Hamiltonian triple ->", lemma1_exhaustive_oracle(n))
