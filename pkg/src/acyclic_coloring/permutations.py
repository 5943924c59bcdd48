"""Permutations of ``{0..n-1}`` and perfect matchings of ``K_{n,n}``.

A permutation ``pi`` stands for the perfect matching ``{(a_j, b_pi(j))}``.
When materialized as a graph, side A is ``0..n-1`` and side B is
``n..2n-1``, so ``a_j = j`` and ``b_i = n + i``.

Two disjoint matchings ``pi_i``, ``pi_j`` form one Hamiltonian cycle of
``K_{n,n}`` exactly when ``inverse(pi_i) * pi_j`` is a single ``n``-cycle.
For even ``n`` such a permutation is odd, so no three matchings can be pairwise
Hamiltonian: the three relative signs multiply to ``+1``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence


class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __init__(self, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise PermutationError(f"{images} is not a permutation of 0..{len(images) - 1}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(n))

    @classmethod
    def shift(cls, n: int, s: int) -> "Permutation":
        return cls((j + s) % n for j in range(n))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        try:
            return cls(int(t) for t in text.split())
        except ValueError:
            raise PermutationError(f"cannot parse permutation from {text!r}") from None

    def __len__(self) -> int:
        return len(self.images)

    def __getitem__(self, i: int) -> int:
        return self.images[i]

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return " ".join(map(str, self.images))


def compose(pi: Permutation, sigma: Permutation) -> Permutation:
    """``pi * sigma``: apply ``sigma`` first, then ``pi``."""
    if len(pi) != len(sigma):
        raise PermutationError(f"size mismatch: {len(pi)} vs {len(sigma)}")
    return Permutation(pi.images[s] for s in sigma.images)


def inverse(pi: Permutation) -> Permutation:
    inv = [0] * len(pi)
    for i, p in enumerate(pi.images):
        inv[p] = i
    return Permutation(inv)


def cycles(pi: Permutation) -> list[list[int]]:
    seen = [False] * len(pi)
    out = []
    for start in range(len(pi)):
        if seen[start]:
            continue
        cyc = []
        x = start
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = pi.images[x]
        out.append(cyc)
    return out


def cycle_type(pi: Permutation) -> tuple[int, ...]:
    """Cycle lengths in non-increasing order, fixed points included."""
    return tuple(sorted((len(c) for c in cycles(pi)), reverse=True))


def sign(pi: Permutation) -> int:
    """``(-1) ** (number of even-length cycles)``."""
    even = sum(1 for length in cycle_type(pi) if length % 2 == 0)
    return -1 if even % 2 else 1


def sign_by_inversions(pi: Permutation) -> int:
    """Sign from the parity of the inversion count; independent of :func:`sign`."""
    p = pi.images
    inv = sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])
    return -1 if inv % 2 else 1


def are_disjoint(pi: Permutation, sigma: Permutation) -> bool:
    if len(pi) != len(sigma):
        raise PermutationError(f"size mismatch: {len(pi)} vs {len(sigma)}")
    return all(a != b for a, b in zip(pi.images, sigma.images))


def union_is_hamiltonian(pi_i: Permutation, pi_j: Permutation) -> bool:
    if not are_disjoint(pi_i, pi_j):
        raise PermutationError("matchings share an edge; their union is not 2-regular")
    return cycle_type(compose(inverse(pi_i), pi_j)) == (len(pi_i),)


@dataclass
class PerfectMatchingSet:
    """Ordered perfect matchings of ``K_{n,n}``, pairwise edge-disjoint."""

    n: int
    matchings: list[Permutation]

    def __post_init__(self):
        for p in self.matchings:
            if len(p) != self.n:
                raise PermutationError(f"matching of size {len(p)} in a set over n={self.n}")
        for i, j in itertools.combinations(range(len(self.matchings)), 2):
            if not are_disjoint(self.matchings[i], self.matchings[j]):
                raise PermutationError(f"matchings {i} and {j} share an edge")

    def __len__(self) -> int:
        return len(self.matchings)


@dataclass
class Lemma1Verdict:
    """Why a set of matchings over even ``n`` is not pairwise Hamiltonian.

    ``status`` is ``"non-hamiltonian-pair"`` (the expected outcome, with the
    offending pair and its relative cycle type) or ``"sign-contradiction"``
    (all pairs passed, which cannot happen for even ``n``).
    ``triple_signs`` holds the relative signs of the first three matchings;
    their product is always ``+1``.
    """

    status: str
    pair: Optional[tuple[int, int]]
    pair_cycle_type: Optional[tuple[int, ...]]
    triple_signs: dict[tuple[int, int], int]

    def explain(self) -> str:
        signs = ", ".join(f"sign(pi{i}^-1 pi{j})={s:+d}" for (i, j), s in self.triple_signs.items())
        prod = math.prod(self.triple_signs.values())
        head = f"{signs}; product {prod:+d}, so the three cannot all be -1 (an even n-cycle has sign -1)"
        if self.status == "non-hamiltonian-pair":
            i, j = self.pair
            return f"{head}. Pair ({i}, {j}) has relative cycle type {list(self.pair_cycle_type)}, not a single n-cycle."
        return f"{head}. All pairs tested Hamiltonian: sign contradiction."


def lemma1_sign_check(ms: PerfectMatchingSet) -> Lemma1Verdict:
    n = ms.n
    if n % 2:
        raise PermutationError(f"n={n} is odd; the sign obstruction needs even n")
    if len(ms) < 3:
        raise PermutationError(f"need at least 3 disjoint matchings, got {len(ms)}")
    pis = ms.matchings
    triple_signs = {(i, j): sign(compose(inverse(pis[i]), pis[j]))
                    for i, j in itertools.combinations(range(3), 2)}
    for i, j in itertools.combinations(range(len(pis)), 2):
        rel = compose(inverse(pis[i]), pis[j])
        ct = cycle_type(rel)
        if ct != (n,):
            return Lemma1Verdict("non-hamiltonian-pair", (i, j), ct, triple_signs)
    return Lemma1Verdict("sign-contradiction", None, None, triple_signs)


LEMMA1_ORACLE_MAX_N = 6


def _walk_is_hamiltonian(p: Sequence[int], q: Sequence[int]) -> bool:
    # follow a -p-> b -q^{-1}-> a' on the union of two matchings
    n = len(p)
    q_inv = [0] * n
    for a, b in enumerate(q):
        q_inv[b] = a
    a, steps = 0, 0
    while True:
        a = q_inv[p[a]]
        steps += 1
        if a == 0:
            return steps == n


def lemma1_exhaustive_oracle(n: int) -> bool:
    """True iff no identity/pi2/pi3 triple of disjoint matchings of ``K_{n,n}``
    is pairwise Hamiltonian.  Plain enumeration; ``n`` even, at most 6."""
    if n % 2 or n < 0:
        raise PermutationError(f"n={n} must be even and non-negative")
    if n > LEMMA1_ORACLE_MAX_N:
        raise PermutationError(f"n={n} exceeds the enumeration bound {LEMMA1_ORACLE_MAX_N}")
    if n == 0:
        return True
    ident = tuple(range(n))
    derangements = [p for p in itertools.permutations(range(n))
                    if all(p[i] != i for i in range(n))]
    for p2 in derangements:
        for p3 in derangements:
            if any(p2[i] == p3[i] for i in range(n)):
                continue
            if (_walk_is_hamiltonian(ident, p2) and _walk_is_hamiltonian(ident, p3)
                    and _walk_is_hamiltonian(p2, p3)):
                return False
    return True
