"""Counting lower bounds on the acyclic chromatic index.

In an acyclic coloring of a d-regular graph on 2m vertices, two color
classes cannot both be perfect matchings (their union would be a union of
even cycles), so d+1 classes cover at most ``m + d(m-1)`` edges.  If that
is below the edge count ``dm``, a (d+2)-th color is needed.  Removing
``x`` edges keeps this true while ``m + d(m-1) + x < dm``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, is_regular

RULE_COUNTING = "counting"
RULE_BASELINE = "regular-baseline"
RULE_DEGENERATE = "degenerate"
RULE_ROBUST = "counting-robust"
RULE_BIPARTITE_ODD = "bipartite-odd"


class BoundError(ValueError):
    pass


@dataclass
class BoundReport:
    """A lower bound and the inequality that justifies it.

    ``holds`` records whether ``lhs < rhs``; for the counting rules that
    inequality is what licenses the bound.
    """

    bound: int
    rule: str
    lhs: int
    rhs: int
    holds: bool
    params: dict[str, int] = field(default_factory=dict)
    note: Optional[str] = None

    def recheck(self) -> bool:
        """Recompute the inequality from ``params`` and compare with the stored values."""
        p = self.params
        if self.rule in (RULE_COUNTING, RULE_BASELINE, RULE_ROBUST) and "d" in p and "m" in p:
            d, m, x = p["d"], p["m"], p.get("x", 0)
            lhs, rhs = m + d * (m - 1) + x, d * m
            return lhs == self.lhs and rhs == self.rhs and (lhs < rhs) == self.holds
        return (self.lhs < self.rhs) == self.holds

    def to_json(self) -> dict:
        return {"bound": self.bound, "rule": self.rule, "lhs": self.lhs, "rhs": self.rhs}


def regular_baseline(d: int) -> int:
    """Lower bound for any d-regular graph with an edge: two perfect-matching
    classes always close a cycle, so d colors never suffice once d >= 2."""
    if d <= 0:
        return 0
    if d == 1:
        return 1
    return d + 1


def counting_lower_bound(d: int, m: int) -> BoundReport:
    """Lower bound for a d-regular graph on ``2m`` vertices."""
    if d < 1 or m < 1:
        raise BoundError(f"need d >= 1 and m >= 1, got d={d}, m={m}")
    if d >= 2 * m:
        raise BoundError(f"no {d}-regular graph on {2 * m} vertices (need d < 2m)")
    lhs, rhs = m + d * (m - 1), d * m
    params = {"d": d, "m": m}
    if d == 1:
        return BoundReport(1, RULE_DEGENERATE, lhs, rhs, lhs < rhs, params,
                           note="a perfect matching is acyclically colored by one color")
    if d > m:
        return BoundReport(d + 2, RULE_COUNTING, lhs, rhs, True, params)
    return BoundReport(regular_baseline(d), RULE_BASELINE, lhs, rhs, lhs < rhs, params)


def robust_counting_check(d: int, m: int, x: int) -> tuple[bool, BoundReport]:
    """Whether a d-regular graph on 2m vertices still needs d+2 colors after
    losing any ``x`` edges.  Equivalent to ``m + x < d``."""
    if not d > m:
        raise BoundError(f"need d > m, got d={d}, m={m}")
    if x < 0:
        raise BoundError(f"negative removed-edge count {x}")
    lhs, rhs = m + d * (m - 1) + x, d * m
    ok = lhs < rhs
    report = BoundReport(d + 2 if ok else d + 1, RULE_ROBUST if ok else RULE_BASELINE,
                         lhs, rhs, ok, {"d": d, "m": m, "x": x})
    return ok, report


def theorem3_report(n: int) -> BoundReport:
    """Lower bound for the complete bipartite graph ``K_{n,n}``."""
    if n < 1:
        raise BoundError(f"need n >= 1, got {n}")
    # for K_{n,n} the counting inequality reads n + n(n-1) < n*n, which never holds
    lhs, rhs = n + n * (n - 1), n * n
    params = {"n": n}
    if n == 1:
        return BoundReport(1, RULE_DEGENERATE, lhs, rhs, False, params,
                           note="K_{1,1} is a single edge")
    if n % 2:
        return BoundReport(n + 2, RULE_BIPARTITE_ODD, lhs, rhs, False, params,
                           note="odd n: an (n+1)-coloring would extend to three pairwise "
                                "Hamiltonian perfect matchings of K_{n+1,n+1}")
    return BoundReport(n + 1, RULE_BASELINE, lhs, rhs, False, params,
                       note="even n: n+2 is not always needed; a perfect 1-factorization "
                            "of K_{n+1,n+1} restricts to an (n+1)-coloring of K_{n,n}")


def theorem3_bound(n: int) -> int:
    return theorem3_report(n).bound


def graph_lower_bound(g: Graph) -> BoundReport:
    """Counting bound for a regular graph of even order."""
    d = is_regular(g)
    if d is None:
        raise BoundError("graph is not regular")
    if g.num_vertices % 2:
        raise BoundError(f"graph has odd order {g.num_vertices}")
    if d == 0:
        raise BoundError("graph has no edges")
    return counting_lower_bound(d, g.num_vertices // 2)
