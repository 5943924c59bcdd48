"""Command-line entry point.

Subcommands: gen, solve, verify, bound, p1f, lemma1, suite.  Machine-readable
output is JSON on stdout; human-readable notes go to stderr.

Exit codes: 0 success; 1 usage or input error; 2 and up are negative
verdicts (``verify``: 2 improper, 3 bichromatic cycle; ``solve``: 2
exhausted, 3 timeout; ``p1f``: 2 not a P1F; ``suite``: 2 some experiment
did not pass).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import bounds, coloring, constructions, permutations, solver
from .experiments import SuiteConfig, run_paper_suite
from .graph import GraphError, read_graph, serialize_graph


class UsageError(Exception):
    pass


def _emit(text: str, path: Optional[str]) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> None:
    print(json.dumps(obj))


def cmd_gen(args) -> int:
    kind, params = args.family, args.params
    try:
        if kind == "kn":
            g = constructions.complete_graph(int(params[0]))
        elif kind == "knn":
            g, _ = constructions.complete_bipartite(int(params[0]))
        elif kind == "cycle":
            g = constructions.cycle_graph(int(params[0]))
        elif kind == "cocktail":
            g = constructions.cocktail_party_graph(int(params[0]))
        elif kind == "circulant":
            offsets = [int(o) for o in params[1].split(",") if o]
            g = constructions.circulant_graph(int(params[0]), offsets)
        elif kind == "splice":
            g, spec = constructions.theorem2_splice(int(params[0]), int(params[1]))
            print(f"# gadget={spec.gadget} removed={spec.removed} added={spec.added}", file=sys.stderr)
        elif kind == "p1f":
            ms = constructions.cyclic_p1f(int(params[0]))
            g, c = constructions.p1f_restrict(ms, args.drop_a, args.drop_b)
            _emit(serialize_graph(g), args.output)
            text = coloring.serialize_coloring(g, c)
            if args.coloring_out:
                _emit(text, args.coloring_out)
            else:
                sys.stdout.write(text)
            return 0
        else:
            raise UsageError(f"unknown family {kind!r}")
    except (IndexError, ValueError) as exc:
        raise UsageError(f"gen {kind}: {exc}") from None
    _emit(serialize_graph(g), args.output)
    return 0


def cmd_solve(args) -> int:
    g = read_graph(args.graph)
    cfg = solver.SearchConfig(symmetry_breaking=args.symmetry, node_limit=args.node_limit,
                              time_limit=args.time_limit)
    if args.k is not None:
        res = solver.exists_acyclic_coloring(g, args.k, cfg)
        report = res.to_json()
        witness, status = res.witness, res.status
    else:
        idx = solver.acyclic_chromatic_index(g, cfg)
        witness, status = idx.witness, idx.status
        report = {"status": status, "k": idx.value, "nodes": idx.nodes_explored,
                  "elapsed_ms": round(idx.elapsed * 1000, 3), "bracket": list(idx.bracket),
                  "trace": [list(t) for t in idx.trace]}
    if witness is not None and args.emit_coloring:
        _emit(coloring.serialize_coloring(g, witness), args.emit_coloring)
    if args.json:
        _json(report)
    else:
        print(f"{status} k={report['k']} nodes={report['nodes']} elapsed_ms={report['elapsed_ms']}")
    return {solver.FOUND: 0, solver.EXHAUSTED: 2, solver.TIMEOUT: 3}[status]


def cmd_verify(args) -> int:
    g = read_graph(args.graph)
    with open(args.coloring, encoding="utf-8") as f:
        c = coloring.parse_coloring(f.read(), g)
    v = coloring.verify_acyclic(g, c)
    out = {"status": v.status}
    if v.improper_pair is not None:
        e, f = v.improper_pair
        out["edges"] = [list(g.edges[e]), list(g.edges[f])]
    if v.cycle is not None:
        out["cycle"] = v.cycle
        out["colors"] = list(v.colors)
    _json(out)
    return {coloring.ACYCLIC: 0, coloring.IMPROPER: 2, coloring.BICHROMATIC_CYCLE: 3}[v.status]


def cmd_bound(args) -> int:
    if args.knn is not None:
        rep = bounds.theorem3_report(args.knn)
    elif args.graph is not None:
        rep = bounds.graph_lower_bound(read_graph(args.graph))
    elif args.d is not None and args.m is not None:
        if args.x is not None:
            _, rep = bounds.robust_counting_check(args.d, args.m, args.x)
        else:
            rep = bounds.counting_lower_bound(args.d, args.m)
    else:
        raise UsageError("bound needs --d and --m, --knn N, or --graph FILE")
    _json(rep.to_json())
    if rep.note:
        print(rep.note, file=sys.stderr)
    return 0


def _read_permutations(path: str) -> list[permutations.Permutation]:
    fh = sys.stdin if path == "-" else open(path, encoding="utf-8")
    try:
        lines = [ln for ln in fh.read().splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    finally:
        if fh is not sys.stdin:
            fh.close()
    return [permutations.Permutation.parse(ln) for ln in lines]


def cmd_p1f(args) -> int:
    if args.matchings:
        perms = _read_permutations(args.matchings)
        if not perms:
            raise UsageError("no permutations given")
        ms = permutations.PerfectMatchingSet(len(perms[0]), perms)
    elif args.p is not None:
        ms = constructions.cyclic_p1f(args.p)
    else:
        raise UsageError("p1f needs P or --matchings FILE")
    ok, pair = constructions.is_perfect_1factorization(ms)
    out = {"n": ms.n, "matchings": len(ms), "perfect_1factorization": ok,
           "failing_pair": list(pair) if pair else None}
    if ok and args.drop_b:
        g, c = constructions.p1f_restrict(ms, args.drop_a, args.drop_b)
        out["restricted"] = {"vertices": g.num_vertices, "edges": g.num_edges, "colors": c.palette_size,
                             "acyclic": coloring.verify_acyclic(g, c).ok}
    _json(out)
    return 0 if ok else 2


def cmd_lemma1(args) -> int:
    if args.exhaustive:
        if args.n is None:
            raise UsageError("--exhaustive needs --n")
        none_exists = permutations.lemma1_exhaustive_oracle(args.n)
        _json({"n": args.n, "no_triple_exists": none_exists})
        print("no triple exists" if none_exists else "a pairwise Hamiltonian triple exists", file=sys.stderr)
        return 0 if none_exists else 2
    perms = _read_permutations(args.file or "-")
    if len(perms) < 3:
        raise UsageError("need three permutation lines")
    ms = permutations.PerfectMatchingSet(len(perms[0]), perms)
    v = permutations.lemma1_sign_check(ms)
    _json({"status": v.status, "pair": list(v.pair) if v.pair else None,
           "pair_cycle_type": list(v.pair_cycle_type) if v.pair_cycle_type else None,
           "signs": {f"{i},{j}": s for (i, j), s in v.triple_signs.items()}})
    print(v.explain(), file=sys.stderr)
    return 0


def cmd_suite(args) -> int:
    reports = run_paper_suite(SuiteConfig(node_limit=args.node_limit, time_budget=args.time_budget))
    payload = [r.to_json() for r in reports]
    text = json.dumps(payload, indent=2)
    if args.json:
        _emit(text + "\n", args.json)
    else:
        print(text)
    for r in reports:
        tail = f" ({r.reason})" if r.reason else ""
        print(f"[{r.status.upper():7}] {r.id:2d} {r.name} {r.elapsed:.2f}s{tail}", file=sys.stderr)
    return 0 if all(r.passed for r in reports) else 2


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="acyclic", description="Acyclic edge coloring toolkit")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a graph family")
    g.add_argument("family", choices=["kn", "knn", "cycle", "cocktail", "circulant", "splice", "p1f"])
    g.add_argument("params", nargs="+")
    g.add_argument("-o", "--output")
    g.add_argument("--coloring-out")
    g.add_argument("--drop-a", type=int, default=0)
    g.add_argument("--drop-b", type=int, default=1)
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="decide k-colorability or compute the index")
    s.add_argument("graph")
    s.add_argument("--k", type=int)
    s.add_argument("--time-limit", type=float)
    s.add_argument("--node-limit", type=int)
    s.add_argument("--symmetry", choices=solver.SYMMETRY_LEVELS, default="first-unused")
    s.add_argument("--emit-coloring")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_solve)

    v = sub.add_parser("verify", help="verify an edge coloring")
    v.add_argument("graph")
    v.add_argument("coloring")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bound", help="counting lower bounds")
    b.add_argument("--d", type=int)
    b.add_argument("--m", type=int)
    b.add_argument("--x", type=int)
    b.add_argument("--knn", type=int)
    b.add_argument("--graph")
    b.set_defaults(func=cmd_bound)

    f = sub.add_parser("p1f", help="check perfect 1-factorizations")
    f.add_argument("p", type=int, nargs="?")
    f.add_argument("--matchings", help="file of permutation lines, '-' for stdin")
    f.add_argument("--drop-a", type=int, default=0)
    f.add_argument("--drop-b", type=int, default=0)
    f.set_defaults(func=cmd_p1f)

    l1 = sub.add_parser("lemma1", help="three-matching sign obstruction")
    l1.add_argument("file", nargs="?", help="three permutation lines ('-' or omitted: stdin)")
    l1.add_argument("--n", type=int)
    l1.add_argument("--exhaustive", action="store_true")
    l1.set_defaults(func=cmd_lemma1)

    st = sub.add_parser("suite", help="run the reproduction suite")
    st.add_argument("--json", metavar="FILE")
    st.add_argument("--time-budget", type=float, default=300.0)
    st.add_argument("--node-limit", type=int)
    st.set_defaults(func=cmd_suite)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
