"""Command-line front end.

Exit codes: 0 = success / accept, 1 = reject / negative result,
2 = usage or I/O error. `COGRAPH_HC_THREADS` caps the worker processes of
`check` (0 = auto, default 1).
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import graph as gr
from . import cotree as ct
from . import coloring as col
from . import hc_algorithms as hca
from . import oracle
from .generator import GenParams, exhaustive_cographs, random_cograph


class _CliError(Exception):
    def __init__(self, message: str, code: int = 2):
        super().__init__(message)
        self.code = code


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise _CliError(f"cannot read {path}: {exc}") from exc


def _load_graph(path: str) -> gr.Graph:
    try:
        return gr.read_edge_list(_read_text(path))
    except gr.GraphFormatError as exc:
        raise _CliError(f"{path}: {exc}") from exc


def _load_cotree(path: str, g: gr.Graph) -> ct.Cotree:
    try:
        t = ct.newick_read(_read_text(path))
        return ct.align_to_graph(t, g)
    except ValueError as exc:
        raise _CliError(f"{path}: {exc}") from exc


def _write_output(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        try:
            Path(path).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise _CliError(f"cannot write {path}: {exc}") from exc


def _witness_names(g: gr.Graph, w: ct.P4Witness) -> str:
    names = g.vertex_names()
    return " ".join(names[v] for v in w.as_tuple())


# -- subcommands -----------------------------------------------------------------

def _cmd_recognize(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    t = ct.build_cotree(g)
    if isinstance(t, ct.P4Witness):
        print(f"NOT-COGRAPH {_witness_names(g, t)}")
        return 1
    print(f"COGRAPH {ct.newick_write(t)}")
    return 0


def _cmd_cotree(args: argparse.Namespace) -> int:
    if args.realize:
        try:
            t = ct.newick_read(_read_text(args.graph))
            g = ct.realized_graph(t)
        except ValueError as exc:
            raise _CliError(f"{args.graph}: {exc}") from exc
        _write_output(gr.write_edge_list(g), args.output)
        return 0
    g = _load_graph(args.graph)
    t = ct.build_cotree(g)
    if isinstance(t, ct.P4Witness):
        print(f"NOT-COGRAPH {_witness_names(g, t)}")
        return 1
    if args.binary:
        t = ct.to_binary(t, args.binary)
    _write_output(ct.newick_write(t) + "\n", args.output)
    return 0


def _cmd_color(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if args.method == "greedy":
        if args.order:
            lookup = g.name_to_id()
            order = []
            for tok in args.order.split(","):
                tok = tok.strip()
                if tok in lookup:
                    order.append(lookup[tok])
                elif tok.isdigit() and int(tok) < g.n:
                    order.append(int(tok))
                else:
                    raise _CliError(f"unknown vertex {tok!r} in --order")
        else:
            import random
            order = list(range(g.n))
            random.Random(args.seed).shuffle(order)
        try:
            c = col.greedy_coloring(g, order)
        except ValueError as exc:
            raise _CliError(str(exc)) from exc
    else:  # alg1
        chooser = hca.InjectionChooser("seeded-random", seed=args.seed)
        try:
            c, _ = hca.alg1_color(g, chooser)
        except ct.NotACographError as exc:
            print(f"NOT-COGRAPH {_witness_names(g, exc.witness)}")
            return 1
    _write_output(col.write_coloring(g, c), args.output)
    print(f"colors {len(set(c.values()))}")
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        c = col.read_coloring(_read_text(args.coloring), g)
    except ValueError as exc:
        raise _CliError(f"{args.coloring}: {exc}") from exc
    names = g.vertex_names()
    if args.cotree:
        t = _load_cotree(args.cotree, g)
        if not ct.is_binary(t):
            print("note: refined non-binary cotree to binary (left-comb)")
            t = ct.to_binary(t, "left-comb")
        try:
            verdict = col.verify_hc(g, t, c)
        except ValueError as exc:
            raise _CliError(str(exc)) from exc
        if verdict.accepted:
            print("ACCEPT")
            return 0
        leaves = sorted(names[t.vertex[x]]
                        for x in ct._leaves_of(t, verdict.node))
        s1, s2 = (sorted(s) for s in verdict.sets)
        print(f"{verdict.axiom} violation at node over "
              f"{{{','.join(leaves)}}}: color sets {s1} vs {s2}")
        return 1
    proper = col.is_proper(g, c)
    hc = False
    greedy = False
    if proper:
        try:
            hc = col.is_hc_coloring(g, c).accepted
        except ct.NotACographError as exc:
            raise _CliError(f"not-a-cograph: {_witness_names(g, exc.witness)}",
                            code=1) from exc
        greedy = col.is_greedy(g, c)
    yn = {True: "yes", False: "no"}
    print(f"proper={yn[proper]} hc={yn[hc]} greedy={yn[greedy]}")
    return 0 if hc else 1


def _cmd_count(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    try:
        if args.cotree:
            t = _load_cotree(args.cotree, g)
            if not ct.realizes(t, g):
                raise _CliError("cotree-graph-mismatch")
            if not ct.is_binary(t):
                t = ct.to_binary(t, "left-comb")
            report = hca.count_hc_wrt(t)
        else:
            report = hca.count_hc_total(g)
    except ct.NotACographError as exc:
        print(f"NOT-COGRAPH {_witness_names(g, exc.witness)}")
        return 1
    sys.stdout.write(report.render())
    return 0


def _check_chunk(payload: tuple) -> list:
    specs, theorems, seed, start = payload
    corpus = [gr.Graph._from_adj(n, adj, None) for n, adj in specs]
    return oracle.check_theorems(corpus, theorems, seed=seed,
                                 start_index=start)


def _cmd_check(args: argparse.Namespace) -> int:
    if args.max_n > 6:
        raise _CliError(f"size-guard: --max-n {args.max_n} exceeds 6")
    if args.max_n < 1:
        raise _CliError("--max-n must be >= 1")
    theorems = None
    if args.theorems:
        theorems = [t.strip() for t in args.theorems.split(",")]
        for tid in theorems:
            if tid not in oracle.THEOREM_IDS:
                raise _CliError(f"unknown theorem {tid!r}")
    corpus = []
    for n in range(1, args.max_n + 1):
        corpus.extend(exhaustive_cographs(n))
    threads = os.environ.get("COGRAPH_HC_THREADS", "1")
    try:
        workers = int(threads)
    except ValueError:
        raise _CliError(f"bad COGRAPH_HC_THREADS value {threads!r}") from None
    if workers == 0:
        workers = os.cpu_count() or 1
    if workers > 1 and len(corpus) > workers:
        chunk = (len(corpus) + workers - 1) // workers
        payloads = []
        for start in range(0, len(corpus), chunk):
            specs = [(g.n, g.adj) for g in corpus[start:start + chunk]]
            payloads.append((specs, theorems, args.seed, start))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_check_chunk, payloads))
        reports = oracle.merge_reports(parts)
    else:
        reports = oracle.check_theorems(corpus, theorems, seed=args.seed)
    failed = False
    for rep in reports:
        print(rep.render())
        failed = failed or not rep.passed
    return 1 if failed else 0


def _cmd_gen(args: argparse.Namespace) -> int:
    params = GenParams(n=args.n, seed=args.seed, max_arity=args.max_arity,
                       balance=args.balance)
    g, t = random_cograph(params)
    header = (f"# gen seed {params.seed} n {params.n} "
              f"max_arity {params.max_arity} balance {params.balance}\n")
    _write_output(header + gr.write_edge_list(g), args.graph_out)
    if args.cotree_out:
        _write_output(ct.newick_write(t) + "\n", args.cotree_out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cograph-hc",
        description="Hierarchical colorings of cographs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="cograph recognition + cotree")
    p.add_argument("graph")
    p.set_defaults(fn=_cmd_recognize)

    p = sub.add_parser("cotree", help="emit a cotree (or realize a Newick)")
    p.add_argument("graph", help="edge-list file (or Newick with --realize)")
    p.add_argument("--binary", choices=["left-comb", "chi-ascending"])
    p.add_argument("--realize", action="store_true",
                   help="treat input as Newick and print its graph")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_cotree)

    p = sub.add_parser("color", help="greedy or recursively minimal coloring")
    p.add_argument("graph")
    p.add_argument("--method", choices=["greedy", "alg1"], default="alg1")
    p.add_argument("--order", help="comma-separated vertex order (greedy)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_color)

    p = sub.add_parser("verify", help="verify a coloring")
    p.add_argument("graph")
    p.add_argument("coloring")
    p.add_argument("--cotree", help="verify w.r.t. this Newick cotree")
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("count", help="count hc-colorings")
    p.add_argument("graph")
    p.add_argument("--cotree", help="count w.r.t. this Newick cotree")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("check", help="run brute-force theorem checks")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--theorems", help="comma-separated theorem ids")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_check)

    p = sub.add_parser("gen", help="seeded random cograph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--balance", type=float, default=0.5)
    p.add_argument("--graph-out")
    p.add_argument("--cotree-out")
    p.set_defaults(fn=_cmd_gen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
