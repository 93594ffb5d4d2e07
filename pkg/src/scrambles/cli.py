"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input file, 3 resource
cap exceeded.
"""

import argparse
import sys

from . import chipfiring, flow, graphs, scramble, verify
from .graphs import InputFormatError, fmt_count
from .invariants import compute_invariant


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _load_graph(path):
    with open(path, "r", encoding="utf-8") as handle:
        return graphs.parse_edge_list(handle.read())


def _load_scramble(path, G):
    with open(path, "r", encoding="utf-8") as handle:
        return scramble.parse_scramble(handle.read(), G)


def _load_divisor(path, G):
    with open(path, "r", encoding="utf-8") as handle:
        return chipfiring.parse_divisor(handle.read(), G.n)


def build_parser():
    parser = _Parser(prog="scrambles", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a named graph as an edge list")
    p.add_argument("family")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("-o", "--output")

    p = sub.add_parser("info", help="summarize an edge-list file")
    p.add_argument("file")

    p = sub.add_parser("invariant", help="compute one graph invariant")
    p.add_argument("kind", choices=["lambda-k", "xi-k", "alpha-c", "girth"])
    p.add_argument("args", nargs="+", metavar="[K] FILE")

    p = sub.add_parser("scramble", help="scramble quantities")
    ssub = p.add_subparsers(dest="scramble_command", required=True)

    u = ssub.add_parser("uniform", help="uniform k-scramble quantities")
    u.add_argument("k", type=int)
    u.add_argument("file")
    which = u.add_mutually_exclusive_group()
    which.add_argument("--order", action="store_true")
    which.add_argument("--hitting", action="store_true")
    which.add_argument("--eggcut", action="store_true")
    u.add_argument("--long-running", action="store_true",
                   help="iterative lower-bound search with progress on stderr")
    u.add_argument("--budget", type=float, help="seconds before giving up")
    u.add_argument("--prove-at-least", type=int,
                   help="stop once the hitting number is proven >= this")

    o = ssub.add_parser("order", help="order of a scramble from a file")
    o.add_argument("file")
    o.add_argument("scramblefile")

    f = ssub.add_parser("finite", help="is the egg-cut number finite")
    f.add_argument("file")
    f.add_argument("scramblefile")

    p = sub.add_parser("gonality", help="chip-firing gonality")
    gsub = p.add_subparsers(dest="gonality_command", required=True)

    b = gsub.add_parser("brute", help="exhaustive search over divisor degrees")
    b.add_argument("file")
    b.add_argument("--max-degree", type=int)

    c = gsub.add_parser("check", help="does a divisor have positive rank")
    c.add_argument("file")
    c.add_argument("divfile")

    up = gsub.add_parser("upper", help="separator-based upper bound")
    up.add_argument("file")

    p = sub.add_parser("reduce", help="q-reduced form of a divisor")
    p.add_argument("file")
    p.add_argument("divfile")
    p.add_argument("q", type=int)

    p = sub.add_parser("verify", help="check one sufficient condition")
    p.add_argument("theorem", metavar="THEOREM",
                   help="main:L, girth3, girth4a, girth4b, girth5, "
                        "bipartite1, bipartite2, or order-ek:K")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--brute-cap", type=int, default=verify.DEFAULT_BRUTE_CAP)
    return parser


def _cmd_gen(args):
    graph = graphs.generate(args.family, args.params)
    text = graphs.format_edge_list(graph)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_info(args):
    G = _load_graph(args.file)
    print(f"vertices: {G.n}")
    print(f"edges: {G.edge_count}")
    print(f"simple: {'yes' if G.is_simple() else 'no'}")
    print(f"connected: {'yes' if G.is_connected() else 'no'}")
    if G.n:
        valences = [G.valence(v) for v in range(G.n)]
        print(f"min valence: {min(valences)}")
        print(f"max valence: {max(valences)}")
    print(f"girth: {fmt_count(G.girth())}")
    sides = G.bipartition()
    if sides is None:
        print("bipartite: no")
    else:
        print(f"bipartite: yes ({len(sides[0])} + {len(sides[1])})")
    return 0


def _cmd_invariant(args):
    if args.kind == "girth":
        if len(args.args) != 1:
            raise _UsageError("girth takes no parameter, just a file")
        parameter, path = 0, args.args[0]
    else:
        if len(args.args) != 2:
            raise _UsageError(f"{args.kind} needs a parameter K and a file")
        try:
            parameter = int(args.args[0])
        except ValueError:
            raise _UsageError("parameter K must be an integer") from None
        path = args.args[1]
    G = _load_graph(path)
    print(fmt_count(compute_invariant(G, args.kind, parameter).value))
    return 0


def _cmd_scramble_uniform(args):
    G = _load_graph(args.file)
    S = scramble.uniform_scramble(G, args.k)
    if args.long_running and not args.hitting:
        raise _UsageError("--long-running only applies to --hitting")
    if args.hitting:
        if args.long_running:
            def progress(message):
                print(message, file=sys.stderr, flush=True)

            result = scramble.hitting_search(
                S, target=args.prove_at_least, budget=args.budget, progress=progress
            )
            if result.optimum is not None:
                print(result.optimum)
                return 0
            if args.prove_at_least is not None and result.proved_lower >= args.prove_at_least:
                print(f"hitting number >= {result.proved_lower}")
                return 0
            print(f"hitting number >= {result.proved_lower} (search incomplete)")
            return 3
        print(scramble.hitting_number(S))
        return 0
    if args.order:
        print(fmt_count(scramble.scramble_order(S)))
        return 0
    if args.eggcut:
        print(fmt_count(scramble.egg_cut_number(S)))
        return 0
    print(f"hitting number: {scramble.hitting_number(S)}")
    print(f"egg-cut number: {fmt_count(scramble.egg_cut_number(S))}")
    print(f"order: {fmt_count(scramble.scramble_order(S))}")
    return 0


def _cmd_scramble(args):
    if args.scramble_command == "uniform":
        return _cmd_scramble_uniform(args)
    G = _load_graph(args.file)
    S = _load_scramble(args.scramblefile, G)
    if args.scramble_command == "order":
        print(fmt_count(scramble.scramble_order(S)))
        return 0
    finite, pair = scramble.has_finite_egg_cut(S)
    if finite:
        print("yes")
        for egg in pair:
            print("egg: " + " ".join(str(v) for v in sorted(egg)))
    else:
        print("no")
    return 0


def _cmd_gonality(args):
    G = _load_graph(args.file)
    if args.gonality_command == "brute":
        result = chipfiring.gonality_bruteforce(G, args.max_degree)
        if result.exceeded_cap:
            print(f"no positive-rank divisor up to degree {result.max_degree}",
                  file=sys.stderr)
            return 3
        print(result.value)
        print("witness: " + chipfiring.format_divisor(result.witness))
        return 0
    if args.gonality_command == "check":
        D = _load_divisor(args.divfile, G)
        positive = chipfiring.has_positive_rank(G, D)
        print(f"positive rank: {'yes' if positive else 'no'}")
        return 0
    bound = chipfiring.gonality_upper_by_separator(G)
    print(bound.size)
    print("separator: " + " ".join(str(v) for v in sorted(bound.separator)))
    return 0


def _cmd_reduce(args):
    G = _load_graph(args.file)
    D = _load_divisor(args.divfile, G)
    print(chipfiring.format_divisor(chipfiring.q_reduce(G, D, args.q)))
    return 0


def _cmd_verify(args):
    token = args.theorem
    parameter = None
    if ":" in token:
        token, _, raw = token.partition(":")
        try:
            parameter = int(raw)
        except ValueError:
            raise _UsageError(f"bad theorem parameter {raw!r}") from None
    token = token.replace("-", "_")
    G = _load_graph(args.file)
    if token == "main":
        if parameter is None:
            raise _UsageError("main needs a parameter, e.g. main:4")
        report = verify.verify_main(G, parameter, brute_cap=args.brute_cap)
    elif token in ("girth3", "girth4a", "girth4b", "girth5"):
        report = verify.verify_girth_family(G, token, brute_cap=args.brute_cap)
    elif token in ("bipartite1", "bipartite2"):
        report = verify.verify_bipartite(G, token, brute_cap=args.brute_cap)
    elif token == "order_ek":
        if parameter is None:
            raise _UsageError("order-ek needs a parameter, e.g. order-ek:3")
        report = verify.verify_order_ek(G, parameter)
    else:
        raise _UsageError(f"unknown theorem {args.theorem!r}")
    print(verify.report_to_json(report) if args.json else verify.render_report(report))
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "info": _cmd_info,
    "invariant": _cmd_invariant,
    "scramble": _cmd_scramble,
    "gonality": _cmd_gonality,
    "reduce": _cmd_reduce,
    "verify": _cmd_verify,
}


def run_cli(argv):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _HANDLERS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InputFormatError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"cannot read input: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse --help
        return int(exc.code or 0)


def main():
    sys.exit(run_cli(sys.argv[1:]))
