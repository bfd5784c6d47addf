"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 parse error, 3 unrecognized deck,
4 inconsistent deck, 5 oracle range.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Sequence

from . import generators
from .canon import canonical_graph
from .deck import compute_deck, format_deck, parse_deck
from .errors import Graph6Error, InconsistentDeck, OutOfOracleRange, Unrecognized
from .graph import is_connected
from .graph6 import parse_graph6, to_graph6
from .oracle import enumerate_graphs, find_collisions, find_deck_preimages, is_l_reconstructible
from .reconstruct import reconstruct_from_deck
from .recognize import is_complete, recognize_clique_union, recognize_srg, recognize_wdr

EXIT_USAGE, EXIT_PARSE, EXIT_UNRECOGNIZED, EXIT_INCONSISTENT, EXIT_RANGE = 1, 2, 3, 4, 5


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_input(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _cmd_generate(args) -> str:
    fn = generators.GENERATORS.get(args.name)
    if fn is None:
        raise UsageError(f"unknown generator {args.name!r}; choose from {', '.join(sorted(generators.GENERATORS))}")
    try:
        g = fn(*(int(p) for p in args.params))
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters for {args.name}: {exc}") from None
    return to_graph6(g) + "\n"


def _cmd_deck(args) -> str:
    g = parse_graph6(_read_input(args.input).strip())
    if not 1 <= args.k <= g.n:
        raise UsageError(f"-k must be in 1..{g.n}")
    return format_deck(compute_deck(g, args.k, workers=args.workers))


def _read_ln2_deck(args):
    deck = parse_deck(_read_input(args.input))
    if deck.k != deck.n - 2 or deck.n < 6:
        raise UsageError(f"need an (n-2)-deck with n >= 6, got n={deck.n} k={deck.k}")
    return deck


def _cmd_recognize(args) -> str:
    deck = _read_ln2_deck(args)
    n = deck.n
    if is_complete(n, deck):
        return "complete\n"
    sizes = recognize_clique_union(n, deck)
    if sizes is not None:
        return "clique-union " + " ".join(map(str, sizes)) + "\n"
    p = recognize_srg(n, deck)
    if p is not None:
        return "srg {} {} {}\n".format(*p)
    w = recognize_wdr(n, deck)
    if w is not None:
        return "wdr {} {} {}\n".format(*w)
    raise Unrecognized("unrecognized")


def _cmd_reconstruct(args) -> str:
    deck = _read_ln2_deck(args)
    g, report = reconstruct_from_deck(deck.n, deck, workers=args.workers)
    extra = ""
    if report.params is not None:
        extra = " params=" + ",".join(map(str, report.params))
    verified = "verified" if report.verified else "unverified"
    return f"{to_graph6(canonical_graph(g))}\n{verified} branch={report.branch.value}{extra}\n"


def _cmd_oracle(args) -> str:
    if args.sub == "preimages":
        deck = parse_deck(_read_input(args.input))
        res = find_deck_preimages(deck.n, deck, cap=args.cap)
        lines = [to_graph6(canonical_graph(g)) for g in res.graphs]
        lines.append(f"preimages={len(res.graphs)} truncated={str(res.truncated).lower()}")
        return "\n".join(lines) + "\n"
    if args.sub == "certify":
        lines = []
        for g in enumerate_graphs(args.n):
            if args.wdr:
                p = generators.wdr_params(g)
                if p is None or p.mu_prime < 2 or not is_connected(g):
                    continue
                label = "wdr"
            else:
                p = generators.srg_params(g)
                if p is None:
                    continue
                label = "srg"
            ok = is_l_reconstructible(g, args.l)
            params = " ".join(map(str, p))
            lines.append(f"{to_graph6(canonical_graph(g))} {label} {params} reconstructible={'yes' if ok else 'no'}")
        lines.append(f"checked={len(lines)} all_reconstructible={'yes' if all(ln.endswith('yes') for ln in lines) else 'no'}")
        return "\n".join(lines) + "\n"
    lines = []
    for group in find_collisions(args.n, args.k):
        lines.append(" ".join(to_graph6(canonical_graph(g)) for g in group))
    lines.append(f"groups={len(lines)}")
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--workers", type=int, default=os.cpu_count() or 1, help="parallel worker processes")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")

    p = _Parser(prog="deckrecon", description="Deck computation and 2-reconstruction of regular graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="emit a named graph as graph6")
    g.add_argument("name")
    g.add_argument("params", nargs="*")
    g.set_defaults(func=_cmd_generate)

    d = sub.add_parser("deck", parents=[common], help="k-deck of a graph6 graph")
    d.add_argument("-k", type=int, required=True)
    d.add_argument("input", nargs="?")
    d.set_defaults(func=_cmd_deck)

    r = sub.add_parser("recognize", parents=[common], help="recognize the class of an (n-2)-deck")
    r.add_argument("input", nargs="?")
    r.set_defaults(func=_cmd_recognize)

    c = sub.add_parser("reconstruct", parents=[common], help="reconstruct from an (n-2)-deck")
    c.add_argument("input", nargs="?")
    c.set_defaults(func=_cmd_reconstruct)

    o = sub.add_parser("oracle", help="brute-force checks on at most 7 vertices")
    osub = o.add_subparsers(dest="sub", required=True)
    op = osub.add_parser("preimages", parents=[common])
    op.add_argument("input", nargs="?")
    op.add_argument("--cap", type=int, default=10)
    oc = osub.add_parser("certify", parents=[common])
    kind = oc.add_mutually_exclusive_group()
    kind.add_argument("--srg", action="store_true", default=True)
    kind.add_argument("--wdr", action="store_true")
    oc.add_argument("-n", type=int, required=True)
    oc.add_argument("-l", type=int, default=2)
    ol = osub.add_parser("collide", parents=[common])
    ol.add_argument("-n", type=int, required=True)
    ol.add_argument("-k", type=int, required=True)
    o.set_defaults(func=_cmd_oracle)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Graph6Error as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except Unrecognized as exc:
        print(f"unrecognized: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_UNRECOGNIZED
    except InconsistentDeck as exc:
        print(f"inconsistent deck: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except OutOfOracleRange as exc:
        print(f"out of range: {exc}", file=sys.stderr)
        return EXIT_RANGE
    except (OSError, ValueError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
