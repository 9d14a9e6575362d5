"""Command-line interface.

Exit codes: 0 on success, 1 for usage and parse errors (bad flags, malformed
signature text or matrix files), 2 for domain errors (imbalanced matrices,
infeasible requests, non-integral linear witnesses).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .algebra import compose
from .analysis import classify_relation
from .core import Signature
from .decompose import greedy_decompose, linear_decompose
from .errors import DOMAIN_ERRORS, IfnError
from .generators import complete_support, markov_to_integer_ifn, premier_network, random_ifn
from .matrixdoc import (
    build_analysis_report,
    build_check_report,
    canonical_json,
    document_to_network,
    document_to_rational_matrix,
    fraction_to_json,
    network_to_document,
)
from .sigtext import parse_signature, render_path, render_signature


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # usage errors are exit 1, not argparse's 2
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _load_document(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _cmd_compose(args: argparse.Namespace) -> int:
    sig = parse_signature(args.sig)
    net = compose(sig, strict=args.strict)
    _emit(canonical_json(network_to_document(net)), args.out)
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    net = document_to_network(_load_document(args.matrix))
    if args.method == "greedy":
        print(render_signature(greedy_decompose(net)))
        return 0
    result = linear_decompose(net)
    if isinstance(result, Signature):
        print(render_signature(result))
        return 0
    compact = all(len(n) == 1 and n.isalpha() for n in net.nodes)
    print("no nonnegative-integer cycle weights; exact witness:", file=sys.stderr)
    for cycle, weight in zip(result.cycles, result.weights):
        print(f"  {render_path(cycle.nodes, compact)}: {fraction_to_json(weight)}", file=sys.stderr)
    nonzero = [
        (link, value) for link, value in zip(result.links, result.residual) if value
    ]
    if nonzero:
        print("residual flow left unexplained:", file=sys.stderr)
        for (src, dst), value in nonzero:
            print(f"  {src}->{dst}: {fraction_to_json(value)}", file=sys.stderr)
    return 2


def _cmd_analyze(args: argparse.Namespace) -> int:
    print(canonical_json(build_analysis_report(parse_signature(args.sig))))
    return 0


def _cmd_check(args: argparse.Namespace) -> int:
    net = document_to_network(_load_document(args.matrix))
    print(canonical_json(build_check_report(net)))
    return 0


def _cmd_canon(args: argparse.Namespace) -> int:
    print(render_signature(parse_signature(args.sig)))
    return 0


def _cmd_relate(args: argparse.Namespace) -> int:
    relation = classify_relation(parse_signature(args.sig1), parse_signature(args.sig2))
    print(relation.value)
    return 0


def _cmd_random(args: argparse.Namespace) -> int:
    print(render_signature(random_ifn(args.nodes, args.kappa, args.seed)))
    return 0


def _cmd_premier(args: argparse.Namespace) -> int:
    if args.complete is not None:
        support = complete_support(args.complete, self_loops=args.self_loops)
    else:
        support = document_to_network(_load_document(args.graph))
    sig, net = premier_network(support)
    print(render_signature(sig))
    print(canonical_json(network_to_document(net)))
    return 0


def _cmd_markov(args: argparse.Namespace) -> int:
    matrix = document_to_rational_matrix(_load_document(args.matrix))
    net = markov_to_integer_ifn(matrix)
    print(canonical_json(network_to_document(net)))
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    from .service import run_server  # deferred: not needed for pure CLI use

    run_server(host=args.host, port=args.port, static_dir=args.static)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ifnkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compose", help="signature text to flow matrix JSON")
    p.add_argument("--sig", required=True, help="signature text, e.g. 'a + 2ab'")
    p.add_argument("--strict", action="store_true", help="reject reducible signatures")
    p.add_argument("--out", help="write the JSON here instead of stdout")
    p.set_defaults(handler=_cmd_compose)

    p = sub.add_parser("decompose", help="flow matrix JSON to signature text")
    p.add_argument("--matrix", required=True, help="matrix document path, or - for stdin")
    p.add_argument("--method", choices=("greedy", "linear"), default="greedy")
    p.set_defaults(handler=_cmd_decompose)

    p = sub.add_parser("analyze", help="full flow statistics from a signature")
    p.add_argument("--sig", required=True)
    p.set_defaults(handler=_cmd_analyze)

    p = sub.add_parser("check", help="premagic/irreducibility verdicts for a matrix")
    p.add_argument("--matrix", required=True, help="matrix document path, or - for stdin")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("canon", help="normalize signature text")
    p.add_argument("--sig", required=True)
    p.set_defaults(handler=_cmd_canon)

    p = sub.add_parser("relate", help="identical | equivalent | distinct")
    p.add_argument("--sig1", required=True)
    p.add_argument("--sig2", required=True)
    p.set_defaults(handler=_cmd_relate)

    p = sub.add_parser("random", help="random ideal flow signature")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--kappa", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser("premier", help="assign every cycle of a support graph once")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--complete", type=int, help="complete support on N nodes")
    group.add_argument("--graph", help="support matrix document path")
    p.add_argument("--self-loops", action="store_true", help="with --complete, include loops")
    p.set_defaults(handler=_cmd_premier)

    p = sub.add_parser("markov", help="stochastic matrix to minimal integer flow")
    p.add_argument("--matrix", required=True, help="row-stochastic matrix document")
    p.set_defaults(handler=_cmd_markov)

    p = sub.add_parser("serve", help="run the JSON HTTP service")
    p.add_argument("--port", type=int, required=True)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--static", help="also serve this directory at /", default=None)
    p.set_defaults(handler=_cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except DOMAIN_ERRORS as exc:
        print(f"ifnkit {args.command}: {exc}", file=sys.stderr)
        return 2
    except (IfnError, ValueError, OSError) as exc:
        print(f"ifnkit {args.command}: {exc}", file=sys.stderr)
        return 1
    except KeyboardInterrupt:
        return 0


if __name__ == "__main__":
    sys.exit(main())
