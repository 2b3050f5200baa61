"""``tdc``: construct, verify and search total-domination-critical graphs.

Exit codes: 0 success / verdict true, 1 verdict false, 2 parse error,
3 parameter error, 4 precondition (connectivity) error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from importlib import resources
from typing import Iterator, Sequence

from .criticality import PreconditionError, is_k_gamma_t_critical
from .domination import gamma_t
from .families import Family, FamilyParams, ParameterError, build_cycle, build_g4m, build_g4m2
from .graph import (
    INF,
    Graph,
    Graph6Error,
    GraphError,
    decode_graph6,
    encode_graph6,
    format_edge_list,
    max_degree,
    parse_edge_list,
)
from .search import (
    SearchParameterError,
    default_workers,
    search_critical_full,
    search_critical_pruned,
    verify_certificate,
)

EXIT_OK, EXIT_FALSE, EXIT_PARSE, EXIT_PARAM, EXIT_PRECONDITION = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit 2, which is our parse-error code
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARAM, f"{self.prog}: error: {message}\n")


# ---------------------------------------------------------------------------
# existence oracle
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExistenceVerdict:
    delta: int
    exists: bool
    certificate: str | None
    provenance: str  # construction-g4m2 | construction-g4m | cycle-c5 | search | theorem-only

    def line(self) -> str:
        cert = self.certificate or "-"
        return (f"delta={self.delta} exists={'true' if self.exists else 'false'} "
                f"provenance={self.provenance} certificate={cert}")


def stored_search_results() -> dict[int, dict]:
    """Pruned-search outcomes shipped with the package, keyed by delta."""
    text = resources.files("tdcrit").joinpath("data/search_results.json").read_text()
    return {int(d): rec for d, rec in json.loads(text).items()}


def existence_verdict(delta: int, confirm: bool = False, workers: int = 1) -> ExistenceVerdict:
    """Is there a 3-critical graph of order delta + 3 with maximum degree delta?

    Odd delta >= 9 comes from the explicit families, delta = 2 from C_5, and
    delta <= 8 otherwise from pruned-search results (stored, or rerun when
    ``confirm``).  Stored certificates are re-verified on every call.
    """
    if delta < 2:
        raise ParameterError(f"delta must be >= 2, got {delta}")
    if delta == 2:
        return ExistenceVerdict(2, True, encode_graph6(build_cycle(5)), "cycle-c5")
    if delta % 2 == 1 and delta >= 9:
        if delta % 4 == 3:
            g, prov = build_g4m2((delta + 1) // 4).graph, "construction-g4m2"
        else:
            g, prov = build_g4m((delta + 3) // 4).graph, "construction-g4m"
        return ExistenceVerdict(delta, True, encode_graph6(g), prov)
    if delta >= 10:
        return ExistenceVerdict(delta, True, None, "theorem-only")
    if confirm:
        certs = search_critical_pruned(delta, workers=workers).certificates
    else:
        stored = stored_search_results()
        if delta not in stored:
            raise RuntimeError(f"no stored search result for delta={delta}; rerun with --confirm "
                               f"or scripts/precompute_search_results.py")
        certs = stored[delta]["certificates"]
    if certs:
        cert = certs[0]
        if not verify_certificate(cert, 3):
            raise RuntimeError(f"stored certificate for delta={delta} fails verification")
        return ExistenceVerdict(delta, True, cert, "search")
    return ExistenceVerdict(delta, False, None, "search")


# ---------------------------------------------------------------------------
# input handling
# ---------------------------------------------------------------------------

def _parse_one(text: str) -> Graph:
    try:
        return decode_graph6(text)
    except GraphError as exc:
        raise Graph6Error(str(exc)) from exc


def read_graphs(source: str | None) -> Iterator[Graph]:
    """Graphs from a graph6 argument, a file, or stdin (one graph6 per line).

    Files whose first line is two integers are read as one edge list.
    """
    if source is None or source == "-":
        text = sys.stdin.read()
    elif os.path.isfile(source):
        with open(source) as fh:
            text = fh.read()
    else:
        yield _parse_one(source)
        return
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if lines and len(lines[0].split()) == 2:
        yield parse_edge_list("\n".join(lines))
        return
    if not lines:
        raise Graph6Error("no graph on input")
    for ln in lines:
        yield _parse_one(ln)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_construct(args: argparse.Namespace) -> int:
    family = Family(args.family)
    size = args.n if family is Family.CYCLE else args.m
    if size is None:
        raise ParameterError("--n is required for cycle, --m for g4m2/g4m")
    g = FamilyParams(family, size).build()
    print(format_edge_list(g), end="") if args.format == "edges" else print(encode_graph6(g))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    verdict = True
    for g in read_graphs(args.graph):
        report = is_k_gamma_t_critical(g, args.k)
        if args.format == "human":
            print(report.human())
        else:
            print("\n".join(report.lines()))
        verdict &= report.verdict
    return EXIT_OK if verdict else EXIT_FALSE


def cmd_search(args: argparse.Namespace) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    if args.mode == "pruned":
        if args.k != 3:
            raise SearchParameterError(
                "pruned mode rests on the frame structure of 3-critical graphs of order "
                "delta + 3; use --mode full for other k")
        out = search_critical_pruned(args.delta, workers=workers,
                                     prune_diameter=args.prune_diameter,
                                     include_exempt=args.include_exempt)
    else:
        out = search_critical_full(args.delta + args.k, args.delta, args.k, workers=workers,
                                   prune_diameter=args.prune_diameter)
    for cert in out.certificates:
        print(cert)
    print("# " + out.footer())
    return EXIT_OK


def cmd_exists(args: argparse.Namespace) -> int:
    workers = args.workers if args.workers is not None else default_workers()
    print(existence_verdict(args.delta, confirm=args.confirm, workers=workers).line())
    return EXIT_OK


def cmd_gamma_t(args: argparse.Namespace) -> int:
    for g in read_graphs(args.graph):
        res = gamma_t(g)
        if res.value == INF:
            print("gamma_t=inf witness=-")
        else:
            print(f"gamma_t={int(res.value)} witness={hex(res.witness)}")
    return EXIT_OK


def cmd_encode(args: argparse.Namespace) -> int:
    for g in read_graphs(args.graph):
        print(encode_graph6(g))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    for g in read_graphs(args.graph):
        print(format_edge_list(g), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tdc", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="print a family graph")
    c.add_argument("family", choices=[f.value for f in Family])
    c.add_argument("--m", type=int)
    c.add_argument("--n", type=int)
    c.add_argument("--format", choices=["graph6", "edges"], default="graph6")
    c.set_defaults(func=cmd_construct)

    v = sub.add_parser("verify", help="criticality report; exit 0 iff critical")
    v.add_argument("graph", nargs="?", help="graph6 string, file, or - for stdin")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--format", choices=["line", "human"], default="line")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("search", help="exhaustive search for critical graphs of order delta + k")
    s.add_argument("--delta", type=int, required=True)
    s.add_argument("--k", type=int, default=3)
    s.add_argument("--mode", choices=["pruned", "full"], default="pruned")
    s.add_argument("--prune-diameter", action="store_true")
    s.add_argument("--include-exempt", action="store_true",
                   help="also search the frame where x is adjacent to a leaf (pruned mode)")
    s.add_argument("--workers", type=int, default=None)
    s.set_defaults(func=cmd_search)

    e = sub.add_parser("exists", help="3-critical graph of order delta + 3 with max degree delta?")
    e.add_argument("--delta", type=int, required=True)
    e.add_argument("--confirm", action="store_true", help="rerun searches instead of stored results")
    e.add_argument("--workers", type=int, default=None)
    e.set_defaults(func=cmd_exists)

    for name, fn, hlp in (("gamma-t", cmd_gamma_t, "total domination number and least witness"),
                          ("encode", cmd_encode, "edge list to graph6"),
                          ("decode", cmd_decode, "graph6 to edge list")):
        q = sub.add_parser(name, help=hlp)
        q.add_argument("graph", nargs="?")
        q.set_defaults(func=fn)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except PreconditionError as exc:
        print(f"precondition error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ParameterError, SearchParameterError, GraphError, ValueError) as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
