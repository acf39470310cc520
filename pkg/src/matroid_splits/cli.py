"""Command-line front end.

Data goes to stdout (JSON, or DOT for ``graph``); progress and diagnostics go
to stderr. Exit codes: 0 success, 1 usage error, 2 validation or verification
failure, 3 desk-scale guard.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence

from . import base_graph, documents, polytope, splits
from .errors import DeskScaleError, ExchangeAxiomViolation, MatroidError, ParseError, ValidationError
from .matroid import direct_sum, from_bases, relax, to_tuple
from .zoo import GraphSpec, LatticePathSpec, catalog, from_gf2_matrix, graphic, lattice_path, transversal, uniform

log = logging.getLogger("matroid_splits.cli")

OK, USAGE, INVALID, GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read(arg: str) -> str:
    """``-`` is stdin, text starting with ``{`` or ``[`` is inline JSON, anything else a path."""
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith(("{", "[")):
        return arg
    try:
        return Path(arg).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None


def _sets(text: str) -> list[list[int]]:
    """``"1,2;3,4"`` -> ``[[1, 2], [3, 4]]``."""
    try:
        return [[int(x) for x in chunk.split(",") if x.strip()] for chunk in text.split(";")]
    except ValueError:
        raise UsageError(f"expected semicolon-separated lists of integers, got {text!r}") from None


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# -- subcommands ----------------------------------------------------------------


def _cmd_build(args) -> int:
    if args.uniform:
        M = uniform(*args.uniform)
    elif args.catalog:
        M = catalog(args.catalog)
    elif args.gf2:
        M = from_gf2_matrix(args.gf2)
    elif args.transversal:
        M = transversal(_sets(args.transversal[1]), int(args.transversal[0]))
    elif args.lattice_path:
        m, r, P, Q = args.lattice_path
        M = lattice_path(LatticePathSpec(int(m), int(r), P, Q))
    elif args.graphic:
        edges = tuple(tuple(e) for e in _sets(args.graphic[1]))
        M = graphic(GraphSpec(int(args.graphic[0]), edges))
    elif args.bases:
        M = from_bases(int(args.bases[0]), _sets(args.bases[1]))
    elif args.direct_sum:
        M = direct_sum(*(documents.parse(_read(a)) for a in args.direct_sum))
    else:
        M = relax(documents.parse(_read(args.relax[0])), _sets(args.relax[1])[0])
    sys.stdout.write(documents.serialize(M) + "\n")
    return OK


def _cmd_check(args) -> int:
    try:
        M = documents.parse(_read(args.document))
    except ExchangeAxiomViolation as exc:
        b1, b2, e = exc.witness
        _emit({"valid": False, "error": "exchange", "witness": {"B1": list(b1), "B2": list(b2), "e": e}})
        return INVALID
    except (ValidationError, ParseError) as exc:
        _emit({"valid": False, "error": type(exc).__name__, "message": str(exc)})
        return INVALID
    _emit({"valid": True, "n": M.n, "rank": M.r, "bases": len(M)})
    return OK


def _cmd_dim(args) -> int:
    M = documents.parse(_read(args.document))
    _emit(polytope.dimension(M))
    return OK


def _cmd_graph(args) -> int:
    M = documents.parse(_read(args.document))
    G = base_graph.build(M)
    census = base_graph.neighborhood_census(G)
    stats = {
        "vertices": len(G),
        "edges": G.edge_count,
        "binary": census[base_graph.OCTAHEDRON] == 0,
        "neighborhoods": census,
    }
    sys.stdout.write(documents.export_dot(G, stats))
    return OK


def _cmd_splits(args) -> int:
    reports = []
    if args.uniform_family:
        n, r = args.uniform_family
        M = uniform(n, r)
        for k, group in splits.uniform_split_family(n, r).items():
            for cand in group:
                doc = documents.split_report(M, cand, splits.verify_candidate(M, cand))
                doc["group"] = k
                reports.append(doc)
    elif args.lattice_path:
        m, r, P, Q = args.lattice_path
        spec = LatticePathSpec(int(m), int(r), P, Q)
        M = lattice_path(spec)
        for cand in splits.lattice_path_splits(spec):
            reports.append(documents.split_report(M, cand, splits.verify_candidate(M, cand)))
    else:
        if args.document is None:
            raise UsageError("splits needs a document, --uniform-family or --lattice-path")
        M = documents.parse(_read(args.document))
        stats = splits.SearchStats()
        found = splits.search_splits(M, first=args.first, workers=args.workers, stats=stats)
        log.info("search: %s", stats.as_dict())
        for cand in found:
            report = splits.verify_candidate(M, cand)
            reports.append(documents.split_report(M, cand, report, [splits.split_certificate(M, cand)]))
    log.info("%d split report(s)", len(reports))
    _emit(reports)
    return OK


def _cmd_verify(args) -> int:
    jobs = []
    if args.report:
        text = _read(args.report)
        docs = json.loads(text) if text.lstrip().startswith("[") else [json.loads(text)]
        for doc in docs:
            jobs.append(documents.parse_report(json.dumps(doc)))
    else:
        if not (args.document and args.part1 and args.part2):
            raise UsageError("verify-split needs DOCUMENT PART1 PART2, or --report")
        M = documents.parse(_read(args.document))
        n1, part1 = documents.parse_family(_read(args.part1))
        n2, part2 = documents.parse_family(_read(args.part2))
        if n1 != M.n or n2 != M.n:
            raise ParseError(f"part ground sizes {n1}, {n2} differ from the matroid's {M.n}")
        jobs.append((M, part1, part2, None))
    results = []
    for M, part1, part2, H in jobs:
        report = splits.verify_split(M, part1, part2, H)
        results.append(documents.report_doc(report))
    _emit(results[0] if len(results) == 1 else results)
    return OK if all(r["verdict"] for r in results) else INVALID


def _cmd_classify(args) -> int:
    M = documents.parse(_read(args.document))
    _emit([documents.certificate_doc(c) for c in splits.classify(M)])
    return OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matroid-splits", description="Hyperplane splits of matroid base polytopes.")
    p.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    b = sub.add_parser("build", help="emit an explicit document from a constructor")
    g = b.add_mutually_exclusive_group(required=True)
    g.add_argument("--uniform", nargs=2, type=int, metavar=("N", "R"))
    g.add_argument("--catalog", metavar="NAME")
    g.add_argument("--gf2", nargs="+", metavar="ROW", help="rows as bit strings")
    g.add_argument("--transversal", nargs=2, metavar=("N", "PARTS"), help='e.g. 4 "1,2;2,3,4"')
    g.add_argument("--lattice-path", nargs=4, metavar=("M", "R", "P", "Q"))
    g.add_argument("--graphic", nargs=2, metavar=("VERTICES", "EDGES"), help='e.g. 3 "1,2;2,3;1,3"')
    g.add_argument("--bases", nargs=2, metavar=("N", "BASES"), help='e.g. 4 "1,2;1,3"')
    g.add_argument("--direct-sum", nargs=2, metavar=("DOC1", "DOC2"))
    g.add_argument("--relax", nargs=2, metavar=("DOC", "SET"))
    b.set_defaults(func=_cmd_build)

    for name, func, help_ in (
        ("check", _cmd_check, "validate a document"),
        ("dim", _cmd_dim, "dimension of the base polytope"),
        ("graph", _cmd_graph, "base graph as DOT, statistics in comments"),
        ("classify", _cmd_classify, "split or indecomposability certificates"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("document", help="path, '-' for stdin, or inline JSON")
        s.set_defaults(func=func)

    s = sub.add_parser("splits", help="search for hyperplane splits")
    s.add_argument("document", nargs="?")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--all", action="store_true", help="every split (default)")
    mode.add_argument("--first", action="store_true", help="stop at the first split")
    mode.add_argument("--uniform-family", nargs=2, type=int, metavar=("N", "R"))
    mode.add_argument("--lattice-path", nargs=4, metavar=("M", "R", "P", "Q"))
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=_cmd_splits)

    v = sub.add_parser("verify-split", help="judge two part documents as a split")
    v.add_argument("document", nargs="?")
    v.add_argument("part1", nargs="?")
    v.add_argument("part2", nargs="?")
    v.add_argument("--report", help="a split report, or a list of them, as emitted by 'splits'")
    v.set_defaults(func=_cmd_verify)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return USAGE
    except DeskScaleError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return GUARD
    except (MatroidError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INVALID


def main() -> None:
    sys.exit(run())
