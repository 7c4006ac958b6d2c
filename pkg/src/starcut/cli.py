"""Command-line interface.

All machine output goes to stdout as one JSON document (JSONL for corpus
runs); anything meant for humans goes to stderr.  Exit codes: 0 success or
all checks passing, 1 domain failure or any check failing, 2 usage or I/O
errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .corpus import CorpusSource, enumerate_connected, run_verification
from .covering import cover_min_cut_detailed
from .errors import InvariantViolation
from .existence import decide_existence
from .families import build as build_family
from .formats import from_graph6, read_edge_list
from .graph import Graph, vertex_connectivity
from .stars import struct_connectivity_exact
from .verify import CHECK_NAMES, check_open_problem, find_ratio_witnesses

DEFAULT_ARITY = 2


def _add_graph_flags(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--g6", metavar="STR", help="graph6 string")
    grp.add_argument("--file", metavar="PATH", help="input file (.g6 or .el)")
    grp.add_argument("--family", metavar="NAME", help="built-in family name")
    sub.add_argument("--param", metavar="K", help="family parameter")


def _add_source_flags(sub: argparse.ArgumentParser) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("--n", type=int, metavar="K", help="builtin enumeration order")
    grp.add_argument("--input", metavar="FILE", help="graph6 file, one per line")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="starcut",
        description="Structure connectivity of graphs with respect to 3-vertex stars",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("kappa", help="vertex connectivity")
    _add_graph_flags(p)

    p = subs.add_parser("skappa", help="star structure connectivity")
    _add_graph_flags(p)
    p.add_argument("--arity", type=int, default=DEFAULT_ARITY, help="star leaf count")
    p.add_argument("--pure", action="store_true", help="search sizes from 1 up")
    p.add_argument("--witness", action="store_true", help="include a minimum cut")

    p = subs.add_parser("exists", help="existence certificate for a structure cut")
    _add_graph_flags(p)

    p = subs.add_parser("cover", help="cover a minimum vertex cut by disjoint stars")
    _add_graph_flags(p)
    p.add_argument("--trace", action="store_true", help="include stage details")

    p = subs.add_parser("diam-cut", help="structure cut from the diameter rule")
    _add_graph_flags(p)

    p = subs.add_parser("verify", help="run property checks over a corpus")
    _add_source_flags(p)
    p.add_argument("--jobs", type=int, default=1, help="parallel workers")
    p.add_argument("--out", metavar="FILE", help="JSONL sink (resumable)")
    p.add_argument("--checks", metavar="LIST", help="comma-separated check names")

    p = subs.add_parser("ratio", help="graphs attaining the kappa/3 lower bound")
    p.add_argument("--max-n", type=int, default=6, help="enumerate up to this order")

    p = subs.add_parser("explore", help="test the bound conjecture at higher arity")
    _add_source_flags(p)
    p.add_argument("--arity", type=int, required=True, help="star leaf count")

    return parser


def _load_graph(args: argparse.Namespace) -> Graph:
    if args.g6 is not None:
        return from_graph6(args.g6)
    if args.file is not None:
        with open(args.file, "r", encoding="ascii") as fh:
            text = fh.read()
        if args.file.endswith(".el"):
            return read_edge_list(text)
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        return from_graph6(first)
    return build_family(args.family, args.param)


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _cmd_kappa(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _emit({"n": g.n, "value": vertex_connectivity(g)})
    return 0


def _cmd_skappa(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    result = struct_connectivity_exact(g, m=args.arity, pure=args.pure)
    obj = {"n": g.n, "arity": args.arity, "status": result.status, "value": result.value}
    if args.witness and result.found:
        obj["witness"] = result.witness.to_obj()
    _emit(obj)
    return 0


def _cmd_exists(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    _emit(decide_existence(g).to_obj())
    return 0


def _cmd_cover(args: argparse.Namespace) -> int:
    g = _load_graph(args)
    family, cut, sides, trace = cover_min_cut_detailed(g)
    obj = {
        "family": family.to_obj(),
        "size": len(family),
        "cut": sorted(cut),
        "kappa": vertex_connectivity(g),
    }
    if args.trace:
        obj["sides"] = [sorted(sides[0]), sorted(sides[1])]
        obj["trace"] = trace
    _emit(obj)
    return 0


def _cmd_diam_cut(args: argparse.Namespace) -> int:
    from .existence import diameter_cut

    g = _load_graph(args)
    family = diameter_cut(g)
    _emit({"family": family.to_obj(), "size": len(family)})
    return 0


def _parse_checks(text: Optional[str]) -> Optional[tuple[str, ...]]:
    if text is None:
        return None
    names = tuple(name.strip() for name in text.split(",") if name.strip())
    for name in names:
        if name not in CHECK_NAMES:
            raise ValueError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    return names


def _make_source(args: argparse.Namespace) -> CorpusSource:
    if args.n is not None:
        return CorpusSource(kind="enumeration", n=args.n)
    return CorpusSource(kind="graph6", path=args.input)


def _cmd_verify(args: argparse.Namespace) -> int:
    source = _make_source(args)
    emit = None
    if args.out is None:
        emit = lambda obj: print(json.dumps(obj, sort_keys=True))
    summary = run_verification(
        source,
        checks=_parse_checks(args.checks),
        jobs=args.jobs,
        out=args.out,
        emit=emit,
    )
    print(json.dumps({"summary": summary}, sort_keys=True))
    return 1 if summary["failures"] or summary["errors"] else 0


def _cmd_ratio(args: argparse.Namespace) -> int:
    if args.max_n < 2:
        raise ValueError("ratio search needs --max-n of at least 2")
    graphs = (g for n in range(2, args.max_n + 1) for g in enumerate_connected(n))
    hits = find_ratio_witnesses(graphs)
    _emit({"witnesses": [r.to_obj() for r in hits], "count": len(hits)})
    return 0


def _cmd_explore(args: argparse.Namespace) -> int:
    source = _make_source(args)
    failures = 0
    from .corpus import iter_source

    for g, err in iter_source(source):
        if err is not None:
            print(json.dumps({"graph_id": "", "error": err}, sort_keys=True))
            continue
        record = check_open_problem(g, args.arity)
        print(json.dumps(record.to_obj(), sort_keys=True))
        failures += len(record.failed)
    print(json.dumps({"summary": {"counterexamples": failures}}, sort_keys=True))
    return 1 if failures else 0


_DISPATCH = {
    "kappa": _cmd_kappa,
    "skappa": _cmd_skappa,
    "exists": _cmd_exists,
    "cover": _cmd_cover,
    "diam-cut": _cmd_diam_cut,
    "verify": _cmd_verify,
    "ratio": _cmd_ratio,
    "explore": _cmd_explore,
}


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (ValueError, InvariantViolation) as exc:
        print(json.dumps({"error": str(exc)}))
        return 1
    except OSError as exc:
        print(json.dumps({"error": str(exc)}))
        return 2


if __name__ == "__main__":
    sys.exit(main())
