"""Command-line front end.

Exit codes: 0 structure absent / property holds, 1 structure found /
property violated, 2 input violates the mode's precondition, 3 input or
usage error, 4 oracle refused the search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .buildings import find_building, find_building_fast, find_bull_with_nose, find_gem, find_near_building
from .bulls import check_lbfs_nose_free, d2_p4_check, p4_in
from .graph import GraphError, to_mask
from .io import FORMATS, GraphFile, ParseError, parse_graph, parse_ordering
from .oracle import DEFAULT_BOUND, OracleRefusal, StructureKind, oracle_find
from .orderings import is_chordal, is_perfect_elimination, is_strong_elimination, lbfs
from .sun import BuildingPresent, find_sun

ABSENT, FOUND, PRECONDITION, INPUT_ERROR, REFUSED = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def threads() -> int:
    """Worker cap from ``SUNFINDER_THREADS`` (default 1)."""
    raw = os.environ.get("SUNFINDER_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SUNFINDER_THREADS must be a positive integer, got {raw!r}") from None
    if value < 1:
        raise UsageError(f"SUNFINDER_THREADS must be a positive integer, got {raw!r}")
    return value


# --- output ---------------------------------------------------------------


def _named(gf: GraphFile, value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(_named(gf, v)) for v in value)
    if isinstance(value, int) and not isinstance(value, bool):
        return gf.name(value)
    return value


def _emit(args, gf: GraphFile, payload: dict) -> None:
    if args.json:
        if gf.labels:
            payload["labels"] = gf.labels
        print(json.dumps(payload, sort_keys=True))
        return
    head = payload["command"] + " " + payload["kind"]
    print(f"{head}: {payload['result']}")
    for key in ("certificate", "witness"):
        item = payload.get(key)
        if item:
            for name, value in item.items():
                if name not in ("kind",):
                    print(f"  {name}: {_named(gf, value)}")
    for name in ("ordering",):
        if name in payload:
            print(f"  {name}: {_named(gf, payload[name])}")
    for v in payload.get("violations", []):
        print(f"  violation at {_named(gf, v['vertex'])}: {_named(gf, v['structure'])}")
    if "compare" in payload:
        print(f"  compare: {payload['compare']}")


def _warn(gf: GraphFile) -> None:
    for w in gf.warnings:
        print(f"warning: {w}", file=sys.stderr)


# --- commands ---------------------------------------------------------------


def cmd_detect(args, gf: GraphFile) -> int:
    G = gf.graph
    payload = {"command": "detect", "kind": args.kind}
    cert = None
    status = ABSENT
    if args.kind == "building":
        cert = (find_building_fast if args.fast else find_building)(G)
    elif args.kind == "gem":
        cert = find_gem(G)
    elif args.kind == "sun-or-building":
        cert = find_building(G)
        if cert is None:
            cert = find_sun(G, precheck=False).certificate
    elif args.kind == "sun":
        if args.no_precheck:
            print("warning: --no-precheck skips the building check; answers on graphs with buildings are meaningless",
                  file=sys.stderr)
        try:
            cert = find_sun(G, precheck=not args.no_precheck).certificate
        except BuildingPresent as exc:
            payload.update(result="precondition violated: graph contains a building",
                           certificate=exc.certificate.to_dict(), found=False, status=PRECONDITION)
            _emit(args, gf, payload)
            return PRECONDITION
    if cert is not None:
        status = FOUND
        payload["certificate"] = cert.to_dict()
    payload.update(found=cert is not None, status=status,
                   result=f"found {payload['certificate']['kind']}" if cert is not None else "absent")
    _emit(args, gf, payload)
    return status


def _read_order(args, gf: GraphFile) -> list[int] | None:
    tokens = None
    if args.order is not None:
        tokens = args.order.replace(",", " ").split()
    elif args.order_file is not None:
        with open(args.order_file) as fh:
            tokens = fh.read().split("#", 1)[0].split()
    if tokens is None:
        return None
    seq = parse_ordering(tokens, gf)
    if sorted(seq) != list(range(gf.graph.n)):
        raise UsageError(f"ordering is not a permutation of the {gf.graph.n} vertices")
    return seq


def cmd_order(args, gf: GraphFile) -> int:
    G = gf.graph
    payload = {"command": "order", "kind": args.kind}
    seq = _read_order(args, gf)
    if args.kind == "lbfs":
        sigma = lbfs(G, seed=args.seed)
        payload.update(result="ok", ordering=list(sigma), status=ABSENT)
        _emit(args, gf, payload)
        return ABSENT
    if args.kind in ("peo-check", "strong-check"):
        if seq is None:
            raise UsageError(f"{args.kind} needs --order or --order-file")
        check = is_perfect_elimination if args.kind == "peo-check" else is_strong_elimination
        report = check(G, seq)
        status = ABSENT if report.holds else FOUND
        payload.update(ordering=seq, holds=report.holds, status=status,
                       result="holds" if report.holds else f"fails: {report.reason}")
        if not report.holds:
            payload["witness"] = {"vertices": list(report.witness)}
        _emit(args, gf, payload)
        return status
    if seq is None:
        seq = list(lbfs(G, seed=args.seed))
    report = (check_lbfs_nose_free if args.kind == "bull-scheme" else d2_p4_check)(G, seq)
    violations = []
    for v, structure in report.violations:
        shown = structure.to_dict() if hasattr(structure, "to_dict") else {"p4": list(structure)}
        violations.append({"vertex": v, "structure": _flat(shown)})
    status = ABSENT if report.holds else FOUND
    payload.update(ordering=list(report.ordering), holds=report.holds, violations=violations, status=status,
                   result="holds" if report.holds else f"{len(violations)} violation(s)")
    _emit(args, gf, payload)
    return status


def _flat(d: dict) -> list[int]:
    out = []
    for key, value in d.items():
        if key == "kind":
            continue
        out.extend(value if isinstance(value, list) else [value])
    return out


def _fast_answer(kind: StructureKind, gf: GraphFile, nose, within):
    """Decision of the fast detector for ``kind``, or a string explaining why there is none."""
    G = gf.graph
    if kind is StructureKind.SUN:
        try:
            return find_sun(G, certify=False).found
        except BuildingPresent:
            return "not comparable: graph contains a building"
    if kind is StructureKind.BUILDING:
        return find_building(G) is not None
    if kind is StructureKind.GEM:
        return find_gem(G) is not None
    if kind is StructureKind.BULL:
        return find_bull_with_nose(G, nose) is not None
    if kind is StructureKind.NEAR_BUILDING:
        return find_near_building(G) is not None
    if kind is StructureKind.CYCLE:
        return not is_chordal(G).chordal
    if kind is StructureKind.P4:
        region = to_mask(within) if within is not None else G.all_mask
        return p4_in(G.adj, region) is not None
    return "not comparable: no fast detector for this kind"


def cmd_oracle(args, gf: GraphFile) -> int:
    kind = StructureKind(args.kind)
    nose = gf.vertex(args.nose) if args.nose is not None else None
    if kind is StructureKind.BULL and nose is None:
        raise UsageError("oracle bull needs --nose")
    within = [gf.vertex(t) for t in args.within.replace(",", " ").split()] if args.within else None
    payload = {"command": "oracle", "kind": kind.value}
    try:
        witness = oracle_find(gf.graph, kind, args.bound, nose=nose, within=within)
    except OracleRefusal as exc:
        payload.update(result=f"refused: {exc}", status=REFUSED, found=None)
        _emit(args, gf, payload)
        return REFUSED
    status = FOUND if witness is not None else ABSENT
    payload.update(found=witness is not None, status=status, result="found" if witness else "none")
    if witness is not None:
        payload["witness"] = {"vertices": list(witness.vertices),
                              **{k: list(v) if isinstance(v, tuple) else v for k, v in witness.roles.items()}}
    if args.compare:
        fast = _fast_answer(kind, gf, nose, within)
        if isinstance(fast, str):
            payload["compare"] = fast
        else:
            payload["compare"] = "agree" if fast == (witness is not None) else "DISAGREE"
            payload["detector_found"] = fast
    _emit(args, gf, payload)
    return status


# --- parser -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sunfinder", description="Sun and building detection with certificates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("input", help="graph file, or - for stdin")
        p.add_argument("--format", choices=FORMATS, default="auto", help="input format (default: guess)")
        p.add_argument("--json", action="store_true", help="print one JSON object instead of text")

    p = sub.add_parser("detect", help="look for a forbidden structure and print a certificate")
    p.add_argument("kind", choices=["building", "sun", "gem", "sun-or-building"])
    common(p)
    p.add_argument("--no-precheck", action="store_true",
                   help="UNSAFE: skip the building check before sun detection (benchmarking only)")
    p.add_argument("--fast", action="store_true", help="use the triangle-listing building detector")
    p.set_defaults(run=cmd_detect)

    p = sub.add_parser("order", help="compute or check vertex orderings")
    p.add_argument("kind", choices=["lbfs", "peo-check", "strong-check", "bull-scheme", "d2p4"])
    common(p)
    p.add_argument("--order", help="ordering v1..vn as ids or labels, space or comma separated")
    p.add_argument("--order-file", help="file holding the ordering")
    p.add_argument("--seed", type=int, default=None, help="random LBFS tie-break seed (default: lowest id)")
    p.set_defaults(run=cmd_order)

    p = sub.add_parser("oracle", help="brute-force search for an induced structure")
    p.add_argument("kind", choices=[k.value for k in StructureKind])
    common(p)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND, help=f"max subset size (default {DEFAULT_BOUND})")
    p.add_argument("--compare", action="store_true", help="also run the fast detector and report agreement")
    p.add_argument("--nose", help="nose vertex for bull searches")
    p.add_argument("--within", help="vertex subset for p4 searches")
    p.set_defaults(run=cmd_oracle)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else 0
    try:
        threads()
        gf = parse_graph(args.input, args.format)
        _warn(gf)
        return args.run(args, gf)
    except (ParseError, GraphError, UsageError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
