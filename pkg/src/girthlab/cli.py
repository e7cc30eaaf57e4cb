"""Command-line surface: one binary, subcommand per task.

Every run ends with a single machine-parseable summary line (or, with
--json, a single JSON document and nothing else).  Exit codes: 0 success or
zero violations, 1 a violation was found, 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import additive, cayley, cs_finder, digraph, kemperman, transitive, verifier


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=False))


def _load_graph(path: str) -> digraph.Digraph:
    try:
        return digraph.load_edge_list(path)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc


def _cmd_girth(args) -> int:
    g = _load_graph(args.file)
    found = digraph.girth(g)
    if args.json:
        if found is None:
            _print_json({"girth": None, "cycle": None})
        else:
            _print_json({"girth": found[0], "cycle": list(found[1].vertices)})
        return 0
    if found is None:
        print("girth=inf cycle=none")
    else:
        ell, cyc = found
        print(f"girth={ell} cycle={' '.join(map(str, cyc.vertices))}")
    return 0


def _cmd_cs_cycle(args) -> int:
    g = _load_graph(args.file)
    cyc = cs_finder.find_short_cycle(g, args.r)
    bound = (2 * g.n) // (args.r + 1)
    if args.json:
        _print_json({"cycle": list(cyc.vertices), "len": cyc.length, "bound": bound})
        return 0
    print(" ".join(map(str, cyc.vertices)))
    print(f"len={cyc.length} bound=2n/(r+1)={bound}")
    return 0


def _cmd_circulant(args) -> int:
    res = cayley.circulant_extremal(args.n, args.r)
    bound = -(-args.n // args.r)
    verts = " ".join(map(str, res.cycle.vertices))
    if args.json:
        _print_json({
            "girth": res.girth,
            "bound": bound,
            "witness": list(res.cycle.vertices),
            "steps": list(res.steps),
        })
        return 0
    print(f"girth={res.girth} bound={bound} witness={verts}")
    return 0


def _cmd_cayley(args) -> int:
    group = cayley.parse_group_spec(args.group)
    conn = cayley.parse_connection_list(group, args.set)
    spec = cayley.CayleySpec(group, conn)
    if args.connected:
        value = cayley.is_connected(spec)
        if args.json:
            _print_json({"connected": value})
        else:
            print(f"connected={'true' if value else 'false'}")
        return 0
    g = cayley.cayley_girth(spec)
    if g is None:
        raise ValueError("empty connection set")
    word = cayley.girth_witness_word(spec)
    if args.json:
        _print_json({"girth": g, "word": word})
        return 0
    print(f"girth={g} word={' '.join(map(str, word))}")
    return 0


def _cmd_kemperman_scan(args) -> int:
    group = cayley.parse_group_spec(args.group)
    report = kemperman.scan_group(group, max_subset_size=args.max_size,
                                  workers=args.workers)
    if args.json:
        _print_json(report.to_dict())
    else:
        print(f"pairs={report.pairs_checked} violations={len(report.violations)} "
              f"tight={report.tight_count}")
    return 1 if report.violations else 0


def _read_checkpoint(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed checkpoint file: {exc}") from exc


def _write_checkpoint(path: str, n: int, r: int, report) -> None:
    payload = {"mode": "exhaustive", "n": n, "r": r, "state": report.state()}
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def _emit_report(report, as_json: bool) -> int:
    if as_json:
        _print_json(report.to_dict())
        return 1 if report.violations else 0
    if report.extremal is not None:
        ext = report.extremal
        print(f"extremal mask={ext['mask']} girth={ext['girth']} bound={ext['bound']}")
    if not report.complete:
        print(f"paused at={report.checkpoint}")
    print(f"checked={report.checked} violations={len(report.violations)}")
    return 1 if report.violations else 0


def _cmd_verify_ch(args) -> int:
    if args.exhaustive:
        state = None
        if args.resume is not None:
            payload = _read_checkpoint(args.resume)
            if (payload.get("mode"), payload.get("n"), payload.get("r")) != \
                    ("exhaustive", args.n, args.r):
                raise ValueError("checkpoint parameters do not match")
            state = payload["state"]
        report = verifier.exhaustive_ch(args.n, args.r, workers=args.workers,
                                        stop_after=args.stop_after, state=state)
        if args.checkpoint is not None:
            _write_checkpoint(args.checkpoint, args.n, args.r, report)
        return _emit_report(report, args.json)
    report = verifier.sampled_ch(args.n, args.r, args.samples, args.seed)
    return _emit_report(report, args.json)


def _cmd_transitive_check(args) -> int:
    g = _load_graph(args.file)
    ok, ag = transitive.is_vertex_transitive(g)
    if args.json:
        _print_json({"transitive": ok, "order": len(ag) if ok else None})
        return 0
    if ok:
        print(f"transitive=true order={len(ag)}")
    else:
        print("transitive=false")
    return 0


def _cmd_hamidoune(args) -> int:
    g = _load_graph(args.file)
    ok, ag = transitive.is_vertex_transitive(g)
    if not ok:
        raise ValueError("non-transitive group")
    cyc = transitive.hamidoune_cycle(g, ag)
    d = g.out_degree(0)
    bound = -(-g.n // d)
    if args.json:
        _print_json({"len": cyc.length, "bound": bound, "cycle": list(cyc.vertices)})
        return 0
    print(f"len={cyc.length} bound={bound} cycle={' '.join(map(str, cyc.vertices))}")
    return 0


def _cmd_sidon(args) -> int:
    seq = additive.greedy_sidon(args.count)
    if args.json:
        _print_json({"sidon": list(seq.elements)})
        return 0
    print(" ".join(map(str, seq.elements)))
    return 0


def _cmd_greene(args) -> int:
    digest = additive.greene_digest(args.p)
    if args.json:
        _print_json(digest)
        return 0
    print(f"set={digest['set_size']} sumset={digest['sumset_size']} "
          f"min_r={digest['min_r']}")
    return 0


def _cmd_triangle_check(args) -> int:
    report = verifier.triangle_threshold_check(args.n, args.samples, args.seed)
    return _emit_report(report, args.json)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="girthlab",
        description="Directed girth, short-cycle certificates, product-set "
                    "bounds, and desk-scale conjecture verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true",
                       help="emit a single JSON document instead of text")

    p = sub.add_parser("girth", help="exact girth of an edge-list file")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_girth)

    p = sub.add_parser("cs-cycle",
                       help="short cycle certificate, length <= 2n/(r+1)")
    p.add_argument("file")
    p.add_argument("--r", type=int, required=True, help="min outdegree r")
    add_json(p)
    p.set_defaults(func=_cmd_cs_cycle)

    p = sub.add_parser("circulant",
                       help="extremal circulant C(n,{1..r}) and its girth")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_circulant)

    p = sub.add_parser("cayley", help="girth or connectivity of a Cayley graph")
    p.add_argument("--group", required=True,
                   help='group spec: "cyclic:N" or "table:<path>"')
    p.add_argument("--set", required=True,
                   help="comma-separated connection set, e.g. 1,2")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--girth", action="store_true", default=True)
    mode.add_argument("--connected", action="store_true")
    add_json(p)
    p.set_defaults(func=_cmd_cayley)

    p = sub.add_parser("kemperman-scan",
                       help="verify |AB| >= |A|+|B|-1 over all eligible pairs")
    p.add_argument("--group", required=True)
    p.add_argument("--max-size", type=int, default=None,
                   help="cap on |A| and |B| during the scan")
    p.add_argument("--workers", type=int, default=1)
    add_json(p)
    p.set_defaults(func=_cmd_kemperman_scan)

    p = sub.add_parser("verify-ch",
                       help="scan digraphs for girth <= ceil(n/r)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    how = p.add_mutually_exclusive_group(required=True)
    how.add_argument("--exhaustive", action="store_true")
    how.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, help="required with --samples")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--resume", metavar="FILE",
                   help="continue from a checkpoint file")
    p.add_argument("--checkpoint", metavar="FILE",
                   help="write the cursor and tallies here on exit")
    p.add_argument("--stop-after", type=int, default=None, metavar="INDEX",
                   help="pause once the enumeration cursor reaches INDEX")
    add_json(p)
    p.set_defaults(func=_cmd_verify_ch)

    p = sub.add_parser("transitive-check",
                       help="vertex-transitivity of an edge-list file")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_transitive_check)

    p = sub.add_parser("hamidoune",
                       help="cycle of length <= ceil(n/d) in a transitive graph")
    p.add_argument("file")
    add_json(p)
    p.set_defaults(func=_cmd_hamidoune)

    p = sub.add_parser("sidon", help="greedy Sidon sequence over the integers")
    p.add_argument("--count", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_sidon)

    p = sub.add_parser("greene", help="digest of A = {0} u <2> in Z/p")
    p.add_argument("--p", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_greene)

    p = sub.add_parser("triangle-check",
                       help="digon-free samples at outdegree ceil(c0 n) "
                            "must contain triangles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    add_json(p)
    p.set_defaults(func=_cmd_triangle_check)

    return parser


def _validate(args, parser: argparse.ArgumentParser) -> None:
    if args.command == "verify-ch":
        if args.samples is not None and args.seed is None:
            parser.error("--samples requires an explicit --seed")
        if not args.exhaustive and (args.stop_after is not None
                                    or args.resume is not None
                                    or args.checkpoint is not None):
            parser.error("checkpointing applies to --exhaustive runs only")


def main(argv: Optional[list[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        _validate(args, parser)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AssertionError as exc:
        print(f"violation: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
