"""Command-line front end.

Every subcommand is deterministic given its arguments and input files; counts
appear in JSON as decimal strings so arbitrary precision survives any shell or
language downstream. Errors go to stderr as one-line JSON {"error", "detail"}
with exit codes 2 (usage), 3 (format), 4 (resource cap), 1 (failure).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .bounds import bound_report, corpus_entropy_report
from .counting import (
    MemoCapacityError,
    count_dfs,
    count_frontier_dp,
    enumerate_tilings,
    is_tileable,
)
from .oracle import oracle_count
from .region import (
    Region,
    RegionFormatError,
    gen_aztec,
    gen_random_tileable,
    gen_rectangle,
    level_profile,
    parse_region,
    serialize_region,
)
from .render import render_svg
from .tiling import (
    Tiling,
    TilingFormatError,
    compute_tau,
    encode_roots,
    parse_tiling,
    serialize_roots,
    serialize_tiling,
)


class UsageError(Exception):
    pass


class CommandError(Exception):
    def __init__(self, code: int, error: str, detail: str):
        super().__init__(detail)
        self.code = code
        self.error = error
        self.detail = detail


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # route argparse failures through JSON output
        raise UsageError(message)


def _load_region(path: str) -> Region:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CommandError(3, "io", f"cannot read {path}: {exc}") from exc
    return parse_region(text)


def _entropy(count: int, area: int, n: int) -> float | None:
    if count < 1:
        return None
    return math.log2(count) * n / area


def cmd_count(args) -> int:
    region = _load_region(args.file)
    if args.engine == "dfs":
        result = count_dfs(region, args.n, threads=args.threads)
    elif args.engine == "oracle":
        result = oracle_count(region, args.n)
    else:
        result = count_frontier_dp(region, args.n)
    print(
        json.dumps(
            {
                "region": args.file,
                "n": args.n,
                "area": region.area,
                "tiles": region.area // args.n if region.area % args.n == 0 else None,
                "count": str(result.count),
                "entropy": _entropy(result.count, region.area, args.n),
                "engine": args.engine,
                "nodes": result.nodes_explored,
                "peak_states": result.peak_states,
            }
        )
    )
    return 0


def cmd_enumerate(args) -> int:
    region = _load_region(args.file)
    for i, tiling in enumerate(enumerate_tilings(region, args.n)):
        if args.limit is not None and i >= args.limit:
            break
        block = serialize_roots(encode_roots(tiling)) if args.roots_only else serialize_tiling(tiling)
        print(block)
        print()
    return 0


def cmd_check(args) -> int:
    region = _load_region(args.file)
    if region.area % args.n:
        verdict = {"tileable": False, "reason": "divisibility"}
    elif compute_tau(level_profile(region), args.n) is None:
        verdict = {"tileable": False, "reason": "tau-infeasible"}
    else:
        verdict = {"tileable": is_tileable(region, args.n), "reason": "search"}
    print(json.dumps(verdict))
    return 0


def cmd_bounds(args) -> int:
    region = _load_region(args.file)
    try:
        report = bound_report(
            region, args.n, region_id=args.file, include_count=region.area <= args.count_cap
        )
    except ValueError as exc:
        raise CommandError(1, "bounds-failed", str(exc)) from exc
    print(
        json.dumps(
            {
                "region": report.region_id,
                "n": report.n,
                "area": report.area,
                "tiles": report.tiles,
                "count": None if report.count is None else str(report.count),
                "entropy": report.entropy,
                "level_product_bound": str(report.level_product_bound),
                "power_bound": str(report.power_bound),
                "binomial_bound": str(report.binomial_bound),
                "level_factors": [list(f) for f in report.level_factors],
            }
        )
    )
    return 0


def cmd_gen(args) -> int:
    if args.kind == "rect":
        region = gen_rectangle(args.w, args.h)
    elif args.kind == "aztec":
        region = gen_aztec(args.k)
    else:
        region = gen_random_tileable(args.n, args.tiles, args.seed)
    print(serialize_region(region))
    return 0


def cmd_verify(args) -> int:
    region = _load_region(args.file)
    counts = {
        "dfs": count_dfs(region, args.n).count,
        "dp": count_frontier_dp(region, args.n).count,
        "oracle": oracle_count(region, args.n).count,
    }
    agree = len(set(counts.values())) == 1
    if not agree:
        raise CommandError(
            1,
            "verification-failed",
            "; ".join(f"{k}={v}" for k, v in counts.items()),
        )
    print(
        json.dumps(
            {
                "region": args.file,
                "n": args.n,
                "count": str(counts["dfs"]),
                "engines": {k: str(v) for k, v in counts.items()},
                "agree": True,
            }
        )
    )
    return 0


def cmd_render(args) -> int:
    region = _load_region(args.file)
    tiling = None
    if args.tiling is not None:
        try:
            text = Path(args.tiling).read_text()
        except OSError as exc:
            raise CommandError(3, "io", f"cannot read {args.tiling}: {exc}") from exc
        ribbons = parse_tiling(text)
        tiling = Tiling(region, ribbons)
    try:
        print(render_svg(region, tiling, rotated=args.rotated))
    except ValueError as exc:
        raise CommandError(3, "format", str(exc)) from exc
    return 0


def cmd_report(args) -> int:
    corpus = Path(args.corpus)
    if not corpus.is_dir():
        raise CommandError(3, "io", f"not a directory: {args.corpus}")
    files = sorted(corpus.glob("*.rgn"))
    if not files:
        raise CommandError(3, "io", f"no .rgn files in {args.corpus}")
    regions = [parse_region(f.read_text()) for f in files]
    try:
        report = corpus_entropy_report(regions, args.n, ids=[f.name for f in files])
    except ValueError as exc:
        raise CommandError(1, "untileable-region", str(exc)) from exc
    for entry in report["regions"]:
        entry["count"] = str(entry["count"])
    print(json.dumps(report))
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="ribbonlab", description="Exact n-ribbon tiling toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_n(p):
        p.add_argument("--n", type=int, required=True, help="ribbon length (>= 2)")

    p = sub.add_parser("count", help="count tilings of a region file")
    p.add_argument("file")
    add_n(p)
    p.add_argument("--engine", choices=("dfs", "dp", "oracle"), default="dp")
    p.add_argument("--threads", type=int, default=1, help="worker threads (dfs engine)")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="stream tilings in lexicographic root order")
    p.add_argument("file")
    add_n(p)
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--roots-only", action="store_true")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("check", help="decide tileability with a reason")
    p.add_argument("file")
    add_n(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("bounds", help="entropy and count bounds as JSON")
    p.add_argument("file")
    add_n(p)
    p.add_argument("--count-cap", type=int, default=64, help="skip exact count above this area")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("gen", help="emit a generated region file")
    gsub = p.add_subparsers(dest="kind", required=True)
    g = gsub.add_parser("rect")
    g.add_argument("--w", type=int, required=True)
    g.add_argument("--h", type=int, required=True)
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("aztec")
    g.add_argument("--k", type=int, required=True)
    g.set_defaults(func=cmd_gen)
    g = gsub.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--tiles", type=int, required=True)
    g.add_argument("--seed", type=int, required=True)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run dfs, dp and oracle engines; fail on mismatch")
    p.add_argument("file")
    add_n(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("render", help="emit SVG for a region, optionally with a tiling")
    p.add_argument("file")
    p.add_argument("--tiling", default=None)
    p.add_argument("--rotated", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("report", help="corpus entropy report as JSON")
    p.add_argument("--corpus", required=True)
    add_n(p)
    p.set_defaults(func=cmd_report)

    return parser


def _fail(error: str, detail: str, code: int) -> int:
    print(json.dumps({"error": error, "detail": detail}), file=sys.stderr)
    return code


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except (RegionFormatError, TilingFormatError) as exc:
        return _fail("format", str(exc), 3)
    except MemoCapacityError as exc:
        return _fail("resource-cap", str(exc), 4)
    except CommandError as exc:
        return _fail(exc.error, exc.detail, exc.code)
    except ValueError as exc:
        return _fail("invalid-input", str(exc), 2)


if __name__ == "__main__":
    sys.exit(main())
