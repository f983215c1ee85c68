"""Command line: ``monofib verify | search | examples | bounds``.

Exit codes: 0 success / valid, 1 mathematically invalid input,
2 usage, parse or configuration error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import corpus
from .config import ConfigError, load_search_config
from .cover import MonodromyPair, bounds_report
from .perm import CycleSyntaxError
from .report import bounds_record, render_bounds, render_verify, verify_pair, verify_record, write_certificates
from .search import InfeasibleConfigError, run_search

EXIT_OK, EXIT_INVALID, EXIT_USAGE = 0, 1, 2


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        pair = MonodromyPair.parse(args.alpha, args.beta, args.degree)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    inv, rep = verify_pair(pair, args.stable)
    if args.json:
        _emit(verify_record(pair, inv, rep))
    else:
        print(render_verify(pair, inv, rep))
    return EXIT_OK if inv.valid else EXIT_INVALID


def _example_record(outcome: corpus.ExampleOutcome) -> dict:
    rec = outcome.record
    out = {
        "name": rec.name,
        "degree": rec.degree,
        "alpha": rec.alpha_text,
        "beta": rec.beta_text,
        "notes": rec.notes,
        "matches_expected": outcome.matches,
        "mismatches": [{"field": f, "expected": e, "actual": a} for f, e, a in outcome.mismatches],
        "checks": outcome.checks,
    }
    if outcome.error:
        out["error"] = outcome.error
    if outcome.pair is not None:
        out["report"] = verify_record(outcome.pair, outcome.invariants, outcome.bounds)
    return out


def _render_example(outcome: corpus.ExampleOutcome) -> str:
    rec = outcome.record
    lines = [f"== example {rec.name} (degree {rec.degree})"]
    if rec.notes:
        lines.append(f"note: {rec.notes}")
    if outcome.error:
        lines.append(f"alpha {rec.alpha_text}  beta {rec.beta_text}")
        lines.append(f"INVALID: {outcome.error}")
    else:
        lines.append(render_verify(outcome.pair, outcome.invariants, outcome.bounds))
    for name, ok in outcome.checks.items():
        lines.append(f"check {name}: {'ok' if ok else 'FAILED'}")
    for f, e, a in outcome.mismatches:
        lines.append(f"MISMATCH {f}: expected {e}, got {a}")
    lines.append("matches expected: " + ("yes" if outcome.matches else "NO"))
    return "\n".join(lines)


def cmd_examples(args: argparse.Namespace) -> int:
    names = args.names or ["1", "2", "3@2"]
    try:
        records = [corpus.get_example(n) for n in names]
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    outcomes = [corpus.run_example(r, args.stable) for r in records]
    if args.json:
        _emit([_example_record(o) for o in outcomes])
    else:
        print("\n\n".join(_render_example(o) for o in outcomes))
    if not all(o.matches for o in outcomes):
        return EXIT_INVALID
    # the as-printed example matches its expectation of being invalid
    return EXIT_OK if all(o.valid for o in outcomes) else EXIT_INVALID


def cmd_search(args: argparse.Namespace) -> int:
    try:
        cfg = load_search_config(args.config)
    except (OSError, ConfigError, InfeasibleConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_search(cfg)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            write_certificates(result.certificates, fh)
        summary_stream = sys.stdout
    else:
        write_certificates(result.certificates, sys.stdout)
        summary_stream = sys.stderr
    s = result.stats
    print(f"degree {cfg.degree}, k in {list(cfg.transpositions)}, dedup {cfg.dedup}, workers {cfg.workers}",
          file=summary_stream)
    print(f"pairs scanned {s.pairs_scanned}, pruned by commutator {s.pruned}, "
          f"rejected by group {s.rejected_by_group}, survivors {s.survivors}", file=summary_stream)
    print(f"classes found {s.classes}, written {len(result.certificates)}, "
          f"wall time {s.wall_time:.2f}s", file=summary_stream)
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace) -> int:
    if args.g < 2:
        print("error: fibre genus must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    rep = bounds_report(args.g, args.chi, args.k_squared, args.c2, args.stable)
    if args.json:
        _emit(bounds_record(rep))
    else:
        print(render_bounds(rep))
    return EXIT_OK if rep.all_passed else EXIT_INVALID


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monofib",
        description="Monodromy pairs for primitive one-branch-point covers of elliptic curves.")
    sub = parser.add_subparsers(dest="command", required=True)

    def stable_flags(p):
        p.add_argument("--stable", dest="stable", action="store_true", default=True,
                       help="treat the fibration as stable (default)")
        p.add_argument("--semistable", dest="stable", action="store_false",
                       help="only check the semistable bounds")
        p.add_argument("--json", action="store_true", help="print JSON instead of text")

    p = sub.add_parser("verify", help="analyze one pair (alpha, beta)")
    p.add_argument("alpha", help='cycle notation, e.g. "(1 2 3)"')
    p.add_argument("beta", help="second generator, same notation")
    p.add_argument("degree", type=int, help="number of sheets d")
    stable_flags(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="reproduce the built-in examples")
    p.add_argument("names", nargs="*", metavar="NAME", help="1, 2, 2-as-printed or 3@n (default: 1 2 3@2)")
    stable_flags(p)
    p.set_defaults(func=cmd_examples)

    p = sub.add_parser("search", help="exhaustive search from a config file")
    p.add_argument("config", help="key = value file (degree, transpositions, ...)")
    p.add_argument("-o", "--output", help="JSON-lines output file (default: stdout)")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="check the single-singular-fibre inequalities")
    p.add_argument("g", type=int, help="fibre genus")
    p.add_argument("chi", type=int, help="holomorphic Euler characteristic")
    p.add_argument("k_squared", type=int, help="K^2")
    p.add_argument("c2", type=int, help="topological Euler number")
    stable_flags(p)
    p.set_defaults(func=cmd_bounds)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
