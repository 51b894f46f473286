"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import cache, checks, export
from .hamilton import HamiltonError, LiftError, assemble_hamilton_odd, lift_hamilton_middle
from .oddgraph import CapExceeded, build_middle, build_odd, check_cap, max_k
from .twofactor import lift_two_factor, uniform_two_factor
from .validate import check_file, check_hamilton, check_two_factor

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
FORMATS = ("text", "json", "dot")


@dataclass
class Config:
    max_k: int
    cache_dir: Path | None
    use_cache: bool
    output_format: str = "text"
    jobs: int = 1

    def __post_init__(self) -> None:
        if self.max_k < 1:
            raise ValueError("the cap must be at least 1")
        if self.output_format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}")
        if self.jobs < 1:
            raise ValueError("jobs must be at least 1")


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value < 1:
        raise argparse.ArgumentTypeError(f"{value} is not positive")
    return value


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# -- commands ---------------------------------------------------------------------

def cmd_trgs(args, cfg: Config) -> int:
    check_cap(args.k, cfg.max_k)
    table, _ = cache.load_rows(args.k, cfg.cache_dir, cfg.use_cache)
    rows = export.trgs_rows(args.k, table)
    if args.json:
        _emit(export.dumps(export.trgs_document(args.k, rows)), args.out)
    else:
        _emit(export.trgs_text(rows), args.out)
    return EXIT_OK


def cmd_graph(args, cfg: Config) -> int:
    build = build_odd if args.kind == "odd" else build_middle
    graph = build(args.k, cfg.max_k)
    arcs = export.graph_arcs(args.kind, args.k, cfg.max_k) if args.arcs else None
    doc = export.graph_document(args.kind, args.k, graph, arcs)
    if cfg.output_format == "json":
        _emit(export.dumps(doc), args.out)
    elif cfg.output_format == "dot":
        _emit(export.graph_dot(doc), args.out)
    else:
        _emit(export.graph_text(doc), args.out)
    return EXIT_OK


def _report(verdict, label: str) -> int:
    if verdict.ok:
        print(f"{label}: valid", file=sys.stderr)
        return EXIT_OK
    for p in verdict.problems:
        print(f"{label}: {p}", file=sys.stderr)
    return EXIT_FAIL


def cmd_two_factor(args, cfg: Config) -> int:
    if args.lift:
        factor, kind = lift_two_factor(args.k, cfg.max_k), "middle"
    else:
        factor, kind = uniform_two_factor(args.k, cfg.max_k), "odd"
    text = export.dumps(export.two_factor_document(factor, kind))
    # validate what is written, not the in-memory object
    status = _report(check_two_factor(json.loads(text)), f"two-factor {kind} k={args.k}")
    _emit(text, args.out)
    return status


def cmd_hamilton(args, cfg: Config) -> int:
    if args.k < 3:
        raise UsageError("hamilton needs k >= 3")
    check_cap(args.k, cfg.max_k)
    try:
        if args.kind == "odd":
            cert = assemble_hamilton_odd(args.k, cfg.max_k)
        else:
            cert = lift_hamilton_middle(args.k, cfg.max_k)
    except LiftError as exc:
        d = exc.diagnostic
        diag = {"k": d.k, "label": d.label, "reason": d.reason, "cycle_lengths": d.cycle_lengths}
        print(json.dumps({"error": "lift split", "diagnostic": diag}), file=sys.stderr)
        return EXIT_FAIL
    except HamiltonError as exc:
        print(f"hamilton: {exc}", file=sys.stderr)
        return EXIT_FAIL
    text = export.dumps(export.hamilton_document(cert))
    status = _report(check_hamilton(json.loads(text)), f"hamilton {args.kind} k={args.k}")
    _emit(text, args.out)
    return status


def cmd_validate(args, cfg: Config) -> int:
    try:
        verdict = check_file(args.file)
    except (OSError, ValueError) as exc:
        raise UsageError(f"cannot read {args.file}: {exc}")
    return _report(verdict, args.file)


def cmd_verify(args, cfg: Config) -> int:
    print(f"suite {args.suite}, max_k {args.max_k if args.max_k else 'stated'}, seed {args.seed}")
    report = checks.run_suite(args.suite, args.max_k, args.seed, cfg.jobs)
    for r in report.results:
        print(checks.format_result(r))
    passed = sum(r.ok for r in report.results)
    print(f"{passed}/{len(report.results)} checks passed")
    if args.report:
        Path(args.report).write_text(export.dumps(report.to_json()))
    return EXIT_OK if report.ok else EXIT_FAIL


# -- parser -----------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse exits with 2 already; keep the message short
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="dycknest", description="Dyck nests, odd graphs and their Hamilton cycles.")
    p.add_argument("--cap", type=_positive, default=None,
                   help="largest k for graph constructions (default from DYCKNEST_MAX_K or 9)")
    p.add_argument("--cache-dir", default=None, help="nest-table cache directory (default DYCKNEST_CACHE_DIR)")
    p.add_argument("--no-cache", action="store_true", help="neither read nor write the cache")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    t = sub.add_parser("trgs", help="list the tight restricted-growth strings below C_k")
    t.add_argument("--k", type=_positive, required=True)
    t.add_argument("--json", action="store_true")
    t.add_argument("--out")
    t.set_defaults(func=cmd_trgs)

    g = sub.add_parser("graph", help="export O_k or M_k")
    g.add_argument("kind", choices=("odd", "middle"))
    g.add_argument("--k", type=_positive, required=True)
    g.add_argument("--format", choices=FORMATS, default="text")
    g.add_argument("--arcs", action="store_true", help="add the colored arcs")
    g.add_argument("--out")
    g.set_defaults(func=cmd_graph)

    f = sub.add_parser("two-factor", help="emit the uniform 2-factor certificate")
    f.add_argument("--k", type=_positive, required=True)
    f.add_argument("--lift", action="store_true", help="lift to M_k")
    f.add_argument("--out")
    f.set_defaults(func=cmd_two_factor)

    h = sub.add_parser("hamilton", help="emit a Hamilton cycle certificate")
    h.add_argument("kind", choices=("odd", "middle"))
    h.add_argument("--k", type=_positive, required=True)
    h.add_argument("--out")
    h.set_defaults(func=cmd_hamilton)

    v = sub.add_parser("validate", help="check a certificate file independently")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    r = sub.add_parser("verify", help="run the verification suites")
    r.add_argument("--suite", choices=checks.SUITES, default="all")
    r.add_argument("--max-k", type=_positive, default=None, help="lower the k bounds of the exhaustive checks")
    r.add_argument("--seed", type=int, default=checks.DEFAULT_SEED)
    r.add_argument("--jobs", type=_positive, default=1)
    r.add_argument("--report", help="write the report as JSON")
    r.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = Config(
            max_k=args.cap if args.cap is not None else max_k(),
            cache_dir=Path(args.cache_dir) if args.cache_dir else None,
            use_cache=not args.no_cache,
            output_format=getattr(args, "format", "text"),
            jobs=getattr(args, "jobs", 1),
        )
        return args.func(args, cfg)
    except CapExceeded as exc:
        print(f"dycknest: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (UsageError, ValueError) as exc:
        print(f"dycknest: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
