"""Command-line front end.

Subcommands: gen, cover, color, audit, verify, stats, bench, render.
Exit codes: 0 success, 1 usage, 2 parse failure, 3 precondition violation
(an independent triple), 4 internal structure/audit failure.

Oracle limits can be overridden with UDG_CHROMA_LIMITS="<alpha_omega>,<chroma>".
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .core import instance_graph, stability_witness
from .cover import cover_from_text, cover_to_text, cover_three_cliques, trace_from_text, trace_to_text
from .errors import (AuditFailure, DuplicatePoint, ParseError,
                     StabilityViolated, StructureViolation, UdgError)
from .instances import (gen_circulant, gen_cs, gen_two_cluster, read_instance,
                        write_graph, write_instance)
from .matching import (audit_bound, color_via_complement_matching,
                       coloring_from_text, coloring_to_text,
                       sweep_greedy_color)
from .oracles import (DEFAULT_LIMITS, OracleLimits, brute_chi, brute_omega,
                      brute_stats, verify_cover, verify_coloring)
from .render import render_svg

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PARSE = 2
EXIT_PRECONDITION = 3
EXIT_INTERNAL = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse defaults to exit code 2
        raise _UsageError(message)


def _limits_from_env() -> OracleLimits:
    raw = os.environ.get("UDG_CHROMA_LIMITS")
    if not raw:
        return DEFAULT_LIMITS
    try:
        ao, ch = (int(tok) for tok in raw.split(","))
    except ValueError:
        raise _UsageError(
            f"UDG_CHROMA_LIMITS must be '<alpha_omega>,<chroma>', got {raw!r}") from None
    return OracleLimits(alpha_omega_max=ao, chroma_max=ch)


def _write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text, newline="\n")


def _load_any_graph(path: str):
    """Instance or abstract graph file, sniffed by the header keyword."""
    text = Path(path).read_text()
    head = text.split(None, 1)[0] if text.split() else ""
    if head == "udg":
        from .instances import instance_from_text
        inst = instance_from_text(text)
        return instance_graph(inst), inst
    if head == "graph":
        from .instances import graph_from_text
        return graph_from_text(text), None
    raise ParseError(1, f"unknown artifact header {head!r} in {path}")


def _cmd_gen(args) -> int:
    if args.family == "circulant":
        if args.n is None or args.k is None:
            raise _UsageError("circulant needs --n and --k")
        inst = gen_circulant(args.n, args.k)
        write_instance(args.output, inst)
    elif args.family == "cs":
        if args.k is None:
            raise _UsageError("cs needs --k")
        write_graph(args.output, gen_cs(args.k))
    elif args.family == "two_cluster":
        if args.n is None:
            raise _UsageError("two_cluster needs --n")
        inst = gen_two_cluster(args.n, seed=args.seed, separation=args.separation)
        write_instance(args.output, inst)
    else:  # pragma: no cover - argparse restricts choices
        raise _UsageError(f"unknown family {args.family}")
    return EXIT_OK


def _cmd_cover(args) -> int:
    inst = read_instance(args.input)
    cover, trace = cover_three_cliques(inst)
    _write_text(args.output, cover_to_text(cover, inst.id))
    if args.trace:
        if trace is None:
            print("note: no disk-case trace for this instance", file=sys.stderr)
        else:
            _write_text(args.trace, trace_to_text(trace, inst.id))
    bad = verify_cover(instance_graph(inst), cover)
    if bad is not None:
        print(f"cover verification failed: {bad.message}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_color(args) -> int:
    inst = read_instance(args.input)
    coloring = color_via_complement_matching(inst)
    if args.output:
        _write_text(args.output, coloring_to_text(coloring, inst.id))
    limits = _limits_from_env()
    if inst.n <= limits.alpha_omega_max:
        omega = brute_omega(instance_graph(inst), limits.should_cancel)
        bound = (3 * omega) // 2
        print(f"colors={coloring.num_colors} omega={omega} bound={bound}")
    else:
        print(f"colors={coloring.num_colors} omega=?")
    return EXIT_OK


def _cmd_audit(args) -> int:
    inst = read_instance(args.input)
    report = audit_bound(inst)
    text = report.to_text()
    if args.output:
        _write_text(args.output, text)
    print(text, end="")
    return EXIT_OK if report.all_pass else EXIT_INTERNAL


def _cmd_verify(args) -> int:
    if not args.cover and not args.coloring:
        raise _UsageError("verify needs --cover and/or --coloring")
    inst = read_instance(args.instance)
    g = instance_graph(inst)
    failures = 0
    if args.cover:
        instance_id, cover = cover_from_text(Path(args.cover).read_text())
        if instance_id != inst.id:
            print(f"cover names instance {instance_id!r}, expected {inst.id!r}",
                  file=sys.stderr)
            failures += 1
        bad = verify_cover(g, cover)
        if bad is None:
            print(f"cover {args.cover}: ok")
        else:
            print(f"cover {args.cover}: {bad.message}")
            failures += 1
    if args.coloring:
        instance_id, coloring = coloring_from_text(Path(args.coloring).read_text())
        if instance_id != inst.id:
            print(f"coloring names instance {instance_id!r}, expected {inst.id!r}",
                  file=sys.stderr)
            failures += 1
        bad = verify_coloring(g, coloring)
        if bad is None:
            print(f"coloring {args.coloring}: ok")
        else:
            print(f"coloring {args.coloring}: {bad.message}")
            failures += 1
    return EXIT_OK if failures == 0 else EXIT_INTERNAL


def _cmd_stats(args) -> int:
    g, _ = _load_any_graph(args.input)
    stats = brute_stats(g, _limits_from_env())
    chi = "?" if stats.chi is None else stats.chi
    ccn = "?" if stats.clique_cover_number is None else stats.clique_cover_number
    print(f"alpha={stats.alpha} omega={stats.omega} chi={chi} "
          f"clique_cover_number={ccn}")
    return EXIT_OK


def _cmd_bench(args) -> int:
    limits = _limits_from_env()
    rows = []
    for path in sorted(Path(args.corpus).glob("*.udg")):
        inst = read_instance(path)
        g = instance_graph(inst)
        greedy = sweep_greedy_color(inst).num_colors
        if stability_witness(g) is None:
            matching = color_via_complement_matching(inst).num_colors
        else:
            matching = None
        omega = brute_omega(g, limits.should_cancel) if inst.n <= limits.alpha_omega_max else None
        chi = brute_chi(g, limits.should_cancel) if inst.n <= limits.chroma_max else None
        bound = (3 * omega) // 2 if omega is not None else None
        rows.append((inst.id, inst.n, omega, greedy, matching, chi, bound))

    def show(v) -> str:
        return "?" if v is None else str(v)

    lines = ["instance\tn\tomega\tgreedy\tmatching\tchi\tbound"]
    for row in rows:
        lines.append("\t".join(show(v) for v in row))
    table = "\n".join(lines) + "\n"
    if args.output:
        _write_text(args.output, table)
    print(table, end="")
    return EXIT_OK


def _cmd_render(args) -> int:
    inst = read_instance(args.input)
    coloring = None
    if args.coloring:
        _, coloring = coloring_from_text(Path(args.coloring).read_text())
        if len(coloring.assignment) != inst.n:
            raise ParseError(1, "coloring does not match instance size")
    trace = None
    if args.trace:
        _, trace = trace_from_text(Path(args.trace).read_text())
    _write_text(args.output, render_svg(inst, coloring, trace))
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(prog="udgcolor", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate an instance or abstract graph file")
    p.add_argument("--family", required=True, choices=["circulant", "cs", "two_cluster"])
    p.add_argument("--n", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--separation", default="1")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("cover", help="three-clique cover of an instance")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--trace")
    p.set_defaults(func=_cmd_cover)

    p = sub.add_parser("color", help="matching-based coloring")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_color)

    p = sub.add_parser("audit", help="inequality audit of the coloring bound")
    p.add_argument("input")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_audit)

    p = sub.add_parser("verify", help="re-verify emitted artifacts")
    p.add_argument("--instance", required=True)
    p.add_argument("--cover")
    p.add_argument("--coloring")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("stats", help="exact alpha/omega/chi within limits")
    p.add_argument("input")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("bench", help="greedy vs matching vs exact chi table")
    p.add_argument("corpus")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_bench)

    p = sub.add_parser("render", help="SVG drawing of an instance")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--coloring")
    p.add_argument("--trace")
    p.set_defaults(func=_cmd_render)

    return parser


def run(argv: list[str]) -> int:
    """Execute one CLI invocation and return its exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ParseError, DuplicatePoint, FileNotFoundError) as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except StabilityViolated as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (StructureViolation, AuditFailure) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except UdgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
