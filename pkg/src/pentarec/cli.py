"""Command-line interface.

Exit codes: 0 accept / valid / written, 1 reject / invalid, 2 input or usage error.
"""

from __future__ import annotations

import argparse
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .assemble import deserialize, serialize
from .errors import ParseError
from .generate import (
    MUTATION_KINDS,
    TARGETED_KINDS,
    GlueConflict,
    RetryBudgetExceeded,
    SaturationConflict,
    ValidationFailure,
    dodecahedron,
    import_pentangulation,
    mutate,
    random_pentangulation,
    saturate,
)
from .io import FORMATS, read_graph, write_graph
from .recognize import recognize
from .verify import Planarization, verify_optimal

EXIT_OK, EXIT_REJECT, EXIT_ERROR = 0, 1, 2
SEED_VARIABLE = "PENTAREC_SEED"


def _default_seed() -> int:
    raw = os.environ.get(SEED_VARIABLE, "0")
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"error: {SEED_VARIABLE} must be an integer, got {raw!r}") from None


def _error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return EXIT_ERROR


def _recognize_one(path: str, fmt: str, emit: str | None, stats: bool, diagnostic: bool) -> tuple[int, list[str], list[str]]:
    """Return (exit code, stdout lines, stderr lines) for one input file."""
    try:
        g = read_graph(path, fmt)
    except (OSError, ParseError) as exc:
        return EXIT_ERROR, [], [f"error: {path}: {exc}"]
    result = recognize(g, diagnostic=diagnostic)
    out = [result.line()]
    err = []
    if diagnostic:
        err.extend(f"diagnostic {line}" for line in result.diagnostics)
    if stats:
        s = result.stats
        keys = ("n", "m", "planar", "crossing", "crossbat", "faces", "triplets", "facial")
        fields = [f"{k}={s[k]}" for k in keys if k in s]
        fields.append(f"seconds={s['seconds']:.6f}")
        out.append("stats " + " ".join(fields))
    if result.accepted and emit:
        try:
            Path(emit).write_text(serialize(result.scheme))  # type: ignore[arg-type]
        except OSError as exc:
            return EXIT_ERROR, out, err + [f"error: {emit}: {exc}"]
    return (EXIT_OK if result.accepted else EXIT_REJECT), out, err


def _batch_task(args: tuple) -> tuple[int, list[str], list[str]]:
    return _recognize_one(*args)


def cmd_recognize(ns: argparse.Namespace) -> int:
    if not ns.batch:
        if len(ns.inputs) != 1:
            return _error("recognize takes one input unless --batch is given")
        code, out, err = _recognize_one(ns.inputs[0], ns.format, ns.emit_rotation, ns.stats, ns.diagnostic)
        for line in out:
            print(line)
        for line in err:
            print(line, file=sys.stderr)
        return code
    if ns.emit_rotation:
        return _error("--emit-rotation names a single file; use --emit-dir with --batch")
    tasks = []
    for path in ns.inputs:
        emit = str(Path(ns.emit_dir) / (Path(path).stem + ".json")) if ns.emit_dir else None
        tasks.append((path, ns.format, emit, ns.stats, ns.diagnostic))
    if ns.jobs == 1:
        results = map(_batch_task, tasks)
    else:
        pool = ProcessPoolExecutor(max_workers=ns.jobs)
        results = pool.map(_batch_task, tasks)
    worst = EXIT_OK
    for path, (code, out, err) in zip(ns.inputs, results):
        for line in out:
            print(f"{path}: {line}")
        for line in err:
            print(line, file=sys.stderr)
        worst = max(worst, code)
    if ns.jobs != 1:
        pool.shutdown()
    return worst


def cmd_verify(ns: argparse.Namespace) -> int:
    try:
        g = read_graph(ns.graph, ns.format)
        scheme = deserialize(Path(ns.scheme).read_bytes())
    except (OSError, ParseError) as exc:
        return _error(str(exc))
    verdict = verify_optimal(g, scheme)
    print(str(verdict))
    return EXIT_OK if verdict else EXIT_REJECT


def _write_instance(ns: argparse.Namespace, g, scheme) -> int:
    try:
        if ns.output:
            write_graph(g, ns.output, ns.format)
        else:
            from .io import format_edgelist, format_graph6

            if ns.format == "graph6":
                sys.stdout.write(format_graph6(g).decode("ascii"))
            else:
                sys.stdout.write(format_edgelist(g))
        if getattr(ns, "reference", None) and scheme is not None:
            Path(ns.reference).write_text(serialize(scheme))
    except OSError as exc:
        return _error(str(exc))
    return EXIT_OK


def cmd_generate(ns: argparse.Namespace) -> int:
    seed = ns.seed if getattr(ns, "seed", None) is not None else _default_seed()
    try:
        if ns.kind == "dodeca":
            g, scheme = saturate(dodecahedron())
        elif ns.kind == "glue":
            g, scheme = saturate(random_pentangulation(ns.k, seed))
        elif ns.kind == "saturate":
            g, scheme = saturate(import_pentangulation(Path(ns.input).read_bytes()))
        else:
            g = mutate(read_graph(ns.input, ns.input_format), ns.mutation, seed)
            scheme = None
    except (OSError, ParseError, ValidationFailure, SaturationConflict, GlueConflict, RetryBudgetExceeded,
            ValueError) as exc:
        return _error(str(exc))
    return _write_instance(ns, g, scheme)


def cmd_render(ns: argparse.Namespace) -> int:
    try:
        g = read_graph(ns.graph, ns.format)
        scheme = deserialize(Path(ns.scheme).read_bytes())
    except (OSError, ParseError) as exc:
        return _error(str(exc))
    verdict = verify_optimal(g, scheme)
    if not verdict:
        print(str(verdict))
        return EXIT_REJECT
    from .render import render_svg

    try:
        Path(ns.svg).write_text(render_svg(scheme))
    except OSError as exc:
        return _error(str(exc))
    print(f"wrote {ns.svg} ({Planarization(scheme).node_count} nodes)")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="pentarec", description="Recognize optimal 2-planar graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("recognize", help="decide optimal 2-planarity and emit a certificate")
    p.add_argument("inputs", nargs="+", metavar="INPUT")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.add_argument("--emit-rotation", metavar="PATH")
    p.add_argument("--stats", action="store_true")
    p.add_argument("--diagnostic", action="store_true", help="continue past failed prechecks")
    p.add_argument("--batch", action="store_true", help="process several inputs as independent tasks")
    p.add_argument("--emit-dir", metavar="DIR", help="with --batch, write INPUT-stem.json certificates here")
    p.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("verify", help="check a rotation-scheme certificate")
    p.add_argument("graph")
    p.add_argument("scheme")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a positive or mutated instance")
    gen = p.add_subparsers(dest="kind", required=True)

    def common(q: argparse.ArgumentParser) -> None:
        q.add_argument("-o", "--output", metavar="PATH", help="graph file (default: stdout)")
        q.add_argument("--format", choices=FORMATS, default="edgelist")

    q = gen.add_parser("dodeca", help="saturated dodecahedron")
    common(q)
    q.add_argument("--reference", metavar="PATH", help="also write the reference certificate")
    q = gen.add_parser("glue", help="saturation of k randomly glued dodecahedra")
    common(q)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_VARIABLE} or 0")
    q.add_argument("--reference", metavar="PATH")
    q = gen.add_parser("saturate", help="saturation of an imported pentangulation")
    common(q)
    q.add_argument("input", help="planar_code or rotation-list file")
    q.add_argument("--reference", metavar="PATH")
    q = gen.add_parser("mutate", help="seeded mutation of a graph")
    common(q)
    q.add_argument("input")
    q.add_argument("--input-format", choices=FORMATS, default="edgelist")
    q.add_argument("--kind", dest="mutation", choices=MUTATION_KINDS + TARGETED_KINDS, required=True)
    q.add_argument("--seed", type=int, default=None, help=f"default: ${SEED_VARIABLE} or 0")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("render", help="draw a certified graph as SVG")
    p.add_argument("graph")
    p.add_argument("scheme")
    p.add_argument("--svg", required=True, metavar="OUT")
    p.add_argument("--format", choices=FORMATS, default="edgelist")
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    return ns.func(ns)


if __name__ == "__main__":
    sys.exit(main())
