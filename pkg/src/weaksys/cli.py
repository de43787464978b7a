"""Command-line front end.

Subcommands: check, cover, convexity, thicken, davis, nodelta, chi,
bigons, flats, contraction, boundary, corpus.  Global flags ``--budget``,
``--threads``, ``--seed`` and ``--format`` may also be set through the
environment variables WEAKSYS_BUDGET, WEAKSYS_THREADS, WEAKSYS_SEED and
WEAKSYS_FORMAT.

Exit codes: 0 the checked condition holds (or output was produced),
1 the condition fails (a certificate is reported), 2 the budget ran out
before a verdict, 3 usage or input error.

Reports are emitted as ``key: value`` lines (or JSON with
``--format structured``) and are deterministic for a fixed input,
command and budget, except for the wall-time field.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import __version__
from .conditions import (
    Verdict,
    check_locally_k_large,
    check_sd2_star,
    check_sd2_star_k,
    check_sd2_star_links,
    check_simple_descent,
    check_weak_descent,
    is_weakly_bridged,
    is_weakly_systolic,
    render_certificate,
)
from .core import FlagComplex, ball, span
from .errors import Budget, BudgetExceeded, InputError, PreconditionError, \
    WeaksysError
from . import io as wio
from . import corpus as wcorpus

EXIT_HOLDS = 0
EXIT_FAILS = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3


class Report:
    """Ordered key-value report, serializable as text or JSON."""

    def __init__(self):
        self.items: list[tuple[str, object]] = []

    def add(self, key: str, value) -> None:
        self.items.append((key, value))

    def emit(self, fmt: str) -> str:
        if fmt == "structured":
            return json.dumps(dict(self.items), default=str, indent=2)
        return "\n".join(f"{k}: {v}" for k, v in self.items)


def _env_default(name: str, fallback):
    raw = os.environ.get(f"WEAKSYS_{name}")
    return raw if raw is not None else fallback


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="weaksys",
        description="checkers and constructions for flag complexes with "
                    "combinatorial curvature conditions")
    p.add_argument("--budget", type=int,
                   default=int(_env_default("BUDGET", 200_000_000)),
                   help="search-node budget (exit 2 when exceeded)")
    p.add_argument("--threads", type=int,
                   default=int(_env_default("THREADS", 1)),
                   help="worker threads for per-vertex checks")
    p.add_argument("--seed", type=int, default=int(_env_default("SEED", 0)),
                   help="seed recorded in the report (sampling commands)")
    p.add_argument("--format", choices=("text", "structured"),
                   default=str(_env_default("FORMAT", "text")))
    sub = p.add_subparsers(dest="command", required=True)

    # the four global flags are also accepted after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=argparse.SUPPRESS)
    common.add_argument("--threads", type=int, default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    common.add_argument("--format", choices=("text", "structured"),
                        default=argparse.SUPPRESS)

    def add_parser(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    def add_input(sp):
        sp.add_argument("input", help="complex file (v/e lines)")

    sp = add_parser("check", help="decide a named condition")
    add_input(sp)
    sp.add_argument("--property", required=True, dest="prop",
                    choices=("flag", "sd2star", "sd2star-k", "loc-k-large",
                             "sdn", "sdn-tilde", "weakly-systolic",
                             "weakly-bridged", "sd2star-links"))
    sp.add_argument("--k", type=int, default=6)
    sp.add_argument("--base", help="base vertex label (sdn / sdn-tilde)")
    sp.add_argument("--n", type=int, help="descent radius (default: ecc)")

    sp = add_parser("cover", help="build a truncated universal cover")
    add_input(sp)
    sp.add_argument("--base", required=True)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--out", help="write the cover (with m lines) here")

    sp = add_parser("convexity", help="convexity checks for a subcomplex")
    add_input(sp)
    sp.add_argument("--subcomplex", required=True,
                    help="file listing vertex labels (whitespace separated)")
    sp.add_argument("--mode", required=True,
                    choices=("convex", "3convex", "local3convex",
                             "neighborhood"))
    sp.add_argument("--nmax", type=int, default=6)

    sp = add_parser("thicken", help="thicken a cell complex")
    add_input(sp)
    sp.add_argument("--out")

    sp = add_parser("davis", help="Davis-complex ball from a nerve graph")
    sp.add_argument("--nerve", required=True)
    sp.add_argument("--radius", type=int, required=True)
    sp.add_argument("--out")

    sp = add_parser("nodelta", help="triple intersection condition")
    add_input(sp)
    sp.add_argument("--all-cells", action="store_true")

    sp = add_parser("chi", help="Euler characteristic")
    add_input(sp)

    sp = add_parser("bigons", help="thin-bigon scan")
    add_input(sp)
    sp.add_argument("--maxdist", type=int, required=True)

    sp = add_parser("flats", help="flat-triangle search")
    add_input(sp)
    sp.add_argument("--side", type=int, required=True)

    sp = add_parser("contraction", help="projection nesting around a vertex")
    add_input(sp)
    sp.add_argument("--base", required=True)

    sp = add_parser("boundary", help="export the sphere projection system")
    add_input(sp)
    sp.add_argument("--base", required=True)
    sp.add_argument("--levels", type=int, required=True)
    sp.add_argument("--out")

    sp = add_parser("corpus", help="generate a named example complex")
    sp.add_argument("name", nargs="?")
    sp.add_argument("--param", action="append", default=[],
                    help="generator parameter key=value (repeatable)")
    sp.add_argument("--out")
    sp.add_argument("--list", action="store_true")
    return p


def _load(path: str) -> tuple[str, FlagComplex]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    return text, wio.parse_complex(text)


def _load_cells(path: str):
    from .thickening import CellComplex
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from None
    g = wio.parse_graph(text)
    cells = [[g.vertex_by_label(l) for l in cell]
             for cell in wio.parse_cells(text)]
    if not cells:
        raise InputError("cell complex file declares no c lines")
    return text, CellComplex(g, cells)


def _finish(report: Report, verdict: Verdict | None, X, args, t0) -> int:
    report.add("wall-time-ms", round(1000 * (time.monotonic() - t0), 3))
    code = EXIT_HOLDS
    if verdict is not None:
        report.add("condition", verdict.condition)
        if verdict.inconclusive:
            report.add("verdict", "inconclusive")
            code = EXIT_INCONCLUSIVE
        else:
            report.add("verdict", "holds" if verdict.holds else "fails")
            code = EXIT_HOLDS if verdict.holds else EXIT_FAILS
        if verdict.certificate is not None and X is not None:
            report.add("certificate",
                       render_certificate(verdict.certificate, X))
        for k in sorted(verdict.stats):
            report.add(f"stats.{k}", verdict.stats[k])
    print(report.emit(args.format))
    return code


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    t0 = time.monotonic()
    report = Report()
    report.add("tool", f"weaksys {__version__}")
    report.add("command", args.command)
    report.add("seed", args.seed)
    budget = Budget(args.budget)
    try:
        return _dispatch(args, report, budget, t0)
    except BudgetExceeded as exc:
        report.add("verdict", "inconclusive")
        report.add("error", str(exc))
        print(report.emit(args.format))
        return EXIT_INCONCLUSIVE
    except (InputError, PreconditionError) as exc:
        report.add("error", str(exc))
        print(report.emit(args.format))
        return EXIT_USAGE
    except WeaksysError as exc:
        report.add("error", str(exc))
        print(report.emit(args.format))
        return EXIT_USAGE


def _dispatch(args, report: Report, budget: Budget, t0) -> int:
    cmd = args.command

    if cmd == "corpus":
        if args.list or args.name is None:
            for name, (_, doc) in sorted(wcorpus.GENERATORS.items()):
                print(f"{name}: {doc}")
            return EXIT_HOLDS
        params = {}
        for item in args.param:
            if "=" not in item:
                raise InputError(f"bad --param {item!r}, expected key=value")
            key, val = item.split("=", 1)
            params[key] = int(val) if val.lstrip("-").isdigit() else val
        obj = wcorpus.generate(args.name, **params)
        from .thickening import CellComplex
        if isinstance(obj, CellComplex):
            text = wio.emit_cell_complex(obj.graph, obj.maximal_cells,
                                         header=f"corpus {args.name}")
        else:
            text = wio.emit_complex(obj, header=f"corpus {args.name}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        report.add("input-sha256", wio.sha256_of(text))
        return _finish(report, None, None, args, t0)

    if cmd == "davis":
        from .thickening import CoxeterNerve, davis_complex
        text, nerve_graph = None, None
        with open(args.nerve, "r", encoding="utf-8") as fh:
            text = fh.read()
        report.add("input-sha256", wio.sha256_of(text))
        nerve = CoxeterNerve.from_graph(wio.parse_graph(text))
        ballc = davis_complex(nerve, args.radius, budget)
        out_text = wio.emit_cell_complex(
            ballc.complex.graph, ballc.complex.maximal_cells,
            header=f"davis ball radius {args.radius}")
        glines = []
        for (u, w), s in sorted(ballc.edge_generator.items()):
            glines.append(f"g {ballc.complex.label(u)} "
                          f"{ballc.complex.label(w)} {nerve.label(s)}")
        out_text += "\n".join(glines) + ("\n" if glines else "")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out_text)
        else:
            sys.stdout.write(out_text)
        report.add("vertices", ballc.complex.n)
        report.add("cells", len(ballc.complex.maximal_cells))
        return _finish(report, None, None, args, t0)

    if cmd in ("thicken", "nodelta", "chi"):
        # chi works on flag complexes too; try cells first, fall back
        from .thickening import check_no_delta, euler_characteristic, thicken
        if cmd == "chi":
            with open(args.input, "r", encoding="utf-8") as fh:
                text = fh.read()
            report.add("input-sha256", wio.sha256_of(text))
            if wio.parse_cells(text):
                _, Y = _load_cells(args.input)
                chi = euler_characteristic(Y, budget)
            else:
                X = wio.parse_complex(text)
                chi = euler_characteristic(X, budget)
            report.add("euler-characteristic", chi)
            return _finish(report, None, None, args, t0)
        text, Y = _load_cells(args.input)
        report.add("input-sha256", wio.sha256_of(text))
        if cmd == "nodelta":
            verdict = check_no_delta(Y, all_cells=args.all_cells,
                                     budget=budget)
            cx, _ = thicken(Y, Budget(budget.limit))
            return _finish(report, verdict, cx, args, t0)
        X, verdict = thicken(Y, budget)
        out_text = wio.emit_complex(X, header="thickening")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out_text)
        else:
            sys.stdout.write(out_text)
        return _finish(report, verdict, X, args, t0)

    text, X = _load(args.input)
    report.add("input-sha256", wio.sha256_of(text))

    if cmd == "check":
        verdict = _run_check(args, X, budget)
        return _finish(report, verdict, X, args, t0)

    if cmd == "cover":
        from .cover import build_cover, validate_cover
        v = X.vertex_by_label(args.base)
        pc = build_cover(X, v, args.radius, budget=budget)
        report.add("cover-vertices", pc.cover.n)
        report.add("sphere-sizes", ",".join(map(str, pc.sphere_sizes)))
        verdict = validate_cover(pc, budget)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(wio.emit_cover(pc.cover, pc.map_labels(),
                                        header=f"cover radius {pc.radius}"))
        return _finish(report, verdict, pc.cover, args, t0)

    if cmd == "convexity":
        from .convexity import (find_convex_neighborhood, is_3convex,
                                is_convex, is_locally_3convex)
        with open(args.subcomplex, "r", encoding="utf-8") as fh:
            labels = fh.read().split()
        vs = [X.vertex_by_label(l) for l in labels]
        Y = span(X, vs)
        if args.mode == "convex":
            verdict = is_convex(X, Y, budget)
        elif args.mode == "3convex":
            verdict = is_3convex(X, Y, budget)
        elif args.mode == "local3convex":
            verdict = is_locally_3convex(X, Y, budget)
        else:
            n, K = find_convex_neighborhood(X, Y, args.nmax, budget=budget)
            report.add("quasiconvexity-constant", K)
            report.add("radius", "none" if n is None else n)
            verdict = Verdict("convex-neighborhood", n is not None,
                              None, {"nmax": args.nmax})
        return _finish(report, verdict, X, args, t0)

    if cmd == "bigons":
        from .hyperbolic import check_thin_bigons
        verdict, worst = check_thin_bigons(X, args.maxdist, budget)
        if worst is not None:
            report.add("worst-width", worst.max_width)
            report.add("worst-endpoints",
                       f"{X.label(worst.u)},{X.label(worst.v)}")
        return _finish(report, verdict, X, args, t0)

    if cmd == "flats":
        from .hyperbolic import find_flat_triangle
        tri = find_flat_triangle(X, args.side, budget)
        if tri is None:
            report.add("flat-triangle", "none")
            verdict = Verdict(f"no-flat-triangle({args.side})", True, None, {})
        else:
            report.add("flat-triangle", " ".join(
                f"({j},{m})={X.label(v)}" for (j, m), v in tri.mapping))
            verdict = Verdict(f"no-flat-triangle({args.side})", False,
                              None, {})
        return _finish(report, verdict, X, args, t0)

    if cmd == "contraction":
        from .hyperbolic import check_strict_contraction
        v = X.vertex_by_label(args.base)
        verdict = check_strict_contraction(X, v, budget)
        return _finish(report, verdict, X, args, t0)

    if cmd == "boundary":
        from .hyperbolic import export_boundary_system
        v = X.vertex_by_label(args.base)
        system = export_boundary_system(X, v, args.levels, budget=budget)
        lines = []
        for li, level in enumerate(system.levels, start=1):
            lines.append(f"# level {li} sphere radius {level.radius}")
            names = ["+".join(X.label(u) for u in s) for s in level.simplices]
            for name in names:
                lines.append(f"v L{li}:{name}")
            for i, j in level.skeleton_edges():
                lines.append(f"e L{li}:{names[i]} L{li}:{names[j]}")
        for li, mapping in enumerate(system.maps, start=1):
            for s, img in sorted(mapping.items()):
                sname = "+".join(X.label(u) for u in s)
                iname = "+".join(X.label(u) for u in img)
                lines.append(f"m L{li + 1}:{sname} L{li}:{iname}")
        out_text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(out_text)
        else:
            sys.stdout.write(out_text)
        report.add("levels", len(system.levels))
        report.add("level-sizes",
                   ",".join(str(l.size) for l in system.levels))
        return _finish(report, None, None, args, t0)

    raise InputError(f"unhandled command {cmd!r}")


def _run_check(args, X: FlagComplex, budget: Budget) -> Verdict:
    prop = args.prop
    if prop == "flag":
        return Verdict("flag", True, None,
                       {"note": "clique complexes are flag by construction"})
    if prop == "sd2star":
        return check_sd2_star(X, budget)
    if prop == "sd2star-k":
        return check_sd2_star_k(X, args.k, budget)
    if prop == "sd2star-links":
        return check_sd2_star_links(X, args.k, budget)
    if prop == "loc-k-large":
        return check_locally_k_large(X, args.k, budget)
    if prop == "weakly-systolic":
        return is_weakly_systolic(X, budget, threads=args.threads)
    if prop == "weakly-bridged":
        return is_weakly_bridged(X.skeleton, budget=budget)
    if prop in ("sdn", "sdn-tilde"):
        if not args.base:
            raise InputError(f"--base is required for {prop}")
        v = X.vertex_by_label(args.base)
        n = args.n if args.n is not None else X.ecc(v)
        if prop == "sdn":
            return check_simple_descent(X, v, n, budget)
        return check_weak_descent(X, v, n, budget)
    raise InputError(f"unknown property {prop!r}")


if __name__ == "__main__":
    sys.exit(main())
