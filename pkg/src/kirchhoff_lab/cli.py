"""Command-line front end.

Subcommands: gen, resistance, kf, charpoly, verify, sweep.

Exit codes are a stable scripting contract:
  0 success, 1 verification failure, 2 usage/parse error,
  3 disconnected graph, 4 unknown vertex label.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import families, verify
from .errors import (
    Disconnected,
    KirchhoffError,
    SingularShift,
    UnknownLabel,
)
from .multigraph import format_edge_list, read_edge_list
from .resistance import (
    kirchhoff_eigen,
    kirchhoff_pairs,
    kirchhoff_poly,
    kirchhoff_report,
    resistance_det,
    resistance_pinv,
)
from .spectral import charpoly_exact, laplacian

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_DISCONNECTED = 3
EXIT_UNKNOWN_LABEL = 4

# eigensolves in sweeps stop at this matrix order; the exact columns continue
EIGEN_ORDER_CUTOFF = 48


def _fmt_float(x: float) -> str:
    return f"{x:.11f}"


def cmd_gen(args) -> int:
    g = families.generate(args.family, args.param)
    text = format_edge_list(g)
    if args.out == "-":
        sys.stdout.write(text)
    else:
        Path(args.out).write_text(text, encoding="utf-8")
    return EXIT_OK


def cmd_resistance(args) -> int:
    g = read_edge_list(args.graph)
    if args.method == "det":
        print(resistance_det(g, args.u, args.v))
    else:
        print(_fmt_float(resistance_pinv(g, args.u, args.v)))
    return EXIT_OK


def cmd_kf(args) -> int:
    g = read_edge_list(args.graph)
    if args.method == "eig":
        print(_fmt_float(kirchhoff_eigen(g)))
    elif args.method == "poly":
        print(kirchhoff_poly(g))
    elif args.method == "pairs":
        print(kirchhoff_pairs(g, "det"))
    else:
        rep = kirchhoff_report(g)
        print(f"n {rep.n}")
        print(f"kf_eigen {_fmt_float(rep.kf_eigen)}")
        print(f"kf_poly {rep.kf_poly}")
        print(f"kf_pairs {_fmt_float(rep.kf_pairs)}")
        print(f"method_spread {rep.method_spread:.3e}")
    return EXIT_OK


def _poly_line(coeffs) -> str:
    return " ".join(str(c) for c in coeffs)


def cmd_charpoly(args) -> int:
    if args.mode in ("recurrence", "both") and args.family != "nested":
        print(
            f"charpoly: recurrence mode supports only 'nested', not {args.family!r}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    rec = direct = None
    if args.mode in ("recurrence", "both"):
        rec = families.psi_recurrence(args.n)[-1]
        print(f"{args.n}: {_poly_line(rec)}")
    if args.mode in ("direct", "both"):
        direct = charpoly_exact(_integer_laplacian(args.family, args.n))
        if args.mode == "both":
            print(f"{args.n}: {_poly_line(direct)}")
        else:
            print(_poly_line(direct))
    if args.mode == "both":
        print("MATCH" if rec == direct else "MISMATCH")
        if rec != direct:
            return EXIT_VERIFY_FAIL
    return EXIT_OK


def _integer_laplacian(family: str, n: int):
    L = laplacian(families.generate(family, n))
    # the paper families all have integer Laplacians; anything else is a bug
    return L


def cmd_verify(args) -> int:
    results = verify.run(args.suite, args.seed)
    print(f"suite {args.suite} seed {args.seed}")
    failed = 0
    for name, ok, detail in results:
        tag = "PASS" if ok else "FAIL"
        line = f"{tag} {name}"
        if detail:
            line += f" ({detail})"
        print(line)
        if not ok:
            failed += 1
    print(f"{len(results) - failed}/{len(results)} properties passed")
    return EXIT_OK if failed == 0 else EXIT_VERIFY_FAIL


def _sweep_fig4(max_n: int):
    rows = []
    for n in range(1, max_n + 1):
        kf = families.kf_nested_closed(n)
        y_asym = Fraction(17 * n, 6) - 6
        gap = families.asymptote_gap(n)
        numeric = None
        if 2 * n <= EIGEN_ORDER_CUTOFF:
            numeric = kirchhoff_eigen(families.generate(families.NESTED, n))
        rows.append((n, kf, numeric, y_asym, gap))
    return rows


def _sweep_fig7(max_n: int):
    rows = []
    for v in range(3, max_n + 1):
        kf_path = float(families.kf_baseline_closed(families.PATH, v))
        kf_cycle = float(families.kf_baseline_closed(families.CYCLE, v))
        kf_nested_unit = kf_fourreg = kf_nested_w = None
        if v % 2 == 0:
            n = v // 2
            kf_nested_unit = float(families.kf_nested_unit_closed(n))
            kf_nested_w = float(families.kf_nested_closed(n))
            if n >= 3:
                kf_fourreg = float(families.kf_fourregular_closed(n))
        rows.append((v, kf_path, kf_cycle, kf_nested_unit, kf_fourreg, kf_nested_w))
    return rows


def _g(x) -> str:
    return "" if x is None else f"{x:g}"


def cmd_sweep(args) -> int:
    from . import plots

    out = Path(args.out)
    png = out.with_suffix(".png")
    if args.target == "fig4":
        if args.max_n < 1:
            print("sweep fig4: max_n must be >= 1", file=sys.stderr)
            return EXIT_USAGE
        rows = _sweep_fig4(args.max_n)
        lines = ["n,kf_closed,kf_numeric,y_asym,gap,gap_float"]
        for n, kf, numeric, y_asym, gap in rows:
            num = _fmt_float(numeric) if numeric is not None else ""
            lines.append(f"{n},{kf},{num},{y_asym},{gap},{float(gap):.6e}")
        plot_rows = [
            (n, float(kf), numeric, float(y_asym), float(gap))
            for n, kf, numeric, y_asym, gap in rows
        ]
        plots.render_growth_plot(plot_rows, png)
    else:
        if args.max_n < 6:
            print("sweep fig7: max_n must be >= 6", file=sys.stderr)
            return EXIT_USAGE
        rows = _sweep_fig7(args.max_n)
        lines = ["vertices,kf_path,kf_cycle,kf_nested_unit,kf_fourreg,kf_nested_weighted"]
        for v, p, c, nu, fr, nw in rows:
            lines.append(f"{v},{_g(p)},{_g(c)},{_g(nu)},{_g(fr)},{_g(nw)}")
        plots.render_comparison_plot(rows, png)
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="kirchhoff-lab",
        description="Resistance distances and Kirchhoff indices of weighted multigraphs",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family graph as an edge-list file")
    p.add_argument("family", choices=families.FAMILIES)
    p.add_argument("param", type=int)
    p.add_argument("out", help="output path, or - for stdout")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("resistance", help="effective resistance between two vertices")
    p.add_argument("graph")
    p.add_argument("u")
    p.add_argument("v")
    p.add_argument("--method", choices=("pinv", "det"), default="det")
    p.set_defaults(func=cmd_resistance)

    p = sub.add_parser("kf", help="Kirchhoff index of a graph file")
    p.add_argument("graph")
    p.add_argument("--method", choices=("eig", "poly", "pairs", "all"), default="all")
    p.set_defaults(func=cmd_kf)

    p = sub.add_parser("charpoly", help="characteristic polynomial of a family Laplacian")
    p.add_argument("family", choices=families.FAMILIES)
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("recurrence", "direct", "both"), default="direct")
    p.set_defaults(func=cmd_charpoly)

    p = sub.add_parser("verify", help="run the property-verification suites")
    p.add_argument("suite", choices=("lemmas", "recurrences", "closedforms", "all"))
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="emit CSV + PNG for the growth/comparison figures")
    p.add_argument("target", choices=("fig4", "fig7"))
    p.add_argument("max_n", type=int)
    p.add_argument("--out", required=True, help="CSV path; PNG lands beside it")
    p.set_defaults(func=cmd_sweep)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors already
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (Disconnected, SingularShift) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCONNECTED
    except UnknownLabel as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_LABEL
    except (KirchhoffError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
