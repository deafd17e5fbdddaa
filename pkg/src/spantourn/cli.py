"""Command-line interface.

Exit codes: 0 on success, 1 on a negative verdict (not isomorphic, not
spanning), 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from .bench import render_figure, rows_to_csv, run_bench
from .ctf import CtfError, emit_ctf, parse_ctf
from .driver import aut_spanning, build_gadget, iso_spanning, triple_cycle_coset
from .gen import cayley_tournament, random_k_spanning
from .perm import Coset, Perm
from .search import brute_aut, brute_iso
from .structures import ColoredDigraph, is_k_spanning, minimal_spanning_k
from .wl2 import wl2

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


def _load(path: str) -> ColoredDigraph:
    try:
        with open(path, encoding="utf-8") as f:
            text = f.read()
    except OSError as exc:
        raise CtfError(0, "%s: %s" % (path, exc.strerror))
    try:
        return parse_ctf(text)
    except CtfError as exc:
        raise CtfError(exc.line, "%s: %s" % (path, exc.args[0]))


def _pick_k(x: ColoredDigraph, k: int | None, source: int | None, out) -> int | None:
    """Requested k, or the minimal spanning k (reported); None if unspannable."""
    if k is not None:
        if k < 1:
            raise CtfError(0, "k must be at least 1")
        return k if is_k_spanning(x, k, source) else None
    k = minimal_spanning_k(x, source)
    if k is not None:
        print("k = %d (minimal spanning)" % k, file=out)
    return k


def _print_group(group, out) -> None:
    for g in group.generators:
        print("gen %s" % g.cycle_str(), file=out)
    print("order %d" % group.order(), file=out)


def _cmd_aut(args, out) -> int:
    x = _load(args.file)
    k = _pick_k(x, args.k, args.source, out)
    if k is None:
        print("not spanning for any k", file=out)
        return EXIT_NEGATIVE
    trace = (lambda msg: print("# %s" % msg, file=sys.stderr)) if args.verbose else None
    _print_group(aut_spanning(x, k, source=args.source, trace=trace), out)
    return EXIT_OK


def _try_beta(x: ColoredDigraph, y: ColoredDigraph, k: int, beta: int):
    """Representative images for isomorphisms sending 0 to beta, or None."""
    n = x.n
    t = build_gadget(x, y, beta)
    a = aut_spanning(t, max(3, k), source=3 * n)
    cyc = triple_cycle_coset(a, 0, n + beta, 2 * n)
    if cyc.is_empty:
        return None
    return [cyc.rep[v] - n for v in range(n)]


def _iso_parallel(x: ColoredDigraph, y: ColoredDigraph, k: int, jobs: int) -> Coset:
    """Same result as iso_spanning, with gadgets evaluated across processes.

    The smallest successful beta wins, so the output is independent of
    the job count and completion order."""
    if (x.n != y.n
            or x.num_vertex_colors != y.num_vertex_colors
            or x.num_arc_colors != y.num_arc_colors
            or [len(c) for c in x.vertex_classes()] != [len(c) for c in y.vertex_classes()]
            or [len(c) for c in x.arc_classes()] != [len(c) for c in y.arc_classes()]):
        return Coset.empty()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_try_beta, [x] * x.n, [y] * x.n, [k] * x.n,
                                range(x.n)))
    for images in results:
        if images is not None:
            return Coset(Perm(images), aut_spanning(x, k))
    return Coset.empty()


def _cmd_iso(args, out) -> int:
    x, y = _load(args.file1), _load(args.file2)
    k = _pick_k(x, args.k, None, out)
    if k is None or not is_k_spanning(y, k):
        print("NOT ISOMORPHIC", file=out)
        print("# inputs are not spanning for a common k", file=out)
        return EXIT_NEGATIVE
    if args.jobs > 1:
        coset = _iso_parallel(x, y, k, args.jobs)
    else:
        coset = iso_spanning(x, y, k)
    if coset.is_empty:
        print("NOT ISOMORPHIC", file=out)
        return EXIT_NEGATIVE
    print("ISOMORPHIC", file=out)
    print("rep %s" % coset.rep.to_line(), file=out)
    print("aut order %d" % coset.group.order(), file=out)
    return EXIT_OK


def _cmd_check(args, out) -> int:
    x = _load(args.file)
    mode = ("reachable from %d" % args.source) if args.source is not None \
        else "strongly connected"
    if args.k is not None:
        ok = is_k_spanning(x, args.k, args.source)
        print("%d-spanning (%s): %s" % (args.k, mode, "yes" if ok else "no"), file=out)
        return EXIT_OK if ok else EXIT_NEGATIVE
    k = minimal_spanning_k(x, args.source)
    if k is None:
        print("not spanning for any k (%s)" % mode, file=out)
        return EXIT_NEGATIVE
    print("minimal spanning k = %d (%s)" % (k, mode), file=out)
    return EXIT_OK


def _parse_cells(text: str) -> list[list[int]]:
    cells = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if chunk:
            cells.append([int(w) for w in chunk.replace(",", " ").split()])
    return cells


def _cmd_wl2(args, out) -> int:
    x = _load(args.file)
    tau = _parse_cells(args.tau) if args.tau else []
    out.write(emit_ctf(wl2(x, tau)))
    return EXIT_OK


def _cmd_gen(args, out) -> int:
    if args.family == "cayley":
        parts = [[int(w) for w in chunk.split(",")]
                 for chunk in args.parts.split("/")]
        x = cayley_tournament(args.n, parts)
    else:
        x = random_k_spanning(args.n, args.k, args.extra, args.seed)
    text = emit_ctf(x)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as f:
            f.write(text)
    else:
        out.write(text)
    return EXIT_OK


def _cmd_oracle(args, out) -> int:
    if args.kind == "aut":
        _print_group(brute_aut(_load(args.file)), out)
        return EXIT_OK
    isos = brute_iso(_load(args.file), _load(args.file2))
    if not isos:
        print("NOT ISOMORPHIC", file=out)
        return EXIT_NEGATIVE
    print("ISOMORPHIC", file=out)
    print("count %d" % len(isos), file=out)
    print("rep %s" % min(isos, key=lambda p: p.images).to_line(), file=out)
    return EXIT_OK


def _cmd_bench(args, out) -> int:
    sizes = [int(w) for w in args.sizes.split(",")]
    rows = run_bench(sizes, args.k)
    csv_text = rows_to_csv(rows)
    out.write(csv_text)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as f:
            f.write(csv_text)
    if args.fig:
        render_figure(rows, args.fig)
        print("# figure written to %s" % args.fig, file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spantourn",
        description="Automorphisms and isomorphisms of k-spanning colored tournaments.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("aut", help="automorphism group of a ctf file")
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p.add_argument("--source", type=int)
    p.add_argument("-v", "--verbose", action="store_true")
    p.set_defaults(func=_cmd_aut)

    p = sub.add_parser("iso", help="isomorphism coset of two ctf files")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--k", type=int)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("check", help="spanning verdict")
    p.add_argument("file")
    p.add_argument("--k", type=int)
    p.add_argument("--source", type=int)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("wl2", help="stable pair refinement, emitted as ctf")
    p.add_argument("file")
    p.add_argument("--tau", help="individualized cells, e.g. '0,1;2'")
    p.set_defaults(func=_cmd_wl2)

    p = sub.add_parser("gen", help="instance generators")
    gsub = p.add_subparsers(dest="family", required=True)
    g = gsub.add_parser("cayley")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--parts", required=True, help="e.g. 1/2,4 for {1},{2,4}")
    g.add_argument("--out")
    g.set_defaults(func=_cmd_gen)
    g = gsub.add_parser("random")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--extra", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=_cmd_gen)

    p = sub.add_parser("oracle", help="brute-force reference results")
    osub = p.add_subparsers(dest="kind", required=True)
    o = osub.add_parser("aut")
    o.add_argument("file")
    o.set_defaults(func=_cmd_oracle)
    o = osub.add_parser("iso")
    o.add_argument("file")
    o.add_argument("file2")
    o.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bench", help="timing runs: CSV plus optional figure")
    p.add_argument("--sizes", default="101,301,501")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--csv", help="also write the CSV here")
    p.add_argument("--fig", help="write a PNG figure here")
    p.set_defaults(func=_cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, sys.stdout)
    except CtfError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
