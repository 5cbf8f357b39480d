"""Command-line entry point: ``tempspan generate|spanner|verify|stats|bench``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .algorithms import (
    ALGORITHMS,
    FALLBACKS,
    NoPivotEdgeError,
    PivotConfig,
    VerificationError,
    clique_spanner,
    compute_bispanner,
)
from .core import TemporalBiClique, check_edges, make_injective
from .diagnostics import pivot_profile, reverted_profile, steep_edges
from .generators import random_biclique, random_clique, ringshift, smsmbg
from .io import FormatError, format_graph, format_spanner, parse_graph, parse_spanner
from .oracle import GuardExceededError
from .reach import verify_bispanner, verify_spanner

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_SPEC = 2
EXIT_IO = 3
EXIT_INTERNAL = 4
EXIT_PIVOT = 5

log = logging.getLogger("tempspan")


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot read {path}: {exc.strerror}") from None


def _write(path, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_IO, f"cannot write {path}: {exc.strerror}") from None


def _load_graph(path: str):
    try:
        return parse_graph(_read(path))
    except (FormatError, ValueError) as exc:
        raise CliError(EXIT_SPEC, f"{path}: {exc}") from None


def _rational(text: str) -> Fraction:
    try:
        c = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None
    if not 0 < c <= 1:
        raise argparse.ArgumentTypeError("c must lie in (0, 1]")
    return c


# --- generate ------------------------------------------------------------------

def build_family(family: str, params: list[int], seed: int):
    if family == "ringshift" and len(params) == 1:
        return ringshift(params[0])
    if family == "smsmbg" and len(params) == 2:
        return smsmbg(*params)[0]
    if family == "random-biclique" and len(params) == 2:
        return random_biclique(params[0], params[1], seed)
    if family == "random-clique" and len(params) == 1:
        return random_clique(params[0], seed)
    raise ValueError(f"bad family spec: {family} {' '.join(map(str, params))}")


def cmd_generate(args) -> int:
    try:
        graph = build_family(args.family, args.params, args.seed)
    except ValueError as exc:
        raise CliError(EXIT_SPEC, str(exc)) from None
    _write(args.output, format_graph(graph))
    return EXIT_OK


# --- spanner -------------------------------------------------------------------

def run_algorithm(graph, algo: str, config: PivotConfig, verify: bool = True):
    if isinstance(graph, TemporalBiClique):
        return compute_bispanner(graph, algo, config, verify=verify)
    return clique_spanner(graph, lambda D: compute_bispanner(D, algo, config, verify=verify), verify=verify)


def cmd_spanner(args) -> int:
    graph = _load_graph(args.input)
    config = PivotConfig(args.c, args.fallback)
    start = time.perf_counter()
    try:
        rep = run_algorithm(graph, args.algo, config, verify=not args.no_verify)
    except NoPivotEdgeError as exc:
        print(f"pivot exhaustion: {exc}", file=sys.stderr)
        return EXIT_PIVOT
    except VerificationError as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GuardExceededError as exc:
        raise CliError(EXIT_SPEC, str(exc)) from None
    elapsed = time.perf_counter() - start
    _write(args.output, format_spanner(rep.spanner))
    report = rep.to_dict()
    report["wall_time"] = round(elapsed, 6)
    if args.no_verify:
        report["verification"] = "skipped"
    text = json.dumps(report, sort_keys=True)
    if args.report:
        _write(args.report, text + "\n")
    else:
        print(text, file=sys.stderr if args.output in (None, "-") else sys.stdout)
    return EXIT_OK


# --- verify --------------------------------------------------------------------

def cmd_verify(args) -> int:
    graph = _load_graph(args.input)
    try:
        S = parse_spanner(_read(args.spanner))
        check_edges(graph, S.edges)
    except (FormatError, ValueError) as exc:
        raise CliError(EXIT_SPEC, f"{args.spanner}: {exc}") from None
    bi = args.mode == "bi" if args.mode else S.kind == "bi_spanner"
    if bi and not isinstance(graph, TemporalBiClique):
        raise CliError(EXIT_SPEC, "--bi needs a bi-clique input")
    rep = verify_bispanner(graph, S) if bi else verify_spanner(graph, S)
    if rep.ok:
        print(f"ok: {rep.pairs_checked} pairs reachable")
        return EXIT_OK
    u, v = rep.witness
    print(f"fail: {u!r} does not reach {v!r}")
    return EXIT_VERIFY_FAIL


# --- stats ---------------------------------------------------------------------

def stats_rows(graph: TemporalBiClique, c=None, reverted: bool = False) -> tuple[list[str], list[list]]:
    if not graph.injective:
        log.info("labels repeat; statistics use the lexicographic tie-break")
    inj = graph if graph.injective else make_injective(graph)
    prof = pivot_profile(inj)
    header = ["edge_a", "edge_b", "label", "pivot_set_size"]
    steep = None
    if c is not None:
        steep = set(steep_edges(inj, c))
        header.append("is_c_steep")
    rev = None
    if reverted:
        rev = reverted_profile(inj, all_edges=True)
        header.append("reverted_size")
    rows = []
    for e in graph.edges():
        row = [e[0], e[1], graph.label(e), prof[e]]
        if steep is not None:
            row.append(int(e in steep))
        if rev is not None:
            row.append(rev[e])
        rows.append(row)
    summary = ["summary", "", "", f"max={prof.max}"]
    if steep is not None:
        summary.append(f"count={len(steep)}")
    if rev is not None:
        summary.append(f"min={rev.min}")
    rows.append(summary)
    return header, rows


def cmd_stats(args) -> int:
    graph = _load_graph(args.input)
    if not isinstance(graph, TemporalBiClique):
        raise CliError(EXIT_SPEC, "stats needs a bi-clique input")
    try:
        header, rows = stats_rows(graph, args.c, args.reverted)
    except ValueError as exc:
        raise CliError(EXIT_SPEC, str(exc)) from None
    _write_csv(args.csv, header, rows)
    return EXIT_OK


def _write_csv(path, header, rows) -> None:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    _write(path, buf.getvalue())


# --- bench ---------------------------------------------------------------------

BENCH_HEADER = ["family", "n", "seed", "algo", "size", "bound", "time", "verified", "version"]


def _bench_instance(family: str, n: int, seed: int):
    if family == "ringshift":
        return ringshift(n)
    if family == "random":
        return random_biclique(n, n, seed)
    if family == "random-clique":
        return random_clique(n, seed)
    raise ValueError(f"unknown bench family {family!r}")


def bench_row(task) -> list:
    family, n, seed, algo, c, fallback = task
    graph = _bench_instance(family, n, seed)
    start = time.perf_counter()
    rep = run_algorithm(graph, algo, PivotConfig(c, fallback))
    elapsed = time.perf_counter() - start
    bound = "" if rep.bound_claimed is None else rep.bound_claimed
    return [family, n, seed, algo, rep.size, bound, f"{elapsed:.4f}", int(rep.verified), __version__]


def bench_tasks(family: str, sizes, algos, seeds, c=Fraction(1, 4), fallback="nlogn") -> list[tuple]:
    seeds = [0] if family == "ringshift" else list(seeds)
    return [(family, n, s, a, c, fallback) for n in sizes for s in seeds for a in algos]


def cmd_bench(args) -> int:
    try:
        tasks = bench_tasks(args.family, args.sizes, args.algos, args.seeds, args.c, args.fallback)
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                rows = list(pool.map(bench_row, tasks))
        else:
            rows = [bench_row(t) for t in tasks]
    except NoPivotEdgeError as exc:
        print(f"pivot exhaustion: {exc}", file=sys.stderr)
        return EXIT_PIVOT
    except VerificationError as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, GuardExceededError) as exc:
        raise CliError(EXIT_SPEC, str(exc)) from None
    rows.sort(key=lambda r: (r[0], r[1], r[2], r[3]))
    _write_csv(args.csv, BENCH_HEADER, rows)
    return EXIT_OK


# --- parser --------------------------------------------------------------------

def _int_list(text: str) -> list[int]:
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = (int(x) for x in part.split(".."))
            # lo..hi doubles: 8..64 -> 8,16,32,64
            k = lo
            while k <= hi:
                out.append(k)
                k *= 2
        elif part:
            out.append(int(part))
    if not out or any(v < 0 for v in out):
        raise argparse.ArgumentTypeError(f"bad integer list {text!r}")
    return out


def _algo_list(text: str) -> list[str]:
    algos = [a.strip() for a in text.split(",") if a.strip()]
    bad = [a for a in algos if a not in ALGORITHMS]
    if bad or not algos:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s) {bad}; choose from {ALGORITHMS}")
    return algos


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tempspan", description="Temporal spanners of cliques and bi-cliques.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="write an instance as .tg")
    g.add_argument("family", choices=["ringshift", "smsmbg", "random-biclique", "random-clique"])
    g.add_argument("params", nargs="+", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("-o", "--output")
    g.set_defaults(func=cmd_generate)

    s = sub.add_parser("spanner", help="compute a (bi-)spanner")
    s.add_argument("input")
    s.add_argument("--algo", choices=ALGORITHMS, default="portfolio")
    s.add_argument("--c", type=_rational, default=Fraction(1, 4))
    s.add_argument("--fallback", choices=FALLBACKS, default="nlogn")
    s.add_argument("-o", "--output")
    s.add_argument("--report", help="write the JSON report here instead of stdout")
    s.add_argument("--no-verify", action="store_true", help="skip the internal check (benchmarking only)")
    s.set_defaults(func=cmd_spanner)

    v = sub.add_parser("verify", help="check a spanner file against an instance")
    v.add_argument("input")
    v.add_argument("spanner")
    mode = v.add_mutually_exclusive_group()
    mode.add_argument("--bi", dest="mode", action="store_const", const="bi")
    mode.add_argument("--full", dest="mode", action="store_const", const="full")
    v.set_defaults(func=cmd_verify)

    st = sub.add_parser("stats", help="per-edge diagnostics as CSV")
    st.add_argument("input")
    st.add_argument("--c", type=_rational)
    st.add_argument("--reverted", action="store_true", help="add |M(e)| per edge")
    st.add_argument("--csv")
    st.set_defaults(func=cmd_stats)

    b = sub.add_parser("bench", help="run algorithms over a family of instances")
    b.add_argument("--family", choices=["ringshift", "random", "random-clique"], required=True)
    b.add_argument("--sizes", type=_int_list, required=True, help="e.g. 4,8 or 8..512 (doubling)")
    b.add_argument("--algos", type=_algo_list, default=["nlogn"])
    b.add_argument("--seeds", type=_int_list, default=[0])
    b.add_argument("--c", type=_rational, default=Fraction(1, 4))
    b.add_argument("--fallback", choices=FALLBACKS, default="nlogn")
    b.add_argument("--jobs", type=int, default=1)
    b.add_argument("--csv")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_SPEC if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
