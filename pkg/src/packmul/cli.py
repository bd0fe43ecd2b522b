"""Command-line entry point: ``packmul bench`` and ``packmul multiply``."""
from __future__ import annotations

import argparse
import json
import logging
import sys

from .bench import ALGOS, DEFAULT_SIZES, CrossCheckError, emit_csv, emit_plot, run_benchmark, summarize
from .complexmul import multiply_complex
from .exactdec import multiply_decimal
from .matfile import KINDS, MatrixFormatError, read_matrix, write_matrix
from .matrix import DimensionError
from .packing import KERNELS, resolve_radix
from .reference import DEFAULT_CUTOFF
from .signed import multiply_int

EXIT_PARSE = 2
EXIT_DIMENSION = 3
EXIT_IO = 4


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {s!r}") from None


def _algo_list(s: str) -> list[str]:
    algos = [a for a in s.split(",") if a]
    bad = [a for a in algos if a not in ALGOS]
    if bad or not algos:
        raise argparse.ArgumentTypeError(f"unknown algorithms {bad}; choose from {','.join(ALGOS)}")
    return algos


def _radix(s: str) -> int:
    try:
        return resolve_radix(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def multiply_file(path_a, path_b, kind: str, radix, out_path, kernel: str = "limb") -> int:
    """Multiply two matrix files and write the product; returns a process exit status."""
    try:
        A = read_matrix(path_a, kind)
        B = read_matrix(path_b, kind)
    except MatrixFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    multiply = {"int": multiply_int, "decimal": multiply_decimal, "complex": multiply_complex}[kind]
    try:
        C = multiply(A, B, radix, kernel)
    except DimensionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIMENSION
    try:
        write_matrix(out_path, C, kind)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


def _cmd_bench(args) -> int:
    try:
        records = run_benchmark(
            args.sizes, args.trials, args.element_digits, args.radix, args.algos, args.seed,
            cutoff=args.cutoff, kernel=args.kernel, fixed_example=args.fixed_example,
        )
    except CrossCheckError as exc:
        print(f"cross-check failed: {exc}", file=sys.stderr)
        print(exc.dump, file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    if not records:
        print("no trials run", file=sys.stderr)
        return 0
    summary = summarize(records, args.fit_min_n)
    try:
        if args.csv:
            emit_csv(records, args.csv)
        if args.plot_time:
            emit_plot(records, args.plot_time, "time")
        if args.plot_mem:
            emit_plot(records, args.plot_mem, "memory")
        if args.summary:
            with open(args.summary, "w") as fh:
                json.dump(summary, fh, indent=2)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    for algo, fit in summary["exponents"].items():
        print(f"{algo:>10}: time ~ n^{fit['exponent']:.3f} (r^2={fit['r_squared']:.4f})")
    print(f"packed fastest at n = {summary['packed_fastest_at']}")
    print(f"packed exponent <= 2.2: {summary['quadratic_claim_holds']}")
    print(f"packed fastest at every size: {summary['faster_claim_holds']}")
    return 0


def _cmd_multiply(args) -> int:
    return multiply_file(args.a, args.b, args.kind, args.radix, args.output, args.kernel)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="packmul", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    b = sub.add_parser("bench", help="time packed vs schoolbook vs Strassen")
    b.add_argument("--algos", type=_algo_list, default=list(ALGOS))
    b.add_argument("--sizes", type=_int_list, default=list(DEFAULT_SIZES))
    b.add_argument("--trials", type=int, default=5)
    b.add_argument("--element-digits", type=int, default=3)
    b.add_argument("--radix", type=_radix, default=10, help="10, pow2 or any integer >= 2")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--cutoff", type=int, default=DEFAULT_CUTOFF, help="Strassen leaf size")
    b.add_argument("--kernel", choices=KERNELS, default="native")
    b.add_argument("--fit-min-n", type=int, default=None, help="smallest n used in exponent fits")
    b.add_argument("--csv")
    b.add_argument("--plot-time")
    b.add_argument("--plot-mem")
    b.add_argument("--summary", help="write fitted exponents and findings as JSON")
    b.add_argument("--fixed-example", action="store_true", help="use the worked 3x3 example at n=3")
    b.set_defaults(func=_cmd_bench)

    m = sub.add_parser("multiply", help="multiply two matrix files")
    m.add_argument("--kind", choices=KINDS, required=True)
    m.add_argument("--radix", type=_radix, default=10)
    m.add_argument("--kernel", choices=KERNELS, default="limb")
    m.add_argument("a")
    m.add_argument("b")
    m.add_argument("-o", "--output", required=True)
    m.set_defaults(func=_cmd_multiply)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(message)s")
    return args.func(args)
