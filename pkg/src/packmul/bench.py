"""Benchmark harness comparing packed, schoolbook and Strassen multiplication.

Every instance is multiplied by each selected algorithm; results must agree
exactly before any timing is kept.  Memory is reported as a digit count
(platform-independent) under two models for the packed method, see
:func:`packmul.packing.footprint_digits`.
"""
from __future__ import annotations

import csv
import gc
import logging
import random
import statistics
import time
from dataclasses import astuple, dataclass, fields
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .bigdigit import int_digit_count
from .complexmul import ComplexMatrix
from .exactdec import ExactDecimal
from .matfile import format_matrix
from .matrix import DenseMatrix
from .packing import compute_params, footprint_digits, multiply_nonneg, resolve_radix
from .reference import DEFAULT_CUTOFF, schoolbook_multiply, strassen_footprint_digits, strassen_multiply

__all__ = [
    "ALGOS",
    "CSV_HEADER",
    "DEFAULT_SIZES",
    "BenchRecord",
    "CrossCheckError",
    "ExponentFit",
    "PAPER_EXAMPLE",
    "emit_csv",
    "emit_plot",
    "fit_exponent",
    "generate_matrix",
    "read_csv",
    "run_benchmark",
    "summarize",
]

log = logging.getLogger(__name__)

ALGOS = ("packed", "schoolbook", "strassen")
MATRIX_KINDS = ("nonneg", "int", "decimal", "complex")
DEFAULT_SIZES = (4, 8, 16, 32, 64, 128, 256)
CSV_HEADER = ["algo", "n", "trial", "seed", "wall_ns", "paper_digits", "impl_digits",
              "radix", "M", "P", "element_digits"]

PAPER_EXAMPLE = (
    DenseMatrix.from_rows([[1, 2, 3], [4, 5, 6], [7, 8, 9]]),
    DenseMatrix.from_rows([[9, 8, 7], [6, 5, 4], [3, 2, 1]]),
)


@dataclass(frozen=True)
class BenchRecord:
    algo: str
    n: int
    trial: int
    seed: int
    wall_ns: int
    paper_digits: int
    impl_digits: int
    radix: int
    element_width: int
    field_width: int
    element_digits: int


class CrossCheckError(RuntimeError):
    """Algorithms disagreed on an instance; ``dump`` holds the operands and results."""

    def __init__(self, message: str, dump: str):
        super().__init__(message)
        self.dump = dump


class ExponentFit(NamedTuple):
    exponent: float
    r_squared: float


def _derive_seed(*words: int) -> int:
    return int(np.random.SeedSequence(list(words)).generate_state(1, np.uint64)[0])


def generate_matrix(n: int, element_digits: int, kind: str = "nonneg", seed: int = 0):
    """Random ``n x n`` matrix with magnitudes uniform in ``[0, 10**element_digits)``.

    ``int`` entries carry a uniform random sign; ``decimal`` entries are
    signed with a random 0..element_digits fraction digits; ``complex``
    entries have independent decimal real and imaginary parts.
    """
    if n < 1 or element_digits < 1:
        raise ValueError("n and element_digits must be >= 1")
    if kind not in MATRIX_KINDS:
        raise ValueError(f"unknown matrix kind {kind!r}; expected one of {MATRIX_KINDS}")
    rng = random.Random(seed)
    top = 10 ** element_digits

    def signed():
        v = rng.randrange(top)
        return -v if rng.random() < 0.5 else v

    def decimal():
        return ExactDecimal.from_scaled(signed(), rng.randint(0, element_digits))

    count = n * n
    if kind == "nonneg":
        return DenseMatrix(n, n, tuple(rng.randrange(top) for _ in range(count)))
    if kind == "int":
        return DenseMatrix(n, n, tuple(signed() for _ in range(count)))
    if kind == "decimal":
        return DenseMatrix(n, n, tuple(decimal() for _ in range(count)))
    return ComplexMatrix(
        DenseMatrix(n, n, tuple(decimal() for _ in range(count))),
        DenseMatrix(n, n, tuple(decimal() for _ in range(count))),
    )


def _timed(fn, *args):
    # collector pauses are charged to whichever call triggers them, so keep them out (as timeit does)
    enabled = gc.isenabled()
    gc.collect()
    gc.disable()
    try:
        start = time.perf_counter_ns()
        out = fn(*args)
        elapsed = time.perf_counter_ns() - start
    finally:
        if enabled:
            gc.enable()
    return out, max(1, elapsed)


def _cross_check(results: dict, A, B, n: int, seed: int) -> None:
    names = list(results)
    ref = results[names[0]]
    for name in names[1:]:
        if results[name] != ref:
            dump = [f"# n={n} seed={seed}", "# A", format_matrix(A, "int"), "# B", format_matrix(B, "int")]
            for k, v in results.items():
                dump += [f"# {k}", format_matrix(v, "int")]
            raise CrossCheckError(f"{name} disagrees with {names[0]} at n={n}, seed={seed}", "\n".join(dump))


def run_benchmark(
    sizes: Sequence[int],
    trials: int = 5,
    element_digits: int = 3,
    radix=10,
    algos: Sequence[str] = ALGOS,
    seed: int = 0,
    *,
    cutoff: int = DEFAULT_CUTOFF,
    kernel: str = "native",
    fixed_example: bool = False,
) -> list[BenchRecord]:
    """Time each algorithm on ``trials`` random non-negative instances per size.

    With ``fixed_example`` the size-3 instances are the worked 3x3 example
    instead of random matrices.
    """
    if not sizes:
        raise ValueError("sizes must be non-empty")
    unknown = set(algos) - set(ALGOS)
    if unknown or not algos:
        raise ValueError(f"unknown algorithms {sorted(unknown)}; expected a subset of {ALGOS}")
    if fixed_example and 3 not in sizes:
        raise ValueError("fixed_example needs size 3 in the grid")
    radix = resolve_radix(radix)

    def digits(x):
        return int_digit_count(abs(x), radix)

    runners = {
        "packed": lambda A, B: multiply_nonneg(A, B, radix, kernel),
        "schoolbook": schoolbook_multiply,
        "strassen": lambda A, B: strassen_multiply(A, B, cutoff),
    }
    records = []
    for n in sizes:
        for trial in range(trials):
            inst_seed = _derive_seed(seed, n, trial)
            if fixed_example and n == 3:
                A, B = PAPER_EXAMPLE
                ed = 1
            else:
                A = generate_matrix(n, element_digits, "nonneg", inst_seed)
                B = generate_matrix(n, element_digits, "nonneg", _derive_seed(inst_seed, 1))
                ed = element_digits
            results, times = {}, {}
            for algo in algos:
                results[algo], times[algo] = _timed(runners[algo], A, B)
            _cross_check(results, A, B, n, inst_seed)
            for algo in algos:
                width = ew = 0
                if algo == "packed":
                    params = compute_params(A, B, radix)
                    ew, width = params.element_width, params.field_width
                    modelled, impl = footprint_digits(A, B, params, kernel="native")
                elif algo == "schoolbook":
                    modelled = impl = sum(map(digits, results[algo].data))
                else:
                    modelled = impl = strassen_footprint_digits(A, B, cutoff, digits)
                records.append(BenchRecord(
                    algo, n, trial, inst_seed, times[algo], modelled, impl,
                    radix if algo == "packed" else 0, ew, width, ed,
                ))
            log.info("n=%d trial=%d %s", n, trial,
                     " ".join(f"{a}={times[a] / 1e6:.2f}ms" for a in algos))
    return records


def fit_exponent(records: Iterable[BenchRecord], min_n: int | None = None) -> ExponentFit:
    """Least-squares slope of log(median wall time) against log(n)."""
    by_n: dict[int, list[int]] = {}
    algos = set()
    for r in records:
        algos.add(r.algo)
        if min_n is None or r.n >= min_n:
            by_n.setdefault(r.n, []).append(r.wall_ns)
    if len(algos) > 1:
        raise ValueError(f"records mix algorithms {sorted(algos)}")
    if len(by_n) < 3:
        raise ValueError(f"need at least 3 distinct sizes, got {len(by_n)}")
    ns = sorted(by_n)
    x = np.log(ns)
    y = np.log([statistics.median(by_n[n]) for n in ns])
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 - float(np.sum(resid ** 2)) / ss_tot if ss_tot > 0 else 1.0
    return ExponentFit(float(slope), r2)


def _medians(records, key):
    series: dict[str, dict[int, list]] = {}
    for r in records:
        series.setdefault(r.algo, {}).setdefault(r.n, []).append(getattr(r, key))
    return {a: {n: statistics.median(v) for n, v in sorted(d.items())} for a, d in series.items()}


def summarize(records: Sequence[BenchRecord], min_n: int | None = None) -> dict:
    """Fitted exponents per algorithm and where the packed method is fastest."""
    out: dict = {"exponents": {}, "packed_fastest_at": [], "packed_slowest_at": []}
    for algo in sorted({r.algo for r in records}):
        recs = [r for r in records if r.algo == algo]
        try:
            fit = fit_exponent(recs, min_n)
        except ValueError:
            continue
        out["exponents"][algo] = {"exponent": fit.exponent, "r_squared": fit.r_squared}
    times = _medians(records, "wall_ns")
    if "packed" in times and len(times) > 1:
        for n, t in times["packed"].items():
            others = [times[a][n] for a in times if a != "packed" and n in times[a]]
            if others and t < min(others):
                out["packed_fastest_at"].append(n)
            if others and t > max(others):
                out["packed_slowest_at"].append(n)
    packed = out["exponents"].get("packed")
    out["quadratic_claim_holds"] = None if packed is None else bool(packed["exponent"] <= 2.2)
    sizes = sorted({r.n for r in records if r.algo == "packed"})
    out["faster_claim_holds"] = bool(sizes) and out["packed_fastest_at"] == sizes
    return out


# -- output ---------------------------------------------------------------------------

def emit_csv(records: Sequence[BenchRecord], path) -> None:
    if not records:
        raise ValueError("no records to write")
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(CSV_HEADER)
        for r in records:
            w.writerow(astuple(r))


def read_csv(path) -> list[BenchRecord]:
    with open(path, newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows or rows[0] != CSV_HEADER:
        raise ValueError(f"{path}: unexpected CSV header")
    types = [f.type for f in fields(BenchRecord)]
    return [
        BenchRecord(*(v if t in ("str", str) else int(v) for v, t in zip(row, types)))
        for row in rows[1:]
    ]


def emit_plot(records: Sequence[BenchRecord], path, metric: str = "time") -> None:
    """SVG plot of median time (ms) or modelled digit footprint against n.

    One line per algorithm; each line's SVG group id is ``series-<label>``.
    """
    if not records:
        raise ValueError("no records to plot")
    if metric not in ("time", "memory"):
        raise ValueError(f"metric must be 'time' or 'memory', got {metric!r}")
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    radices = {r.radix for r in records if r.algo == "packed"}
    labelled = [
        (f"{r.algo}-radix{r.radix}" if r.algo == "packed" and len(radices) > 1 else r.algo, r)
        for r in records
    ]
    key = "wall_ns" if metric == "time" else "paper_digits"
    series: dict[str, dict[int, list]] = {}
    for label, r in labelled:
        series.setdefault(label, {}).setdefault(r.n, []).append(getattr(r, key))

    fig, ax = plt.subplots(figsize=(7, 4.5))
    for label in sorted(series):
        pts = sorted(series[label].items())
        ns = [n for n, _ in pts]
        ys = [statistics.median(v) for _, v in pts]
        if metric == "time":
            ys = [y / 1e6 for y in ys]
        (line,) = ax.plot(ns, ys, marker="o", label=label)
        line.set_gid(f"series-{label}")
    ax.set_xscale("log", base=2)
    ax.set_yscale("log")
    ax.set_xlabel("matrix size n")
    ax.set_ylabel("median time (ms)" if metric == "time" else "footprint (digits)")
    ax.set_title("time vs size" if metric == "time" else "memory footprint vs size")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    try:
        fig.savefig(Path(path), format="svg")
    finally:
        plt.close(fig)
