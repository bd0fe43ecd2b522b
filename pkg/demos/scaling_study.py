"""
How the three algorithms scale
==============================

A small version of the benchmark: random non-negative matrices with 3-digit
entries, timed under the packed method, the schoolbook triple loop and
Strassen's recursion.  Results are cross-checked before any timing is kept.

The packed method does n**2 big-integer multiplications of numbers with about
n*P digits each, so its cost grows faster than n**2 once those numbers get
long.  The fitted exponents make that visible.
"""

import logging
import sys
from pathlib import Path

from packmul import emit_csv, emit_plot, run_benchmark, summarize

logging.basicConfig(level=logging.INFO, format="%(message)s")

out = Path(sys.argv[1] if len(sys.argv) > 1 else "scaling-out")
out.mkdir(exist_ok=True)

sizes = [4, 8, 16, 32, 64, 96]
records = run_benchmark(sizes, trials=3, element_digits=3, radix=10, seed=1)

###############################################################################
# Exponents
# ---------
# Least-squares slopes of log(median time) against log(n), from n = 16 up.

summary = summarize(records, min_n=16)
for algo, fit in summary["exponents"].items():
    print(f"{algo:>10}  n^{fit['exponent']:.2f}")
print("packed fastest at", summary["packed_fastest_at"])

###############################################################################
# Footprint
# ---------
# For the packed method the modelled footprint is 2n^2 P + 2n^3 P digits; what
# the code actually retains is much less.

for r in records:
    if r.algo == "packed" and r.trial == 0:
        print(f"n={r.n:4d}  P={r.field_width}  model={r.paper_digits:>10d}  retained={r.impl_digits:>8d}")

emit_csv(records, out / "scaling.csv")
emit_plot(records, out / "time.svg", "time")
emit_plot(records, out / "memory.svg", "memory")
print("wrote", *sorted(p.name for p in out.iterdir()))
