"""
How the beta-step count grows
=============================

Each machine transition looks up the head position in the input string,
which costs time proportional to the position.  Counting down a binary
numeral is cheap on average, so in practice the cost per transition is
closer to |i| than to |i| log |i|.  The ratio n / ((T+1) |i| log |i|)
therefore drifts down slowly, but stays within a factor of 4 up to 64.
"""

from tmlambda.harness import bench
from tmlambda.machine import corpus_machine

for name in ["parity", "first_last"]:
    report = bench(corpus_machine(name), [4, 8, 16, 32, 64], seed=0)
    print(name)
    for row in report.rows:
        print(f"  |payload|={len(row.payload):>3}  T={row.machine_steps:>4}  n={row.beta_steps:>9}  ratio={row.ratio:.3f}")
    print(f"  spread max/min = {report.ratio_max / report.ratio_min:.2f}")
