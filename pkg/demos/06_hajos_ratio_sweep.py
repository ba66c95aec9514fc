#!/usr/bin/env python3
"""Coloring-to-subdivision ratio on random graphs.

At edge probability 1 - e^-2 the gap between the chromatic number and the
largest clique subdivision is widest; the certified point ratio grows with
n against the sqrt(n)/log(n) reference curve.  Counting certificates for
the subdivision upper bound need the exact clique number, which caps the
sizes where a fully certified gap can be reported.
"""

from cliquesub import OPTIMAL_P, emit_report, run_ratio_sweep
from cliquesub.experiments import SweepBudgets, find_certified_ratio_violation

print("=" * 64)
print(f"  ratio sweep at p = 1 - e^-2 = {OPTIMAL_P:.4f}")
print("=" * 64)
print()

records = run_ratio_sweep([100, 200, 400], OPTIMAL_P, 2, SweepBudgets(omega_nodes=200_000))
print(emit_report(records, "csv"))

print("point-ratio trend (seed averages):")
by_n = {}
for r in records:
    by_n.setdefault(r.n, []).append(r.ratio_point)
for n, vals in sorted(by_n.items()):
    avg = sum(vals) / len(vals)
    ref = records[0].reference
    print(f"  n={n:4d}: ratio_point {avg:5.2f}   reference sqrt(n)/log(n) "
          f"{[r.reference for r in records if r.n == n][0]:.2f}")

print("\nsearching for a fully certified chi > sigma instance:")
rec, log = find_certified_ratio_violation([80, 120], seeds_per_n=1)
for line in log:
    print(f"  {line}")
if rec is None:
    print("  (counting certificates stay above the coloring bound at desk "
          "scale; the achieved gap is reported instead)")
