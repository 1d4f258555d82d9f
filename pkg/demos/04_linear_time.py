"""
Linear time, few moves
======================

The in-place packer reads the array with two forward cursors and moves at
most n + q items.  Timing the in-place entry point over doubling sizes
shows the cost per item staying flat.
"""

from vecpack.bench import run_bench

rows = run_bench([5_000, 10_000, 20_000, 40_000], repeats=5)
for r in rows:
    per_item = r["medianNanos"] / r["n"]
    print(f"n={r['n']:>6}  {r['medianNanos'] / 1e6:7.1f} ms  "
          f"{per_item:6.0f} ns/item  swaps {r['swaps']}/{r['swapBudget']}  "
          f"scans {r['cursorAdvances']}/{r['scanBudget']}")
