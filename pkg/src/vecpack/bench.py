"""Timing and operation counts for the in-place packer."""

from __future__ import annotations

import gc
import statistics
import time

from .generators import generate_weights
from .packdisks import InvariantViolation, pack_inplace


class BudgetExceeded(InvariantViolation):
    pass


def _timed(weights):
    buf = weights.copy()
    gc_was_enabled = gc.isenabled()
    gc.disable()
    try:
        t0 = time.perf_counter_ns()
        _, metrics = pack_inplace(buf)
        elapsed = time.perf_counter_ns() - t0
    finally:
        if gc_was_enabled:
            gc.enable()
    return elapsed, metrics


def run_bench(sizes, seed=0, dist="uniform", repeats=5, rho_max=0.3):
    """Time :func:`pack_inplace` on fresh buffers for each size.

    Repeats are interleaved across sizes (after one untimed warm-up run per
    size) so that a transient slowdown hits every size alike.  Every run is
    checked against the move, scan and iteration budgets;
    :class:`BudgetExceeded` is raised on the first violation.  Returns one
    row per size with the median wall time and the worst-case counters.
    """
    if repeats < 1:
        raise ValueError("repeats must be at least 1")
    sizes = list(sizes)
    inputs = [generate_weights(n, seed, rho_max, dist) for n in sizes]
    times = [[] for _ in sizes]
    runs = [[] for _ in sizes]
    for w in inputs:
        _timed(w)
    for _ in range(repeats):
        for k, (n, w) in enumerate(zip(sizes, inputs)):
            elapsed, metrics = _timed(w)
            bad = metrics.budget_violations(n)
            if bad:
                raise BudgetExceeded(f"n={n}: exceeded {', '.join(bad)}")
            times[k].append(elapsed)
            runs[k].append(metrics)
    rows = []
    prev = None
    for n, ts, ms in zip(sizes, times, runs):
        median = int(statistics.median(ts))
        q = ms[0].bins_opened
        rows.append({
            "n": n,
            "q": q,
            "medianNanos": median,
            "swaps": max(m.swaps for m in ms),
            "cursorAdvances": max(m.cursor_advances for m in ms),
            "loopIterations": max(m.loop_iterations for m in ms),
            "swapBudget": n + q,
            "scanBudget": 2 * n,
            "growth": None if prev is None else median / prev,
        })
        prev = median
    return rows
