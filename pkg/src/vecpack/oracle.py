"""Exact minimum bin counts for small instances, plus the volume bound."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .baselines import pack_ffd
from .core import EPS, Instance, Packing

DEFAULT_LIMIT = 14


class InstanceTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class OptResult:
    bins: int
    assignment: tuple  # bin index (0-based) per original item

    def packing(self) -> Packing:
        return Packing.from_assignment(self.assignment, self.bins)


def lower_bound(instance: Instance) -> int:
    """``ceil`` of the largest per-dimension weight total; 0 when empty.

    Any non-empty instance needs at least one bin, so all-zero items give 1.
    """
    if instance.n == 0:
        return 0
    total = float(instance.weights.sum(axis=0).max())
    return max(1, math.ceil(total - EPS))


def optimal_bins(instance: Instance, limit: int = DEFAULT_LIMIT) -> OptResult:
    """Branch and bound over item-to-bin assignments.

    Items are branched in decreasing order of their largest weight.  An
    item may join any open bin it fits or open exactly one new bin, and
    open bins with identical loads are tried once.  The search stops as
    soon as it meets :func:`lower_bound`.  Works for any dimension count.
    """
    n = instance.n
    if n > limit:
        raise InstanceTooLarge(f"n={n} exceeds the oracle limit of {limit}")
    if n == 0:
        return OptResult(0, ())
    w = instance.weights
    order = np.argsort(-w.max(axis=1), kind="stable").tolist()
    rows = [tuple(w[i].tolist()) for i in order]
    dims = w.shape[1]
    floor = lower_bound(instance)

    # start from first-fit decreasing; the search only has to beat it
    ffd = pack_ffd(instance)
    best = [ffd.q]
    best_assign = [None]
    ffd_assign = [0] * n
    for b, members in enumerate(ffd.bins()):
        for i in members.tolist():
            ffd_assign[i] = b
    best_assign[0] = ffd_assign

    # remaining[k][d] = weight still to place from position k on
    remaining = [[0.0] * dims for _ in range(n + 1)]
    for k in range(n - 1, -1, -1):
        remaining[k] = [remaining[k + 1][d] + rows[k][d] for d in range(dims)]

    loads = []
    chosen = [0] * n

    def search(k):
        if best[0] <= floor:
            return
        if k == n:
            if len(loads) < best[0]:
                best[0] = len(loads)
                a = [0] * n
                for pos, b in enumerate(chosen):
                    a[order[pos]] = b
                best_assign[0] = a
            return
        # volume bound on the bins still needed
        used = len(loads)
        for d in range(dims):
            free = sum(1.0 - ld[d] for ld in loads)
            extra = math.ceil(remaining[k][d] - free - EPS)
            if used + max(extra, 0) >= best[0]:
                return
        row = rows[k]
        seen = set()
        for b in range(used):
            ld = loads[b]
            key = tuple(ld)
            if key in seen:
                continue
            seen.add(key)
            if all(ld[d] + row[d] <= 1.0 + EPS for d in range(dims)):
                old = ld[:]
                for d in range(dims):
                    ld[d] += row[d]
                chosen[k] = b
                search(k + 1)
                loads[b] = old
                if best[0] <= floor:
                    return
        if used + 1 < best[0]:
            loads.append(list(row))
            chosen[k] = used
            search(k + 1)
            loads.pop()

    search(0)
    return OptResult(best[0], tuple(best_assign[0]))
