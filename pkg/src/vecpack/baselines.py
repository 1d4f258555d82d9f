"""Reference and greedy packers used as oracles and benchmark baselines."""

from __future__ import annotations

import numpy as np

from .core import EPS, Instance, Packing


def pack_reference(instance: Instance) -> Packing:
    """Quadratic re-statement of the linear packer's decision rule.

    The unassigned items are kept as an explicit list in array order and
    searched from the front for every step.  Taking an item from the middle
    of the list moves the front item into its slot, and an ejected item
    takes the slot of the item that displaced it; this mirrors the in-place
    array exactly, so the result (order and bins) is identical to
    :func:`vecpack.packdisks.pack`.
    """
    w = instance.weights[:, :2].tolist()
    n = len(w)
    if n == 0:
        return Packing([], [0])
    threshold = 1.0 - instance.rho - EPS
    pool = list(range(n))
    bins = []

    def s_heavy(i):
        return w[i][0] >= w[i][1]

    def first(want_s):
        for k, i in enumerate(pool):
            if s_heavy(i) == want_s:
                return k
        return None

    def open_bin():
        i = pool.pop(0)
        last = {True: None, False: None}
        last[s_heavy(i)] = 0
        return [i], w[i][0], w[i][1], last

    cur, S, L, last = open_bin()
    while pool:
        want_s = not S >= L
        k = first(want_s)
        if k is None:
            break
        if S >= threshold and L >= threshold:
            bins.append(cur)
            cur, S, L, last = open_bin()
            continue
        i = pool[k]
        dom = 1 if want_s else 0
        if (L if want_s else S) + w[i][dom] > 1.0 + EPS:
            slot = last[not want_s]
            ejected = cur[slot]
            S2, L2 = S + w[i][0], L + w[i][1]
            cur[slot] = i
            pool[k] = ejected
            S, L = S2 - w[ejected][0], L2 - w[ejected][1]
            bins.append(cur)
            cur, S, L, last = open_bin()
            continue
        S = S + w[i][0]
        L = L + w[i][1]
        if k:
            pool[k] = pool[0]
        del pool[0]
        cur.append(i)
        last[want_s] = len(cur) - 1

    for i in pool:
        if S + w[i][0] > 1.0 + EPS or L + w[i][1] > 1.0 + EPS:
            bins.append(cur)
            cur, S, L = [i], w[i][0], w[i][1]
        else:
            cur.append(i)
            S = S + w[i][0]
            L = L + w[i][1]
    bins.append(cur)
    return Packing.from_bins(bins)


def _first_fit(w, order):
    loads = []
    bins = []
    for i in order:
        row = w[i]
        for b, load in enumerate(loads):
            if all(x + y <= 1.0 + EPS for x, y in zip(load, row)):
                loads[b] = [x + y for x, y in zip(load, row)]
                bins[b].append(i)
                break
        else:
            loads.append(list(row))
            bins.append([i])
    return Packing.from_bins(bins)


def pack_first_fit(instance: Instance) -> Packing:
    """Each item, in input order, goes to the lowest-index bin it fits."""
    w = instance.weights.tolist()
    return _first_fit(w, range(len(w)))


def pack_ffd(instance: Instance) -> Packing:
    """First fit on items sorted by largest weight, descending (stable)."""
    w = instance.weights
    key = w.max(axis=1) if len(w) else np.zeros(0)
    order = np.argsort(-key, kind="stable")
    return _first_fit(w.tolist(), order.tolist())
