"""In-place, linear-time packing of two-weight items.

The item array is permuted in place so that every bin is a contiguous run
of positions; ``D`` records where each bin starts.  Two forward-only
cursors track the first unassigned s-heavy and l-heavy positions.  When an
addition would overflow the dominant dimension, the incoming item is
swapped with the most recent opposite-heavy member of the bin, which
always leaves the bin complete.

Invariants while the main loop runs (positions are 0-based):

* positions ``< end`` are assigned, positions ``>= end`` are not;
* ``sp`` / ``lp`` are the smallest unassigned s-heavy / l-heavy positions
  (``n`` when exhausted), so ``min(sp, lp) == end`` while items remain;
* a bin only receives an item while it is incomplete.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

import numpy as np

from .core import EPS, Instance, ItemExceedsCapacity, Packing


class ItemExceedsUnitCapacity(ItemExceedsCapacity):
    pass


class InvariantViolation(AssertionError):
    """A debug-mode invariant failed; always an implementation bug."""


@dataclass
class Metrics:
    swaps: int = 0
    cursor_advances: int = 0
    bins_opened: int = 0
    overflow_ejections: int = 0
    loop_iterations: int = 0

    def to_dict(self):
        return {
            "swaps": self.swaps,
            "cursorAdvances": self.cursor_advances,
            "binsOpened": self.bins_opened,
            "overflowEjections": self.overflow_ejections,
            "loopIterations": self.loop_iterations,
        }

    def merge(self, other: "Metrics") -> "Metrics":
        a, b = asdict(self), asdict(other)
        return Metrics(**{k: a[k] + b[k] for k in a})

    def budget_violations(self, n):
        """Names of the move/scan/iteration budgets this run exceeded."""
        bad = []
        if self.swaps > n + self.bins_opened:
            bad.append("swaps")
        if self.cursor_advances > 2 * n:
            bad.append("cursorAdvances")
        if self.loop_iterations > 4 * n:
            bad.append("loopIterations")
        return bad


def find_next_s(s, l, j, frontier=0):
    """Smallest position ``p > j`` (and ``>= frontier``) with ``s[p] >= l[p]``.

    Returns ``len(s)`` if there is none.
    """
    n = len(s)
    p = max(j + 1, frontier)
    while p < n and s[p] < l[p]:
        p += 1
    return p


def find_next_l(s, l, j, frontier=0):
    """Smallest position ``p > j`` (and ``>= frontier``) with ``l[p] > s[p]``."""
    n = len(s)
    p = max(j + 1, frontier)
    while p < n and l[p] <= s[p]:
        p += 1
    return p


class PackState:
    """Mutable state of one packing run over the arrays ``s`` and ``l``.

    ``s`` and ``l`` may be Python lists or writable numpy views; they are
    permuted in place.  ``perm``, when given, is permuted alongside so the
    caller can map positions back to original indices.

    The current bin spans positions ``start`` to ``end - 1``; ``D`` holds
    the start position of every bin opened so far.
    """

    def __init__(self, s, l, rho, perm=None, debug=False, observer=None):
        self.s = s
        self.l = l
        self.perm = perm
        self.n = len(s)
        self.rho = rho
        self.threshold = 1.0 - rho - EPS
        self.debug = debug
        self.observer = observer
        self.S = 0.0
        self.L = 0.0
        self.sp = 0
        self.lp = 0
        self.last_s = None
        self.last_l = None
        self.start = 0
        self.end = 0
        self.D = [0]
        self.metrics = Metrics()

    @property
    def i(self):
        """Ordinal (1-based) of the current bin."""
        return len(self.D)

    @property
    def complete(self):
        t = self.threshold
        return self.S >= t and self.L >= t

    def find_next_s(self, j):
        return find_next_s(self.s, self.l, j, self.end)

    def find_next_l(self, j):
        return find_next_l(self.s, self.l, j, self.end)

    def _move_sp(self, p):
        self.metrics.cursor_advances += p - self.sp
        self.sp = p

    def _move_lp(self, p):
        self.metrics.cursor_advances += p - self.lp
        self.lp = p

    def swap(self, a, b):
        s, l = self.s, self.l
        s[a], s[b] = s[b], s[a]
        l[a], l[b] = l[b], l[a]
        if self.perm is not None:
            perm = self.perm
            perm[a], perm[b] = perm[b], perm[a]
        self.metrics.swaps += 1

    def seed(self):
        """Open a bin holding only the item at position ``end``."""
        p = self.end
        s, l = self.s[p], self.l[p]
        self.S, self.L = s, l
        self.start = p
        self.end = p + 1
        if s >= l:
            self.last_s, self.last_l = p, None
            # after an ejection the seed may sit ahead of the cursor
            if self.sp == p:
                self._move_sp(self.find_next_s(p))
        else:
            self.last_s, self.last_l = None, p
            if self.lp == p:
                self._move_lp(self.find_next_l(p))

    def close(self):
        if self.debug and not self.complete:
            raise InvariantViolation(f"closing incomplete bin {self.i}")
        self.D.append(self.end)

    def resolve_overflow(self, incoming, ejected):
        """Swap ``incoming`` into the bin in place of ``ejected``.

        The caller has established that adding ``incoming`` overflows the
        bin's dominant dimension and that ``ejected`` is the latest member
        of the opposite heaviness.  The bin is complete afterwards.
        """
        s, l = self.s, self.l
        if ejected is None:
            raise InvariantViolation("overflow with no opposite-heavy item in bin")
        s_ej, l_ej = s[ejected], l[ejected]
        if self.debug:
            if s[incoming] < l[incoming]:
                gap, slack = self.S - self.L, s_ej - l_ej
            else:
                gap, slack = self.L - self.S, l_ej - s_ej
            if gap > slack + EPS:
                raise InvariantViolation(
                    f"ejection inequality fails in bin {self.i}: "
                    f"{gap!r} > {slack!r}"
                )
        S = self.S + s[incoming]
        L = self.L + l[incoming]
        self.swap(incoming, ejected)
        self.S = S - s_ej
        self.L = L - l_ej
        self.metrics.overflow_ejections += 1
        if self.debug:
            t = self.threshold
            if not (t <= self.S <= 1 + EPS and t <= self.L <= 1 + EPS):
                raise InvariantViolation(
                    f"bin {self.i} incomplete after ejection: "
                    f"S={self.S!r}, L={self.L!r}"
                )
            if self.end >= self.n:
                raise InvariantViolation("ejection left no item to seed the next bin")
        return self

    def add_l(self):
        """Add the first unassigned l-heavy item (S >= L branch)."""
        p = self.lp
        s, l = self.s, self.l
        if self.S + s[p] > 1.0 + EPS:
            self.resolve_overflow(p, self.last_s)
            self._move_lp(self.find_next_l(p))
            self.close()
            self.seed()
            return
        self.S = self.S + s[p]
        self.L = self.L + l[p]
        if self.debug and self.L > 1.0 + EPS:
            raise InvariantViolation(f"bin {self.i} overflows L on an l-heavy add")
        if self.sp < p:
            if self.debug and self.sp != self.end:
                raise InvariantViolation("cursors lost the first unassigned slot")
            self.swap(p, self.end)
            self._move_sp(self.sp + 1)
        self.last_l = self.end
        self.end += 1
        self._move_lp(self.find_next_l(p))

    def add_s(self):
        """Add the first unassigned s-heavy item (L > S branch)."""
        p = self.sp
        s, l = self.s, self.l
        if self.L + l[p] > 1.0 + EPS:
            self.resolve_overflow(p, self.last_l)
            self._move_sp(self.find_next_s(p))
            self.close()
            self.seed()
            return
        self.S = self.S + s[p]
        self.L = self.L + l[p]
        if self.debug and self.S > 1.0 + EPS:
            raise InvariantViolation(f"bin {self.i} overflows S on an s-heavy add")
        if self.lp < p:
            if self.debug and self.lp != self.end:
                raise InvariantViolation("cursors lost the first unassigned slot")
            self.swap(p, self.end)
            self._move_lp(self.lp + 1)
        self.last_s = self.end
        self.end += 1
        self._move_sp(self.find_next_s(p))

    def _check_cursors(self):
        n, end = self.n, self.end
        sp, lp = self.sp, self.lp
        if end < n and min(sp, lp) != end:
            raise InvariantViolation(f"min(sp, lp)={min(sp, lp)} != D_i={end}")
        if sp < n and self.s[sp] < self.l[sp]:
            raise InvariantViolation(f"sp={sp} is not s-heavy")
        if lp < n and self.l[lp] <= self.s[lp]:
            raise InvariantViolation(f"lp={lp} is not l-heavy")

    def _next_fit(self, dominant):
        # remaining items are homogeneous and the open bin leans the same way
        s, l = self.s, self.l
        S, L = self.S, self.L
        t = self.threshold
        for p in range(self.end, self.n):
            sv, lv = s[p], l[p]
            if self.debug and (sv >= lv) != (dominant == 0):
                raise InvariantViolation(f"position {p} breaks the homogeneous tail")
            if S + sv > 1.0 + EPS or L + lv > 1.0 + EPS:
                if self.debug and (S if dominant == 0 else L) < t:
                    raise InvariantViolation(f"tail bin {len(self.D)} closed short")
                self.D.append(p)
                S, L = sv, lv
            else:
                S = S + sv
                L = L + lv
        self.S, self.L = S, L
        self.end = self.n
        if dominant == 0:
            self._move_sp(self.n)
        else:
            self._move_lp(self.n)

    def pack_remaining_s(self):
        """Next-fit over the all-s-heavy tail, continuing the open bin."""
        self._next_fit(0)

    def pack_remaining_l(self):
        """Next-fit over the all-l-heavy tail, continuing the open bin."""
        self._next_fit(1)

    def run(self):
        n = self.n
        if n == 0:
            self.D = [0]
            return self
        self._move_sp(self.find_next_s(-1))
        self._move_lp(self.find_next_l(-1))
        self.seed()
        while self.end < n:
            self.metrics.loop_iterations += 1
            if self.debug:
                self._check_cursors()
            if self.observer is not None:
                self.observer(self)
            if self.S >= self.L:
                if self.lp >= n:
                    break
                if self.complete:
                    self.close()
                    self.seed()
                else:
                    self.add_l()
            else:
                if self.sp >= n:
                    break
                if self.complete:
                    self.close()
                    self.seed()
                else:
                    self.add_s()
        if self.end < n:
            if self.S >= self.L:
                self.pack_remaining_s()
            else:
                self.pack_remaining_l()
        self.D.append(n)
        self.metrics.bins_opened = len(self.D) - 1
        return self


def _check_unit(w):
    bad = np.argwhere((w > 1.0) | (w < 0))
    if len(bad):
        raise ItemExceedsUnitCapacity(int(bad[0, 0]), int(bad[0, 1]))


def pack(instance: Instance, debug=False, observer=None):
    """Pack a 2-D instance; returns ``(Packing, Metrics)``.

    Works on a copy of the weights and reports the resulting permutation
    as ``Packing.order``.  With ``debug`` set, the ejection inequality,
    post-ejection completeness and cursor placement are asserted as the
    run proceeds (:class:`InvariantViolation` on failure).  ``observer`` is
    called with the live :class:`PackState` before every main-loop step.
    """
    if instance.dims != 2:
        raise ValueError("pack expects a 2-D instance; see threedim.pack3")
    w = instance.weights
    _check_unit(w)
    perm = list(range(instance.n))
    state = PackState(w[:, 0].tolist(), w[:, 1].tolist(), instance.rho,
                      perm=perm, debug=debug, observer=observer)
    state.run()
    return Packing(perm, state.D), state.metrics


def pack_inplace(buffer: np.ndarray, rho=None, debug=False):
    """Pack a writable ``(n, 2)`` float array by permuting its rows.

    No index map is kept; the only allocation that grows with the input is
    the boundary list.  Returns ``(boundaries, Metrics)`` with 0-based
    boundaries into the permuted buffer.
    """
    if buffer.ndim != 2 or buffer.shape[1] != 2:
        raise ValueError("buffer must have shape (n, 2)")
    _check_unit(buffer)
    if rho is None:
        rho = float(buffer.max()) if buffer.size else 0.0
    state = PackState(buffer[:, 0], buffer[:, 1], rho, debug=debug)
    state.run()
    return state.D, state.metrics
