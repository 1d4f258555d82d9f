"""Domain types, normalization and packing verification.

Weights are stored as a float array of shape ``(n, d)`` with ``d`` in
``{2, 3}``; column 0 is the size weight ``s``, column 1 the load weight
``l`` and (for 3-D instances) column 2 the third weight ``t``.  All weights
are fractions of a unit bin capacity.

Positions and item indices are 0-based in Python.  The JSON wire format
(see :meth:`Packing.to_dict`) is 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

import numpy as np

#: Absolute tolerance for every capacity and completeness comparison.
EPS = 1e-9

ALL_COMPLETE = "all-complete"
ALL_S_COMPLETE = "all-s-complete"
ALL_L_COMPLETE = "all-l-complete"
VIOLATION = "violation"

_DIM_NAMES = ("size", "load", "third")


class PackingError(ValueError):
    """Base class for input and packing-structure errors."""


class ItemExceedsCapacity(PackingError):
    def __init__(self, index, dimension):
        self.index = index
        self.dimension = dimension
        super().__init__(
            f"item {index + 1} exceeds the bin capacity in the "
            f"{_DIM_NAMES[dimension]} dimension"
        )


class NonPositiveCapacity(PackingError):
    pass


class NegativeWeight(PackingError):
    def __init__(self, index, dimension):
        self.index = index
        self.dimension = dimension
        super().__init__(
            f"item {index + 1} has a negative {_DIM_NAMES[dimension]} weight"
        )


class MalformedBoundaries(PackingError):
    pass


class NotAPermutation(PackingError):
    pass


class Item(NamedTuple):
    s: float
    l: float


class Item3(NamedTuple):
    s: float
    l: float
    t: float


class Instance:
    """An ordered array of normalized items plus the ratio ``rho``.

    ``rho`` defaults to the largest weight in the instance.  A caller may
    pass a larger value (up to 1) when it is known as a global constraint.
    """

    def __init__(self, weights, rho: Optional[float] = None):
        w = np.array(weights, dtype=np.float64)
        if w.size == 0:
            w = w.reshape(0, 2 if w.ndim < 2 else w.shape[1])
        if w.ndim != 2 or w.shape[1] not in (2, 3):
            raise ValueError("weights must have shape (n, 2) or (n, 3)")
        _check_unit_weights(w)
        w.setflags(write=False)
        self.weights = w
        derived = float(w.max()) if w.size else 0.0
        if rho is None:
            rho = derived
        elif not derived <= rho <= 1.0:
            raise ValueError(
                f"rho={rho} must lie in [{derived}, 1] (the largest weight)"
            )
        self.rho = float(rho)

    @classmethod
    def from_items(cls, items: Sequence[Sequence[float]], rho=None):
        return cls(list(items), rho=rho)

    @property
    def n(self) -> int:
        return self.weights.shape[0]

    @property
    def dims(self) -> int:
        return self.weights.shape[1]

    @property
    def items(self):
        kind = Item if self.dims == 2 else Item3
        return [kind(*row) for row in self.weights.tolist()]

    def project(self, dims=2) -> "Instance":
        """Drop trailing dimensions, keeping ``rho``."""
        return Instance(self.weights[:, :dims], rho=self.rho)

    def __len__(self):
        return self.n

    def __repr__(self):
        return f"Instance(n={self.n}, dims={self.dims}, rho={self.rho:.6g})"


def Instance3(weights, rho=None) -> Instance:
    inst = Instance(weights, rho=rho)
    if inst.dims != 3:
        raise ValueError("a 3-D instance needs three weights per item")
    return inst


def _check_unit_weights(w):
    bad = np.argwhere(w < 0)
    if len(bad):
        raise NegativeWeight(int(bad[0, 0]), int(bad[0, 1]))
    bad = np.argwhere(w > 1.0)
    if len(bad):
        raise ItemExceedsCapacity(int(bad[0, 0]), int(bad[0, 1]))


@dataclass(frozen=True)
class RawInstance:
    """Unnormalized (size, load) pairs with the two bin capacities."""

    items: Sequence[Sequence[float]]
    cap_s: float
    cap_l: float


def normalize(raw: RawInstance) -> Instance:
    if not raw.cap_s > 0 or not raw.cap_l > 0:
        raise NonPositiveCapacity(
            f"capacities must be positive, got ({raw.cap_s}, {raw.cap_l})"
        )
    w = np.array(raw.items, dtype=np.float64).reshape(-1, 2)
    caps = np.array([raw.cap_s, raw.cap_l], dtype=np.float64)
    bad = np.argwhere(w < 0)
    if len(bad):
        raise NegativeWeight(int(bad[0, 0]), int(bad[0, 1]))
    bad = np.argwhere(w > caps)
    if len(bad):
        raise ItemExceedsCapacity(int(bad[0, 0]), int(bad[0, 1]))
    # x / cap can round above 1 only when x == cap
    return Instance(np.minimum(w / caps, 1.0))


def is_s_heavy(item) -> bool:
    """Ties count as s-heavy."""
    return item[0] >= item[1]


def is_complete(S, L, rho) -> bool:
    threshold = 1.0 - rho - EPS
    return threshold <= S <= 1.0 + EPS and threshold <= L <= 1.0 + EPS


@dataclass
class Packing:
    """A permutation of item indices cut into contiguous bins.

    ``order[k]`` is the original index of the item at position ``k``;
    bin ``i`` holds positions ``boundaries[i]`` to ``boundaries[i+1] - 1``.
    """

    order: np.ndarray
    boundaries: np.ndarray

    def __post_init__(self):
        self.order = np.asarray(self.order, dtype=np.int64).reshape(-1)
        self.boundaries = np.asarray(self.boundaries, dtype=np.int64).reshape(-1)

    @property
    def q(self) -> int:
        return max(len(self.boundaries) - 1, 0)

    @property
    def n(self) -> int:
        return len(self.order)

    def bins(self):
        b = self.boundaries
        return [self.order[b[i]:b[i + 1]] for i in range(self.q)]

    def partition(self):
        """The bins as a sorted list of sorted index tuples (order-free)."""
        return sorted(tuple(sorted(x.tolist())) for x in self.bins())

    @classmethod
    def from_bins(cls, bins) -> "Packing":
        order, boundaries = [], [0]
        for members in bins:
            order.extend(int(i) for i in members)
            boundaries.append(len(order))
        return cls(order, boundaries)

    @classmethod
    def from_assignment(cls, assignment, q=None) -> "Packing":
        assignment = list(assignment)
        if q is None:
            q = max(assignment, default=-1) + 1
        bins = [[] for _ in range(q)]
        for item, b in enumerate(assignment):
            bins[b].append(item)
        return cls.from_bins(bins)

    def to_dict(self):
        return {
            "order": (self.order + 1).tolist(),
            "boundaries": (self.boundaries + 1).tolist(),
            "q": self.q,
        }

    @classmethod
    def from_dict(cls, data) -> "Packing":
        order = np.asarray(data["order"], dtype=np.int64) - 1
        return cls(order, np.asarray(data["boundaries"], dtype=np.int64) - 1)


@dataclass(frozen=True)
class BinSummary:
    sums: tuple
    s_complete: bool
    l_complete: bool

    @property
    def S(self):
        return self.sums[0]

    @property
    def L(self):
        return self.sums[1]

    @property
    def complete(self):
        return self.s_complete and self.l_complete

    def to_dict(self):
        d = {"S": self.sums[0], "L": self.sums[1]}
        if len(self.sums) > 2:
            d["T"] = self.sums[2]
        d.update(sComplete=self.s_complete, lComplete=self.l_complete,
                 complete=self.complete)
        return d


@dataclass(frozen=True)
class VerificationReport:
    feasible: bool
    per_bin: tuple
    case_class: str
    rho: float
    q: int
    bound_ok: Optional[bool] = None
    reference_bins: Optional[int] = None
    infeasible_bins: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return self.feasible and self.case_class != VIOLATION

    def to_dict(self):
        return {
            "feasible": self.feasible,
            "caseClass": self.case_class,
            "q": self.q,
            "rho": self.rho,
            "boundOk": self.bound_ok,
            "referenceBins": self.reference_bins,
            "infeasibleBins": [i + 1 for i in self.infeasible_bins],
            "perBin": [b.to_dict() for b in self.per_bin],
        }


def check_packing(n, packing: Packing):
    """Raise unless ``packing`` is a well-formed partition of ``n`` items."""
    b = packing.boundaries
    if len(b) == 0 or b[0] != 0 or b[-1] != n:
        raise MalformedBoundaries(
            f"boundaries must start at position 1 and end at {n + 1}"
        )
    if np.any(np.diff(b) <= 0):
        raise MalformedBoundaries("boundaries must be strictly increasing")
    order = packing.order
    if len(order) != n or not np.array_equal(np.sort(order), np.arange(n)):
        raise NotAPermutation("order is not a permutation of the item indices")


def bin_sums(instance: Instance, packing: Packing) -> np.ndarray:
    """Per-bin weight sums, shape ``(q, d)``."""
    if packing.q == 0:
        return np.zeros((0, instance.dims))
    w = instance.weights[packing.order]
    return np.add.reduceat(w, packing.boundaries[:-1], axis=0)


def classify(per_bin) -> str:
    """Completeness pattern over every bin except the last."""
    body = per_bin[:-1]
    if all(b.complete for b in body):
        return ALL_COMPLETE
    if all(b.s_complete for b in body):
        return ALL_S_COMPLETE
    if all(b.l_complete for b in body):
        return ALL_L_COMPLETE
    return VIOLATION


def approximation_bound(reference_bins, rho):
    """``reference_bins / (1 - rho) + 1``; ``None`` when ``rho == 1``."""
    if rho >= 1.0:
        return None
    return reference_bins / (1.0 - rho) + 1.0


def verify(instance: Instance, packing: Packing,
           reference_bins: Optional[int] = None) -> VerificationReport:
    """Independently recompute bin sums and classify a packing.

    Feasibility is checked in every dimension of the instance; the
    completeness flags only look at the first two.  When
    ``reference_bins`` is given, ``bound_ok`` certifies
    ``q <= reference_bins / (1 - rho) + 1`` (left as ``None`` for rho = 1).
    """
    check_packing(instance.n, packing)
    sums = bin_sums(instance, packing)
    threshold = 1.0 - instance.rho - EPS
    per_bin, infeasible = [], []
    for i, row in enumerate(sums.tolist()):
        if any(x > 1.0 + EPS for x in row):
            infeasible.append(i)
        per_bin.append(BinSummary(
            sums=tuple(row),
            s_complete=threshold <= row[0] <= 1.0 + EPS,
            l_complete=threshold <= row[1] <= 1.0 + EPS,
        ))
    bound_ok = None
    if reference_bins is not None:
        limit = approximation_bound(reference_bins, instance.rho)
        if limit is not None:
            bound_ok = packing.q <= limit + EPS
    return VerificationReport(
        feasible=not infeasible,
        per_bin=tuple(per_bin),
        case_class=classify(per_bin),
        rho=instance.rho,
        q=packing.q,
        bound_ok=bound_ok,
        reference_bins=reference_bins,
        infeasible_bins=tuple(infeasible),
    )

