"""Linear-time, in-place packing of items with two (or three) weights."""

from .baselines import pack_ffd, pack_first_fit, pack_reference
from .core import (
    EPS,
    Instance,
    Instance3,
    Item,
    Item3,
    ItemExceedsCapacity,
    MalformedBoundaries,
    NegativeWeight,
    NonPositiveCapacity,
    NotAPermutation,
    Packing,
    PackingError,
    RawInstance,
    VerificationReport,
    is_s_heavy,
    normalize,
    verify,
)
from .generators import DISTRIBUTIONS, generate
from .oracle import InstanceTooLarge, OptResult, lower_bound, optimal_bins
from .packdisks import InvariantViolation, Metrics, pack, pack_inplace
from .threedim import pack3

__version__ = "0.1.0"

__all__ = [
    "DISTRIBUTIONS", "EPS", "Instance", "Instance3", "InstanceTooLarge",
    "Item", "Item3", "ItemExceedsCapacity", "InvariantViolation",
    "MalformedBoundaries", "Metrics", "NegativeWeight", "NonPositiveCapacity",
    "NotAPermutation", "OptResult", "Packing", "PackingError", "RawInstance",
    "VerificationReport", "generate", "is_s_heavy", "lower_bound", "normalize",
    "optimal_bins", "pack", "pack3", "pack_ffd", "pack_first_fit",
    "pack_inplace", "pack_reference", "verify",
]
