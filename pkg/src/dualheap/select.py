"""End-to-end dualheap selection and the recursive partition sorter.

Selection pivots about an address rather than a value: the buffer is split
at the largest odd index not exceeding k, a mirrored max-rooted heap is
built below the split and a min-rooted heap above it, and the swapping
phase then exchanges values until the two roots agree. Afterwards position
k holds the k-th smallest value and the buffer is partitioned around it.

``dh_select`` mutates its buffer in place; the partition is part of the
contract, not an accident. ``dh_select_copy`` wraps it for callers that
want their input untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DualHeap,
    Element,
    LargeHeapView,
    SentinelArray,
    SmallHeapView,
    build_max_heap,
    build_min_heap,
    build_min_heap_parallel,
    split_indices,
)
from .metrics import Metrics
from .swaps import STRATEGIES, run_swapping_phase

PRESPLITS = (0, 1, 2)


@dataclass(frozen=True)
class SelectOptions:
    """Knobs for the dualheap algorithm: which swap strategy runs the
    swapping phase, and how many whole-array heap constructions precede the
    split (one is the default and empirically the sweet spot)."""

    strategy: str = "tree"
    presplit: int = 1

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown swap strategy {self.strategy!r}, expected one of {STRATEGIES}")
        if self.presplit not in PRESPLITS:
            raise ValueError(f"presplit must be one of {PRESPLITS}, got {self.presplit!r}")


@dataclass
class SelectOutcome:
    value: Element
    split: int
    metrics: Metrics


def prepare_buffer(values) -> SentinelArray:
    """Copy values into a fresh sentinel-guarded buffer. One scan finds the
    minimum and maximum, which serve as the low and high guards."""
    values = list(values)
    if not values:
        raise ValueError("cannot build a sentinel buffer from an empty input")
    lo = min(values)
    hi = max(values)
    return SentinelArray(buf=[lo, *values, hi], n=len(values))


def _is_parallel_shape(n: int, workers: int) -> bool:
    return (
        workers > 1
        and n >= 1
        and n & (n + 1) == 0
        and workers & (workers - 1) == 0
        and workers <= n + 1
    )


def _construct(buf, off: int, n: int, k: int, presplit: int, ctx: Metrics, workers: int = 1) -> tuple[int, int]:
    """Construction phase over the segment at positions off+1 .. off+n.

    Returns (shn, lhn). Positions off and off+n+1 must already hold the
    segment's guards.
    """
    ctx.set_phase("construct")
    if presplit >= 1:
        full = LargeHeapView(buf, off, n)
        if _is_parallel_shape(n, workers):
            build_min_heap_parallel(full, workers, ctx)
        else:
            build_min_heap(full, ctx)
    if presplit == 2:
        build_max_heap(SmallHeapView(buf, off + n + 1, n), ctx)
    shn, lhn = split_indices(n, k)
    build_max_heap(SmallHeapView(buf, off + shn + 1, shn), ctx)
    build_min_heap(LargeHeapView(buf, off + shn, lhn), ctx)
    return shn, lhn


def _select_segment(arr: SentinelArray, off: int, n: int, k: int, opts: SelectOptions, ctx: Metrics, workers: int = 1) -> int:
    shn, lhn = _construct(arr.buf, off, n, k, opts.presplit, ctx, workers)
    dh = DualHeap(
        array=arr,
        small=SmallHeapView(arr.buf, off + shn + 1, shn),
        large=LargeHeapView(arr.buf, off + shn, lhn),
    )
    run_swapping_phase(dh, opts.strategy, ctx)
    return shn


def construct_dualheap(arr: SentinelArray, k: int, presplit: int = 1, ctx: Metrics | None = None, workers: int = 1) -> DualHeap:
    """Run only the construction phase and hand back the two heap views,
    ready for a swapping phase. Useful for inspecting the phase boundary."""
    if ctx is None:
        ctx = Metrics()
    if not 1 <= k <= arr.n:
        raise IndexError(f"selection index k={k} out of range 1..{arr.n}")
    shn, lhn = _construct(arr.buf, 0, arr.n, k, presplit, ctx, workers)
    return DualHeap(
        array=arr,
        small=SmallHeapView(arr.buf, shn + 1, shn),
        large=LargeHeapView(arr.buf, shn, lhn),
    )


def dh_select(arr: SentinelArray, k: int, opts: SelectOptions | None = None, ctx: Metrics | None = None, workers: int = 1) -> SelectOutcome:
    """Select the k-th smallest element (1-based), partitioning the buffer
    around position k as a side effect: everything left of k ends up <= the
    returned value, everything right of it >=."""
    if opts is None:
        opts = SelectOptions()
    if ctx is None:
        ctx = Metrics()
    if not 1 <= k <= arr.n:
        raise IndexError(f"selection index k={k} out of range 1..{arr.n}")
    shn = _select_segment(arr, 0, arr.n, k, opts, ctx, workers)
    return SelectOutcome(value=arr.buf[k], split=shn, metrics=ctx)


def dh_select_copy(values, k: int, opts: SelectOptions | None = None, ctx: Metrics | None = None) -> SelectOutcome:
    """Convenience wrapper that leaves the caller's sequence untouched."""
    return dh_select(prepare_buffer(values), k, opts, ctx)


def verify_partition(arr: SentinelArray, k: int) -> bool:
    """True iff positions 1..k-1 hold values <= buf[k] and positions
    k+1..n hold values >= buf[k]."""
    buf = arr.buf
    v = buf[k]
    for i in range(1, k):
        if buf[i] > v:
            return False
    for i in range(k + 1, arr.n + 1):
        if buf[i] < v:
            return False
    return True


def _sort_segment(arr: SentinelArray, off: int, n: int, opts: SelectOptions, ctx: Metrics) -> None:
    if n <= 1:
        return
    k = (n + 1) // 2
    _select_segment(arr, off, n, k, opts, ctx)
    _sort_segment(arr, off, k - 1, opts, ctx)
    _sort_segment(arr, off + k, n - k, opts, ctx)


def dh_sort(values, opts: SelectOptions | None = None, ctx: Metrics | None = None) -> list[Element]:
    """Sort by recursive partitioning: select each segment's median address,
    then recurse into both halves. Placed partition elements act as the
    sub-segments' guards, so the initial sentinels are the only extras."""
    if opts is None:
        opts = SelectOptions()
    if ctx is None:
        ctx = Metrics()
    values = list(values)
    if not values:
        return []
    arr = prepare_buffer(values)
    _sort_segment(arr, 0, arr.n, opts, ctx)
    return arr.payload()
