"""Sentinel-guarded buffer, the two opposing heap orientations, and
bottom-up heap construction (serial and parallel).

Layout convention used throughout the package:

* payload occupies 1-based positions ``1..n`` of an ``n+2``-slot buffer;
  slot 0 holds a value <= every payload value (low sentinel) and slot
  ``n+1`` a value >= every payload value (high sentinel);
* a min-rooted heap places node ``j`` at ``buf[base + j]``; the slot one
  past its last node must read as a high guard (the sentinel, or a
  partition neighbour known to dominate the heap), which is what lets the
  child-selection read ``buf[base + j + 1]`` skip a bounds check;
* a max-rooted heap is mirrored: node ``k`` sits at ``buf[base - k]``, so
  its root lands at the high end of its region. When the node count is odd
  every internal node has two children and no guard read happens at all;
  with an even count the extra read falls on the low sentinel, which can
  never win a max-comparison.

Node indices are 1-based so the usual parent/child arithmetic (``2j``,
``2j+1``, ``j//2``) applies literally. Equal children resolve to the left
child (strict comparisons), which keeps counter values reproducible
bit-for-bit across implementations.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .metrics import Metrics

Element = int


@dataclass
class SentinelArray:
    """``n`` payload elements at positions 1..n plus the two guard slots."""

    buf: list[Element]
    n: int

    def payload(self) -> list[Element]:
        return self.buf[1 : self.n + 1]


class LargeHeapView:
    """Min-rooted heap over buffer positions ``base+1 .. base+lhn``."""

    __slots__ = ("buf", "base", "lhn")

    def __init__(self, buf: list[Element], base: int, lhn: int):
        self.buf = buf
        self.base = base
        self.lhn = lhn

    def node(self, j: int) -> Element:
        return self.buf[self.base + j]

    def nodes(self) -> list[Element]:
        return self.buf[self.base + 1 : self.base + self.lhn + 1]


class SmallHeapView:
    """Max-rooted heap mirrored over buffer positions ``base-shn .. base-1``."""

    __slots__ = ("buf", "base", "shn")

    def __init__(self, buf: list[Element], base: int, shn: int):
        self.buf = buf
        self.base = base
        self.shn = shn

    def node(self, k: int) -> Element:
        return self.buf[self.base - k]

    def nodes(self) -> list[Element]:
        """Node values in node-index order (root first)."""
        out = self.buf[self.base - self.shn : self.base]
        out.reverse()
        return out


@dataclass
class DualHeap:
    """Split view over one buffer: a mirrored max-rooted heap on the low
    segment and a min-rooted heap on the high segment, roots adjacent."""

    array: SentinelArray
    small: SmallHeapView
    large: LargeHeapView


def split_indices(n: int, k: int) -> tuple[int, int]:
    """Heap sizes for selecting the k-th smallest of n: the small side gets
    k rounded down to odd, the large side the rest."""
    if not 1 <= k <= n:
        raise IndexError(f"selection index k={k} out of range 1..{n}")
    shn = k if k & 1 else k - 1
    return shn, n - shn


def sift_down_min(view: LargeHeapView, k: int, ctx: Metrics) -> None:
    """Sink node k until the min-heap condition holds on its subtree.

    Requires the condition to already hold below node k, and the slot one
    past the heap to read as a high guard. A node without children is left
    untouched at zero cost.
    """
    buf = view.buf
    base = view.base
    hn = view.lhn
    j = 2 * k
    if j > hn:
        return
    tally = ctx.active
    v = buf[base + k]
    c = 2
    if buf[base + j + 1] < buf[base + j]:
        j += 1
    if buf[base + j] < v:
        m = 0
        while True:
            buf[base + k] = buf[base + j]
            m += 1
            k = j
            j = 2 * k
            if j > hn:
                break
            c += 2
            if buf[base + j + 1] < buf[base + j]:
                j += 1
            if not buf[base + j] < v:
                break
        buf[base + k] = v
        tally.moves += m + 1
    tally.compares += c


def sift_down_max(view: SmallHeapView, k: int, ctx: Metrics) -> None:
    """Mirror image of sift_down_min: sink node k in the max-rooted heap."""
    buf = view.buf
    base = view.base
    hn = view.shn
    j = 2 * k
    if j > hn:
        return
    tally = ctx.active
    v = buf[base - k]
    c = 2
    if buf[base - j - 1] > buf[base - j]:
        j += 1
    if buf[base - j] > v:
        m = 0
        while True:
            buf[base - k] = buf[base - j]
            m += 1
            k = j
            j = 2 * k
            if j > hn:
                break
            c += 2
            if buf[base - j - 1] > buf[base - j]:
                j += 1
            if not buf[base - j] > v:
                break
        buf[base - k] = v
        tally.moves += m + 1
    tally.compares += c


def build_min_heap(view: LargeHeapView, ctx: Metrics) -> None:
    """Bottom-up construction: sift every internal node, deepest first."""
    for i in range(view.lhn // 2, 0, -1):
        sift_down_min(view, i, ctx)


def build_max_heap(view: SmallHeapView, ctx: Metrics) -> None:
    for i in range(view.shn // 2, 0, -1):
        sift_down_max(view, i, ctx)


@dataclass(frozen=True)
class ParallelPlan:
    """Work split for building a heap of ``2**m - 1`` nodes with ``2**q``
    workers: each worker owns one of the deepest disjoint subtrees, then the
    remaining sifts run level by level toward the root."""

    m: int
    q: int

    @property
    def p(self) -> int:
        return 1 << self.q

    @property
    def subheap_size(self) -> int:
        return (1 << (self.m - self.q)) - 1

    @property
    def residual_sifts(self) -> int:
        return (1 << self.q) - 1


def plan_parallel_build(lhn: int, workers: int) -> ParallelPlan:
    if lhn < 1 or lhn & (lhn + 1):
        raise ValueError(f"parallel build needs a node count of form 2**m - 1, got {lhn}")
    if workers < 1 or workers & (workers - 1):
        raise ValueError(f"worker count must be a power of two, got {workers}")
    m = (lhn + 1).bit_length() - 1
    q = workers.bit_length() - 1
    if q > m:
        raise ValueError(f"{workers} workers exceed the {lhn}-node heap's {m} levels")
    return ParallelPlan(m=m, q=q)


def _subtree_internal_nodes(root: int, hn: int) -> list[int]:
    """Internal nodes of the subtree rooted at ``root``, by increasing level."""
    nodes = []
    lo = hi = root
    while 2 * lo <= hn:
        nodes.extend(range(lo, hi + 1))
        lo, hi = 2 * lo, 2 * hi + 1
    return nodes


def build_min_heap_parallel(view: LargeHeapView, workers: int, ctx: Metrics) -> None:
    """Parallel bottom-up construction with the same result and counter
    totals as the serial builder.

    The p deepest disjoint subtrees are built concurrently; the residual
    sifts then run a level at a time (nodes within a level own disjoint
    subtrees), with a barrier between levels. Each task counts into its own
    context; the contexts are merged into ``ctx`` by summation.
    """
    plan = plan_parallel_build(view.lhn, workers)
    if plan.q == 0:
        build_min_heap(view, ctx)
        return
    p = plan.p
    phase = ctx.phase

    def sift_range(nodes: list[int]) -> Metrics:
        wctx = Metrics()
        wctx.set_phase(phase)
        for i in nodes:
            sift_down_min(view, i, wctx)
        return wctx

    def subtree_job(root: int) -> Metrics:
        nodes = _subtree_internal_nodes(root, view.lhn)
        nodes.reverse()
        return sift_range(nodes)

    done: list[Metrics] = []
    with ThreadPoolExecutor(max_workers=p) as pool:
        done.extend(pool.map(subtree_job, range(p, 2 * p)))
        hi = p - 1
        while hi >= 1:
            lo = (hi + 1) // 2
            done.extend(pool.map(lambda i: sift_range([i]), range(hi, lo - 1, -1)))
            hi = lo - 1
    for wctx in done:
        ctx.merge(wctx)


def check_heap_condition(view) -> bool:
    """True iff every parent dominates both children per the view's
    orientation. A validator, so it is deliberately uncounted."""
    if isinstance(view, SmallHeapView):
        buf, base, hn = view.buf, view.base, view.shn
        for i in range(1, hn // 2 + 1):
            j = 2 * i
            if buf[base - i] < buf[base - j]:
                return False
            if j + 1 <= hn and buf[base - i] < buf[base - j - 1]:
                return False
        return True
    buf, base, hn = view.buf, view.base, view.lhn
    for i in range(1, hn // 2 + 1):
        j = 2 * i
        if buf[base + j] < buf[base + i]:
            return False
        if j + 1 <= hn and buf[base + j + 1] < buf[base + i]:
            return False
    return True
