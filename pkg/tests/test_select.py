import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualheap import (
    InputSpec,
    LargeHeapView,
    Metrics,
    SelectOptions,
    build_min_heap,
    construct_dualheap,
    dh_select,
    dh_select_copy,
    dh_sort,
    generate,
    oracle_select,
    prepare_buffer,
    verify_partition,
)
from conftest import same_multiset


# --- prepare_buffer ----------------------------------------------------------


def test_prepare_buffer_sentinels_from_scan():
    arr = prepare_buffer([3, 1, 2])
    assert arr.buf == [1, 3, 1, 2, 3]
    assert arr.n == 3


def test_prepare_buffer_single_element():
    assert prepare_buffer([7]).buf == [7, 7, 7]


def test_prepare_buffer_all_equal():
    assert prepare_buffer([4, 4]).buf == [4, 4, 4, 4]


def test_prepare_buffer_empty_rejected():
    with pytest.raises(ValueError):
        prepare_buffer([])


# --- dh_select ---------------------------------------------------------------


def test_select_traced_example():
    # [3,1,2], k=2: whole-array min heap first, then split at 1
    arr = prepare_buffer([3, 1, 2])
    ctx = Metrics()
    ctx.set_phase("construct")
    build_min_heap(LargeHeapView(arr.buf, 0, 3), ctx)
    assert arr.payload() == [1, 3, 2]

    arr = prepare_buffer([3, 1, 2])
    ctx = Metrics()
    dh = construct_dualheap(arr, 2, presplit=1, ctx=ctx)
    assert dh.small.shn == 1
    assert dh.small.nodes() == [1]
    assert sorted(dh.large.nodes()) == [2, 3]
    assert dh.large.node(1) == 2
    out = dh_select(prepare_buffer([3, 1, 2]), 2, SelectOptions(strategy="tree", presplit=1))
    assert out.value == 2
    assert out.split == 1


def test_select_five_values():
    out = dh_select(prepare_buffer([5, 3, 9, 1, 7]), 3)
    assert out.value == 5


def test_select_all_equal():
    assert dh_select(prepare_buffer([4, 4, 4, 4]), 2).value == 4


def test_select_singleton_reads_high_sentinel_guard():
    out = dh_select(prepare_buffer([6]), 1)
    assert out.value == 6
    assert out.split == 1
    assert out.metrics.compares_swap == 1  # just the guard against the sentinel


def test_select_bounds_errors():
    arr = prepare_buffer([1, 2, 3])
    with pytest.raises(IndexError):
        dh_select(arr, 0)
    with pytest.raises(IndexError):
        dh_select(arr, 4)


def test_select_partition_side_effect():
    arr = prepare_buffer([8, 6, 7, 5, 3, 0, 9, 1, 4, 2])
    out = dh_select(arr, 4)
    assert out.value == 3
    assert verify_partition(arr, 4)
    assert same_multiset(arr.payload(), range(10))


def test_select_copy_leaves_input_alone():
    values = [9, 4, 6, 1]
    out = dh_select_copy(values, 2)
    assert out.value == 4
    assert values == [9, 4, 6, 1]


def test_parity_both_split_paths():
    values = [12, 3, 7, 9, 1, 5, 11, 2, 8, 10]
    odd = dh_select(prepare_buffer(values), 5)
    even = dh_select(prepare_buffer(values), 6)
    assert odd.value == oracle_select(values, 5)
    assert odd.split == 5  # k odd: answer sits at the small-heap root
    assert even.value == oracle_select(values, 6)
    assert even.split == 5  # k even: answer sits at the large-heap root


def test_determinism_identical_counters():
    values = generate(InputSpec(513, "random", seed=42))
    runs = []
    for _ in range(2):
        ctx = Metrics()
        out = dh_select(prepare_buffer(values), 200, SelectOptions("branch", 2), ctx)
        runs.append((out.value, out.split, ctx.snapshot()))
    assert runs[0] == runs[1]


def test_oracle_agreement_exhaustive_small():
    for n in range(1, 6):
        for perm in itertools.permutations(range(1, n + 1)):
            for k in range(1, n + 1):
                for strategy in ("tree", "branch", "root"):
                    for presplit in (0, 1, 2):
                        arr = prepare_buffer(perm)
                        out = dh_select(arr, k, SelectOptions(strategy, presplit))
                        assert out.value == k
                        assert verify_partition(arr, k)


@given(
    st.lists(st.integers(0, 2), min_size=1, max_size=30),
    st.data(),
)
def test_oracle_agreement_duplicates(values, data):
    k = data.draw(st.integers(1, len(values)))
    strategy = data.draw(st.sampled_from(["tree", "branch", "root"]))
    presplit = data.draw(st.sampled_from([0, 1, 2]))
    arr = prepare_buffer(values)
    out = dh_select(arr, k, SelectOptions(strategy, presplit))
    assert out.value == oracle_select(values, k)
    assert verify_partition(arr, k)
    assert same_multiset(arr.payload(), values)


@given(st.lists(st.integers(-10**6, 10**6), min_size=1, max_size=300), st.data())
def test_oracle_agreement_wide_values(values, data):
    k = data.draw(st.integers(1, len(values)))
    arr = prepare_buffer(values)
    out = dh_select(arr, k)
    assert out.value == oracle_select(values, k)
    assert verify_partition(arr, k)


# --- verify_partition --------------------------------------------------------


def test_verify_partition_examples():
    assert verify_partition(prepare_buffer([1, 2, 3]), 2)
    assert not verify_partition(prepare_buffer([3, 1, 2]), 2)


# --- dh_sort -----------------------------------------------------------------


def test_sort_examples():
    assert dh_sort([3, 1, 2]) == [1, 2, 3]
    assert dh_sort([]) == []
    assert dh_sort([2, 2, 1, 1]) == [1, 1, 2, 2]


@pytest.mark.parametrize("strategy", ["tree", "branch", "root"])
@pytest.mark.parametrize("presplit", [0, 1, 2])
def test_sort_all_options(strategy, presplit):
    values = generate(InputSpec(200, "random", seed=5))
    assert dh_sort(values, SelectOptions(strategy, presplit)) == sorted(values)


def test_sort_random_cases_across_families():
    # ten thousand oracle-checked sorts over every generator family
    cases = 0
    seed = 0
    while cases < 10_000:
        for dist in ("random", "sorted", "reverse", "organpipe", "allequal", "fewvalues"):
            n = (cases * 37 + 13) % 201  # lengths sweep 0..200
            seed += 1
            values = generate(InputSpec(n, dist, seed)) if n else []
            assert dh_sort(values) == sorted(values)
            cases += 1
    assert cases >= 10_000


@given(st.lists(st.integers(-100, 100), max_size=120))
def test_sort_matches_oracle(values):
    assert dh_sort(values) == sorted(values)
