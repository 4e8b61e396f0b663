import itertools
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from chromaposet.counting import (
    ChainPartitionCounter,
    SearchStats,
    StablePartitionCounter,
    StaircaseContext,
    count_scp,
    count_semiordered_stable_partitions,
    forced_content_prefix,
    proof_case_closed_forms,
    scp_closed_form,
    staircase_delta,
    witness_case_contents,
)
from chromaposet.errors import PreconditionError, SizeMismatchError
from chromaposet.partitions import multinomial, partitions_of, symmetry_factor
from chromaposet.posets import (
    B3,
    Boolean,
    Chain,
    OrdinalSum,
    Product,
    build_poset,
    incomparability_graph,
)


def brute_count_scp(poset, type_):
    """Assign each element a block index and accept proper semi-ordered
    chain fillings; hopeless beyond ~8 elements, which is the point."""
    n = len(poset)
    total = 0
    for assignment in itertools.product(range(len(type_)), repeat=n):
        sizes = [0] * len(type_)
        for b in assignment:
            sizes[b] += 1
        if sizes != list(type_):
            continue
        ok = True
        for i, j in itertools.combinations(range(n), 2):
            if assignment[i] == assignment[j]:
                if not (poset.up[i] >> j & 1 or poset.up[j] >> i & 1):
                    ok = False
                    break
        if ok:
            total += 1
    # labeled slots distinguish equal-size blocks, which is exactly the
    # semi-ordered convention
    return total


def test_known_small_counts():
    assert count_scp(build_poset(Chain(4)), (2, 1, 1)) == 12
    assert count_scp(build_poset(Product((2, 2))), (2, 2)) == 4
    assert count_scp(build_poset(Chain(3)), (3,)) == 1
    assert count_scp(build_poset(Chain(3)), (2, 1)) == 3


def test_size_mismatch():
    with pytest.raises(SizeMismatchError):
        count_scp(build_poset(Chain(4)), (2, 1))


def test_zero_when_part_exceeds_longest_chain():
    p = build_poset(Product((2, 2)))
    assert count_scp(p, (4,)) == 0
    b = build_poset(B3(2))
    assert count_scp(b, (len(b),)) == 0


def test_chain_counts_are_multinomials():
    for n in range(1, 9):
        poset = build_poset(Chain(n))
        for lam in partitions_of(n):
            assert count_scp(poset, lam) == multinomial(n, lam)


def test_semiordered_divisible_by_symmetry():
    for spec in (Chain(5), Product((3, 2)), Boolean(3), B3(1)):
        poset = build_poset(spec)
        for lam in partitions_of(len(poset)):
            c = count_scp(poset, lam)
            assert c % symmetry_factor(lam) == 0


def test_graph_and_poset_counters_agree():
    for spec in (Chain(5), Product((3, 2)), Product((2, 2, 2)), B3(1), OrdinalSum(1, Chain(2), 1)):
        poset = build_poset(spec)
        graph = incomparability_graph(poset)
        for lam in partitions_of(len(poset)):
            assert count_scp(poset, lam) == count_semiordered_stable_partitions(graph, lam)


def test_counters_against_assignment_brute():
    for spec in (Chain(4), Product((3, 2)), Product((2, 2)), OrdinalSum(1, Product((2, 2)), 1)):
        poset = build_poset(spec)
        for lam in partitions_of(len(poset)):
            assert count_scp(poset, lam) == brute_count_scp(poset, lam), (spec, lam)


def test_search_stats_populated():
    stats = SearchStats()
    count_scp(build_poset(Product((3, 2))), (4, 2), stats=stats)
    assert stats.nodes > 0


def test_staircase_context_split():
    ctx = StaircaseContext(8, 3)
    assert ctx.staircase == (10, 8)
    prefix, tail = ctx.split((10, 8, 4, 2))
    assert prefix == (10, 8) and tail == (4, 2)
    with pytest.raises(PreconditionError):
        ctx.split((10, 7, 5, 2))
    with pytest.raises(SizeMismatchError):
        ctx.split((10, 8, 4))
    with pytest.raises(PreconditionError):
        StaircaseContext(3, 4)


def test_closed_form_values():
    assert scp_closed_form(StaircaseContext(4, 2), (5, 2, 1)) == 8
    assert scp_closed_form(StaircaseContext(8, 3), (10, 8, 4, 2)) == 102


def test_closed_form_matches_counter_exhaustively():
    for m, n in ((3, 2), (4, 2), (4, 3)):
        ctx = StaircaseContext(m, n)
        poset = build_poset(Product((m, n)))
        for tail in partitions_of(m - n + 1):
            type_ = ctx.staircase + tail
            assert scp_closed_form(ctx, type_) == count_scp(poset, type_), type_


def test_forced_content_prefix():
    assert forced_content_prefix((10, 8, 2, 2, 2), 8, 3) == (10, 8)
    assert forced_content_prefix((13, 11, 9, 3, 2, 2), 10, 4) == (13, 11, 9)
    assert forced_content_prefix((9, 9, 2, 2, 2), 8, 3) is None
    assert forced_content_prefix((4, 2, 2), 4, 2) is None  # 4 != 4+2-1
    assert forced_content_prefix((5, 2, 1), 4, 2) == (5,)
    with pytest.raises(SizeMismatchError):
        forced_content_prefix((5, 2), 4, 2)


def test_forced_prefix_is_really_forced():
    # shapes with the staircase prefix only admit contents extending it
    for m, n in ((3, 2), (4, 2), (4, 3)):
        poset = build_poset(Product((m, n)))
        prefix = StaircaseContext(m, n).staircase
        from chromaposet.rimhooks import enumerate_srht

        for tail in partitions_of(m - n + 1):
            shape = prefix + tail
            for t in enumerate_srht(shape):
                if count_scp(poset, t.content):
                    assert t.content[: n - 1] == prefix, (shape, t.content)


def test_staircase_delta():
    assert staircase_delta(3, 5) == (10, 8)
    assert staircase_delta(2, 5) == (8,)
    assert staircase_delta(5, 7) == (16, 14, 12, 10)
    with pytest.raises(PreconditionError):
        staircase_delta(1, 5)
    with pytest.raises(PreconditionError):
        staircase_delta(3, 4)


def test_witness_case_contents():
    cases = witness_case_contents(3, 5)
    assert cases["T1"] == (10, 8, 4, 2)
    assert cases["T2"] == (10, 8, 4, 1, 1)
    assert cases["T3"] == (10, 8, 3, 3)
    assert cases["T4"] == (10, 8, 3, 2, 1)
    # at k=5 the T5 tail (k-3,3,1) sorts to the same content as T4's
    assert cases["T5"] == (10, 8, 3, 2, 1)
    assert cases["T6"] == (10, 8, 2, 2, 2)
    cases7 = witness_case_contents(4, 7)
    assert cases7["T3"] == (14, 12, 10, 5, 3)
    assert cases7["T5"] == (14, 12, 10, 4, 3, 1)


def test_case_polynomials_match_closed_form():
    # the six per-case polynomials agree with the generic closed form
    for k in (5, 6, 7, 8):
        for n in (2, 3, 4):
            ctx = StaircaseContext(n + k, n)
            cases = proof_case_closed_forms(n, k)
            contents = witness_case_contents(n, k)
            for name, value in cases.items():
                assert value == scp_closed_form(ctx, contents[name]), (name, n, k)


def test_case_values_at_reference_point():
    cases = proof_case_closed_forms(3, 5)
    assert cases == {
        "T1": 102,
        "T2": 336,
        "T3": 132,
        "T4": 576,
        "T5": 576,
        "T6": 768,
    }


@settings(deadline=None)
@given(st.integers(2, 4), st.integers(2, 4))
def test_closed_form_total_is_positive(m_extra, n):
    m = n + m_extra
    ctx = StaircaseContext(m, n)
    for tail in partitions_of(m - n + 1):
        assert scp_closed_form(ctx, ctx.staircase + tail) > 0
