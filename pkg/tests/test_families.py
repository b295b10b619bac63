import itertools
import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from balancedcube import _bitset
from balancedcube.cube_core import OutOfRangeError, vertex as V
from balancedcube.families import (
    Family,
    MixedParityError,
    NotIndependentError,
    SegmentSpec,
    co_neighborhood,
    is_balanced,
    is_independent,
    is_maximal_independent,
    is_terminal_segment,
    neighborhood,
    parity_class,
    segment,
)

from brute import N, from_word, independent, simplicial, to_word


def fam(n, *sets):
    return Family(n, [V(s) for s in sets])


# -- the bitset engine against plain sets --------------------------------------

@pytest.mark.parametrize("n", [1, 2, 5, 6, 7, 9])
def test_bitset_neighborhood_matches_sets(n):
    rng = random.Random(n)
    for _ in range(20):
        members = rng.sample(range(1 << n), rng.randint(0, min(12, 1 << n)))
        got = _bitset.to_vertices(_bitset.neighborhood(_bitset.from_vertices(n, members), n))
        want = sorted(to_word(s) for s in N([from_word(x) for x in members], n))
        assert got.tolist() == want


@pytest.mark.parametrize("n", [0, 1, 3, 6, 8])
def test_bitset_prefix_layer_matches_sets(n):
    for start in range(1, n + 2):
        for prefix in range(1 << (start - 1)):
            for r in range(-1, n - start + 3):
                got = _bitset.to_vertices(_bitset.prefix_layer(n, prefix, start, r)).tolist()
                want = sorted(prefix | (x << (start - 1)) for x in range(1 << (n - start + 1))
                              if x.bit_count() == r)
                assert got == want


@pytest.mark.parametrize("n", [1, 4, 7])
def test_bitset_parity_class(n):
    for p in (0, 1):
        got = _bitset.to_vertices(_bitset.parity_class(n, p)).tolist()
        assert got == [x for x in range(1 << n) if x.bit_count() % 2 == p]


# -- Family basics ------------------------------------------------------------

def test_family_dedup_and_order():
    F = Family(4, [V([2, 3]), 0, V([1, 2]), V([2, 3])])
    assert len(F) == 3
    assert F.members() == [0, V([1, 2]), V([2, 3])]
    assert V([1, 2]) in F and V([1]) not in F


def test_family_rejects_bad_words():
    with pytest.raises(OutOfRangeError):
        Family(3, [8])
    with pytest.raises(OutOfRangeError):
        Family(3, [-1])
    with pytest.raises(OutOfRangeError):
        Family(31)


def test_family_record_round_trip():
    F = fam(5, [], [1, 2], [2, 4, 5], [1, 2, 3, 4, 5])
    for form in ("sets", "hex"):
        rec = F.to_record(form)
        assert Family.from_record(json.loads(json.dumps(rec))) == F
    assert F.to_record("sets") == {"n": 5, "sets": [[], [1, 2], [2, 4, 5], [1, 2, 3, 4, 5]]}
    assert F.to_record("hex") == {"n": 5, "hex": ["0x0", "0x3", "0x1A", "0x1F"]}


# -- neighborhood / co-neighborhood -------------------------------------------

def test_neighborhood_examples():
    assert neighborhood(fam(3, [])) == fam(3, [1], [2], [3])
    assert neighborhood(fam(3, [1, 2])) == fam(3, [1], [2], [1, 2, 3])
    assert neighborhood(fam(4, [], [1, 2])) == fam(4, [1], [2], [3], [4], [1, 2, 3], [1, 2, 4])


def test_co_neighborhood_examples():
    assert co_neighborhood(fam(3, [])) == fam(3, [1, 2, 3])
    assert co_neighborhood(fam(4, [], [1, 2])) == fam(4, [1, 3, 4], [2, 3, 4])
    assert co_neighborhood(Family(3)) == parity_class(3, 1)
    assert len(co_neighborhood(Family(3))) == 4


def test_co_neighborhood_mixed_parity():
    with pytest.raises(MixedParityError):
        co_neighborhood(fam(3, [], [1]))


@pytest.mark.parametrize("n", range(1, 6))
def test_neighborhood_flips_parity_exhaustive(n):
    for p in (0, 1):
        cls = [x for x in range(1 << n) if x.bit_count() % 2 == p]
        # all subsets for n <= 3, a deterministic sample otherwise
        if len(cls) <= 8:
            subsets = itertools.chain.from_iterable(
                itertools.combinations(cls, k) for k in range(len(cls) + 1))
        else:
            rng = random.Random(n)
            subsets = (rng.sample(cls, rng.randint(0, len(cls))) for _ in range(300))
        other = parity_class(n, 1 - p)
        for A in subsets:
            F = Family(n, A)
            nb = neighborhood(F)
            assert nb <= other
            assert len(nb) >= len(F)


@pytest.mark.parametrize("n", range(1, 5))
def test_neighborhood_never_shrinks_one_sided_family_exhaustive(n):
    for p in (0, 1):
        cls = [x for x in range(1 << n) if x.bit_count() % 2 == p]
        for mask in range(1 << len(cls)):
            A = [cls[t] for t in range(len(cls)) if (mask >> t) & 1]
            assert len(neighborhood(Family(n, A))) >= len(A)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 10), st.data())
def test_neighborhood_never_shrinks_sampled(n, data):
    p = data.draw(st.sampled_from([0, 1]))
    cls = [x for x in range(1 << n) if x.bit_count() % 2 == p]
    A = data.draw(st.lists(st.sampled_from(cls), max_size=80))
    F = Family(n, A)
    assert len(neighborhood(F)) >= len(F)


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 8), st.data())
def test_co_neighborhood_ignores_order_and_duplicates(n, data):
    cls = [x for x in range(1 << n) if x.bit_count() % 2 == 0]
    A = data.draw(st.lists(st.sampled_from(cls), max_size=20))
    shuffled = data.draw(st.permutations(A + A))
    assert co_neighborhood(Family(n, A), parity=0) == co_neighborhood(Family(n, shuffled), parity=0)
    want = {to_word(s) for s in simplicial(n, 1)} - {to_word(s) for s in N([from_word(x) for x in A], n)}
    assert set(co_neighborhood(Family(n, A), parity=0)) == want


# -- segments -----------------------------------------------------------------

def test_segment_examples():
    assert segment(SegmentSpec(4, 0, "initial", 2)) == fam(4, [], [1, 2])
    assert segment(SegmentSpec(4, 1, "terminal", 2)) == fam(4, [1, 3, 4], [2, 3, 4])
    assert segment(SegmentSpec(3, 0, "initial", 0)) == Family(3)


def test_segment_spec_validation():
    with pytest.raises(OutOfRangeError):
        SegmentSpec(4, 0, "initial", 9)
    with pytest.raises(ValueError):
        SegmentSpec(4, 2, "initial", 1)
    with pytest.raises(ValueError):
        SegmentSpec(4, 0, "middle", 1)


@pytest.mark.parametrize("n", range(1, 11))
def test_segments_match_enumeration_and_nest(n):
    for p in (0, 1):
        order = [to_word(s) for s in simplicial(n, p)]
        prev = Family(n)
        for m in range(len(order) + 1):
            init = segment(SegmentSpec(n, p, "initial", m))
            assert init.members() == order[:m]
            assert prev <= init
            prev = init
            if n <= 8:
                term = segment(SegmentSpec(n, p, "terminal", m))
                assert term.members() == order[len(order) - m:]


# -- predicates ---------------------------------------------------------------

def test_is_independent_examples():
    assert is_independent(fam(3, [], [1, 2, 3]))
    assert not is_independent(fam(3, [], [1]))
    assert is_independent(parity_class(4, 0))


def test_is_balanced_examples():
    assert is_balanced(Family(3))
    assert is_balanced(fam(3, [], [1, 2, 3]))
    assert not is_balanced(fam(3, [], [1, 2]))


def test_is_maximal_independent_examples():
    assert is_maximal_independent(parity_class(3, 0))
    # every singleton touches {} and every pair touches {1,2,3}
    assert is_maximal_independent(fam(3, [], [1, 2, 3]))
    assert not is_maximal_independent(fam(3, []))
    assert is_maximal_independent(fam(1, []))
    with pytest.raises(NotIndependentError):
        is_maximal_independent(fam(3, [], [1]))


def test_is_terminal_segment_examples():
    assert is_terminal_segment(fam(4, [1, 3, 4], [2, 3, 4]))
    assert not is_terminal_segment(fam(4, [1], [2, 3, 4]))
    assert is_terminal_segment(Family(4))
    with pytest.raises(MixedParityError):
        is_terminal_segment(fam(4, [1], [1, 2]))


@pytest.mark.parametrize("n", range(1, 5))
def test_predicates_match_brute_force(n):
    # all subsets of Q_n for n <= 3, random ones for n = 4
    verts = list(range(1 << n))
    if n <= 3:
        subsets = [[verts[i] for i in range(len(verts)) if (mask >> i) & 1]
                   for mask in range(1 << len(verts))]
    else:
        rng = random.Random(4)
        subsets = [rng.sample(verts, rng.randint(0, 8)) for _ in range(500)]
    for S in subsets:
        F = Family(n, S)
        sets = [from_word(x) for x in S]
        assert is_independent(F) == independent(sets, n)
        assert is_balanced(F) == (2 * sum(len(s) % 2 == 0 for s in set(sets)) == len(set(sets)))


def _random_maximal_independent(n, rng):
    order = list(range(1 << n))
    rng.shuffle(order)
    chosen = set()
    for x in order:
        if all((x ^ (1 << i)) not in chosen for i in range(n)):
            chosen.add(x)
    return chosen


@pytest.mark.parametrize("n", range(1, 4))
def test_maximal_sets_have_reduced_form_exhaustive(n):
    verts = list(range(1 << n))
    for mask in range(1 << len(verts)):
        S = Family(n, [v for v in verts if (mask >> v) & 1])
        if not is_independent(S) or not is_maximal_independent(S):
            continue
        A = S & parity_class(n, 0)
        assert S == A | co_neighborhood(A, parity=0)


@pytest.mark.parametrize("n", range(4, 9))
def test_maximal_sets_have_reduced_form_random(n):
    rng = random.Random(n)
    for _ in range(40):
        S = Family(n, _random_maximal_independent(n, rng))
        assert is_maximal_independent(S)
        A = S & parity_class(n, 0)
        assert S == A | co_neighborhood(A, parity=0)


def test_large_family_operations_stay_packed():
    n = 20
    X0 = parity_class(n, 0)
    assert len(X0) == 2**19
    assert neighborhood(X0) == parity_class(n, 1)
    assert X0.words.dtype == np.uint64 and X0.words.size == 2**14
