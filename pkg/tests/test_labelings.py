import pytest
from hypothesis import given, settings, strategies as st

from knotcube.diagram import BraidWord, close_braid, writhe
from knotcube.labelings import (CorruptCycle, LocalType, classify_local, enumerate_cycles,
                                enumerate_cycles_bruteforce, every_component_reduced, is_admissible,
                                local_types, reducing_edges, s_value, strand_count, subdiagram,
                                turn_stats, w_value)
from conftest import closure

TREFOIL_CYCLES = [frozenset(), frozenset({1, 2, 5}), frozenset({1, 3, 4}), frozenset({1, 3, 5})]


def test_trefoil_cycles():
    assert enumerate_cycles(closure("1 1 1")) == TREFOIL_CYCLES


def test_trefoil_local_types():
    D = closure("1 1 1")
    assert local_types(D, {1, 3, 5}) == (LocalType.Z1,) * 3
    assert turn_stats(D, {1, 3, 5}).T_plus == 3
    assert turn_stats(D, {1, 2, 5}).D_plus == 2


def test_classify_rejects_non_cycles():
    D = closure("1 1 1")
    with pytest.raises(CorruptCycle):
        classify_local({2}, D.crossings[0])


def test_admissibility_forbids_wrong_turns():
    D = closure("1 1 1")
    # a left turn at a positive crossing
    every = enumerate_cycles(D, admissible_only=False)
    assert len(every) > len(TREFOIL_CYCLES)
    for Z in every:
        types = local_types(D, Z)
        assert is_admissible(D, Z) == (LocalType.Z2 not in types)


def test_matches_bruteforce_on_corpus(corpus4):
    for D in corpus4:
        assert enumerate_cycles(D) == enumerate_cycles_bruteforce(D)
        assert enumerate_cycles(D, admissible_only=False) == enumerate_cycles_bruteforce(D, False)


words = st.integers(2, 4).flatmap(
    lambda b: st.lists(st.integers(1, b - 1).flatmap(lambda g: st.sampled_from((g, -g))),
                       min_size=0, max_size=7).map(lambda L: BraidWord(b, tuple(L))))


@given(words)
@settings(max_examples=60, deadline=None)
def test_matches_bruteforce_random(w):
    D = close_braid(w)
    assert enumerate_cycles(D) == enumerate_cycles_bruteforce(D)


def test_unmarked_enumeration_adds_marked_cycles():
    D = closure("1 1 1")
    unmarked = enumerate_cycles(D, avoid_marked=False)
    assert set(TREFOIL_CYCLES) < set(unmarked)
    assert all(0 in Z for Z in set(unmarked) - set(TREFOIL_CYCLES))


def test_subdiagrams_of_trefoil():
    D = closure("1 1 1")
    assert subdiagram(D, frozenset(), 2) == BraidWord(2, (1, 1, 1))
    assert subdiagram(D, frozenset(), 1) is None
    assert subdiagram(D, {1, 3, 5}, 2) == BraidWord(1, ())
    assert strand_count(D, {1, 3, 5}, 1) == 1


def test_s_and_w_identities(corpus4):
    for D in corpus4:
        w = writhe(D)
        for Z in enumerate_cycles(D):
            assert s_value(D, Z, 1) == w - w_value(D, Z, 2)
            assert w_value(D, Z, 1) - w_value(D, Z, 2) == s_value(D, Z, 1) - s_value(D, Z, 2)
            assert turn_stats(D, Z).D % 2 == 0


def test_reducing_edges_cover_knot_components(knots5):
    for D in knots5:
        for Z in enumerate_cycles(D):
            if Z:
                assert every_component_reduced(D, Z)


def test_reducing_edges_can_miss_on_links():
    # the property is a statement about knots
    misses = 0
    for text in ("1 1", "1 1 1 1", "1 2 1 2", "1 1 2 2"):
        D = closure(text)
        misses += sum(not every_component_reduced(D, Z) for Z in enumerate_cycles(D) if Z)
    assert misses > 0


def test_reducing_edges_of_trefoil():
    D = closure("1 1 1")
    assert reducing_edges(D, {1, 3, 5}) == [2, 4, 0]
