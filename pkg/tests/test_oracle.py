import math

import pytest
from hypothesis import assume, given, settings, strategies as st

from cantor3 import (
    RefusalError,
    admissible_word,
    brute_count,
    brute_count_extendable,
    build_multi,
    build_single,
    count_paths,
    dim_estimate,
    normalize,
)


def test_admissible_word_examples():
    assert admissible_word([7], (0,))
    assert admissible_word([7], (1,))
    assert not admissible_word([7], (1, 0))  # 7*1 = (21)_3, digit 1 is 2
    assert admissible_word([7], (1, 1))
    assert admissible_word([7, 19], (0, 0, 0))
    assert admissible_word([1], (1, 1, 1))


def test_admissible_word_rejects_bad_digits():
    with pytest.raises(ValueError):
        admissible_word([7], (0, 2))
    with pytest.raises(ValueError):
        admissible_word([5], (0, 1))  # residue-2 multiplier has no automaton


def test_brute_count_small_values():
    assert brute_count([7], 3) == 5
    assert [brute_count([7], n) for n in range(1, 6)] == [2, 3, 5, 8, 13]
    assert brute_count([1], 10) == 1024
    assert brute_count([7, 19], 1) == 2


def test_brute_count_equals_filtered_enumeration():
    for ms in ([7], [19], [7, 19]):
        for n in range(1, 9):
            direct = sum(
                1
                for x in range(2**n)
                if admissible_word(ms, tuple((x >> i) & 1 for i in range(n)))
            )
            assert brute_count(ms, n) == direct


def test_prefix_closure():
    ms = [7, 19]
    for n in range(2, 9):
        for x in range(2**n):
            word = tuple((x >> i) & 1 for i in range(n))
            if admissible_word(ms, word):
                assert admissible_word(ms, word[:-1])


def test_count_growth_is_at_most_doubling():
    for ms in ([7], [13], [4, 16]):
        prev = brute_count(ms, 1)
        for n in range(2, 10):
            cur = brute_count(ms, n)
            assert cur <= 2 * prev
            prev = cur


def test_extendable_counts_drop_dead_ends():
    # the (4,16) intersection keeps only the zero word
    for n in range(1, 9):
        assert brute_count_extendable([4, 16], n) == 1
        assert brute_count([4, 16], n) >= 1
    # on an essential single graph the two counts agree
    for n in range(1, 10):
        assert brute_count_extendable([7], n) == brute_count([7], n)


def test_extendable_matches_trimmed_automaton():
    for ms in ([4, 16], [7, 19], [4, 256]):
        g = build_multi(ms)
        for n in range(1, 9):
            assert brute_count_extendable(ms, n) == count_paths(g, n)


def test_refusals_and_input_checks():
    with pytest.raises(RefusalError):
        brute_count([7], 23)
    with pytest.raises(RefusalError):
        brute_count_extendable([7], 23)
    with pytest.raises(ValueError):
        brute_count([5], 3)
    with pytest.raises(ValueError):
        brute_count([0], 3)


def test_limit_override():
    assert brute_count([7], 24, limit=25) == 121393


def test_dim_estimate_converges_roughly():
    g = build_single(7)
    est = dim_estimate(g, 12)
    assert abs(est - 0.438018) <= 0.05
    assert dim_estimate(g, 0) == 0.0
    trivial = build_single(2)
    assert dim_estimate(trivial, 8) == 0.0


@settings(max_examples=40)
@given(st.integers(min_value=1, max_value=300), st.integers(min_value=1, max_value=8))
def test_oracle_matches_automaton_for_random_singles(m, n):
    assume(normalize(m).residue == 1)
    g = build_multi([m])
    assert brute_count([m], n) == count_paths(g, n)
