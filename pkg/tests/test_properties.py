"""Randomized laws on sets too large for the exhaustive windows."""

from hypothesis import given, settings
from hypothesis import strategies as st

from carrymagma import (EMPTY, FinSet, approx_add, encode, exactness, format,
                        invert, iterated_add, knuth_sum, oplus, parse,
                        shift_up, solve, stretch)

finsets = st.builds(
    FinSet.from_iterable,
    st.frozensets(st.integers(min_value=0, max_value=120), max_size=40))
words = st.integers(min_value=0, max_value=(1 << 64) - 1)


@given(finsets)
def test_parse_format_round_trip(a):
    assert parse(format(a)) == a


@given(st.lists(st.integers(0, 200), unique=True, max_size=25),
       st.randoms(use_true_random=False))
def test_parse_ignores_listing_order(elements, rng):
    shuffled = elements[:]
    rng.shuffle(shuffled)
    literal = ",".join(str(n) for n in shuffled)
    assert parse(literal) == FinSet.from_iterable(elements)


@given(finsets, finsets)
def test_oplus_commutative(a, b):
    assert oplus(a, b) == oplus(b, a)


@given(finsets)
def test_empty_is_neutral(a):
    assert oplus(a, EMPTY) == a


@given(finsets)
def test_self_oplus_is_shift(a):
    assert oplus(a, a) == shift_up(a, 1)


@given(finsets)
def test_invert_cancels(a):
    assert oplus(a, invert(a)) == EMPTY
    if a:
        assert invert(a).min_element == a.min_element


@given(finsets, finsets)
def test_solver_round_trips(a, b):
    assert oplus(a, solve(a, b)) == b
    assert solve(a, oplus(a, b)) == b


@given(finsets, finsets)
def test_encoding_carries_oplus_to_approx_add(a, b):
    assert encode(oplus(a, b)) == approx_add(encode(a), encode(b))


@given(finsets, st.integers(0, 130))
def test_stretch_run_structure(a, n):
    value = stretch(a, n)
    if value == 0:
        assert n not in a
    else:
        k = value - 1
        assert all(pos in a for pos in range(n - k, n + 1))
        assert n - k == 0 or (n - k - 1) not in a


@settings(max_examples=200)
@given(words, words)
def test_knuth_identity_on_wide_words(a, b):
    assert knuth_sum(a, b) == a + b


@given(words, words)
def test_iterated_add_on_wide_words(a, b):
    total, rounds = iterated_add(a, b)
    assert total == a + b
    assert rounds <= 65


@given(words, words)
def test_exactness_matches_definition(a, b):
    assert exactness(a, b) == (approx_add(a, b) == a + b)
