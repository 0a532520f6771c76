import pytest
from hypothesis import given, strategies as st

from multizeta.encodings import (
    OddEncoding,
    enumerate_odd_encodings,
    pair_orbits,
    phi,
    quotient_of,
    subsequence_of,
    window_of,
)
from multizeta.words import BlockVector, blockvector_to_word, weight_of


@st.composite
def odd_encodings(draw, max_n=3, max_entry=5):
    n = draw(st.integers(1, max_n))
    entries = tuple(draw(st.integers(0, max_entry)) for _ in range(2 * n + 1))
    b = BlockVector(entries)
    s = draw(st.integers(0, len(b) - 2))
    t_choices = list(range(s + 1, len(b), 2))
    t = draw(st.sampled_from(t_choices))
    l = draw(st.integers(0, 2 * (b[s] + 1) - 1))
    m_choices = [m for m in range(2 * (b[t] + 1)) if (m - l) % 2 == 1]
    m = draw(st.sampled_from(m_choices))
    return OddEncoding(b, s, l, t, m)


def test_validation_rules():
    b = BlockVector((1, 0, 0))
    with pytest.raises(ValueError):
        OddEncoding(b, 0, 0, 2, 1)  # same-parity blocks
    with pytest.raises(ValueError):
        OddEncoding(b, 1, 0, 0, 1)  # s >= t
    with pytest.raises(ValueError):
        OddEncoding(b, 0, 4, 1, 1)  # start offset too large
    with pytest.raises(ValueError):
        OddEncoding(b, 0, 0, 1, 2)  # end offset too large
    with pytest.raises(ValueError):
        OddEncoding(b, 0, 0, 1, 0)  # same-parity offsets (even window)


def test_frozen_enumeration_100():
    encs = enumerate_odd_encodings(BlockVector((1, 0, 0)), 5)
    assert [
        (e.start_block, e.start_offset, e.end_block, e.end_offset) for e in encs
    ] == [(0, 0, 1, 1), (0, 1, 1, 0)]
    assert [window_of(e) for e in encs] == [(0, 5), (1, 6)]


def test_frozen_enumeration_000():
    assert enumerate_odd_encodings(BlockVector((0, 0, 0)), 5) == []
    encs = enumerate_odd_encodings(BlockVector((0, 0, 0)), 3)
    assert [window_of(e) for e in encs] == [(0, 3), (1, 4), (2, 5), (3, 6)]


def test_enumeration_preconditions():
    b = BlockVector((1, 0, 0))
    with pytest.raises(ValueError):
        enumerate_odd_encodings(b, 4)
    with pytest.raises(ValueError):
        enumerate_odd_encodings(b, 1)
    with pytest.raises(ValueError):
        enumerate_odd_encodings(b, weight_of(b) + 3)


@given(odd_encodings())
def test_length_formula(e):
    assert e.length % 2 == 1
    assert e.length >= 3
    start, end = window_of(e)
    assert end - start == e.length
    assert len(subsequence_of(e)) == e.length


@given(odd_encodings())
def test_phi_is_a_fixed_point_free_involution(e):
    f = phi(e)
    assert f != e
    assert phi(f) == e
    assert f.length == e.length


@given(odd_encodings())
def test_phi_reverses_subword_and_keeps_quotient(e):
    f = phi(e)
    assert subsequence_of(f) == subsequence_of(e).reverse()
    assert quotient_of(f) == quotient_of(e)


@given(odd_encodings())
def test_subword_boundaries_differ(e):
    # an odd window always spans a block boundary, so its ends disagree
    sub = subsequence_of(e)
    assert sub[0] != sub[-1]


@given(odd_encodings())
def test_quotient_glues_window_ends(e):
    word = blockvector_to_word(e.vector)
    start, end = window_of(e)
    quotient = quotient_of(e)
    assert len(quotient) == len(word) - e.length + 2
    assert quotient.symbols[: start + 1] == word.symbols[: start + 1]
    assert quotient.symbols[start + 1 :] == word.symbols[end - 1 :]


def test_phi_worked_example():
    e = OddEncoding(BlockVector((1, 2, 3, 1, 2)), 1, 2, 2, 5)
    f = phi(e)
    assert f.vector.entries == (1, 3, 2, 1, 2)
    assert (f.start_block, f.start_offset, f.end_block, f.end_offset) == (1, 5, 2, 2)
    assert str(subsequence_of(e)) == "1010010"
    assert str(subsequence_of(f)) == "0100101"
    assert str(quotient_of(e)) == "01011010101011010010101"
    assert quotient_of(f) == quotient_of(e)


def test_pair_orbits_on_closed_set():
    encodings = []
    for entries in [(0, 0, 1), (0, 1, 0), (1, 0, 0)]:
        encodings.extend(enumerate_odd_encodings(BlockVector(entries), 5))
    orbits = pair_orbits(encodings)
    assert len(orbits) == len(encodings) // 2
    for orb in orbits:
        assert phi(orb.first) == orb.second
        assert orb.first.sort_key() < orb.second.sort_key()


def test_pair_orbits_detects_missing_partner():
    encodings = enumerate_odd_encodings(BlockVector((1, 0, 0)), 5)
    # phi sends these into permuted vectors, absent from this list
    with pytest.raises(ValueError):
        pair_orbits(encodings)
