import random

import pytest

from braidseed.braidword import (compute_aps, compute_crossings, demazure_pi, format_word,
                                 is_valid, mutable_frozen, op_word, parse_word,
                                 random_valid_word, s_minus, s_plus, suffix, valid_words)
from braidseed.errors import BadDemazure, ConfigurationError
from braidseed.rootsys import parse_type

A1, A2, A3 = parse_type("A1"), parse_type("A2"), parse_type("A3")


def red(D, seq):
    return [D.reduced_word(u) for u in seq]


def test_parse_and_format():
    assert parse_word("1 -2 3 1 1") == (1, -2, 3, 1, 1)
    assert parse_word("1,-2, 3") == (1, -2, 3)
    assert parse_word("") == ()
    assert format_word((1, -2)) == "1 -2"
    for bad in ("1 0", "1 x", "4"):
        with pytest.raises(ConfigurationError):
            parse_word(bad, rank=3)


def test_s_plus_minus():
    assert (s_plus(1), s_minus(1)) == (1, None)
    assert (s_plus(-1), s_minus(-1)) == (None, 1)
    assert (s_plus(-3), s_minus(-3)) == (None, 3)


def test_demazure_pi():
    assert demazure_pi(A1, (1, 1, 1)) == A1.w0
    assert demazure_pi(A1, (1, -1)) == A1.w0
    assert demazure_pi(A2, (1, 2, 1, 2)) == A2.w0
    assert demazure_pi(A2, (1, 2)) == A2.from_word([1, 2])
    # negative letters fold on the left: s2 * s1 here
    assert demazure_pi(A2, (-1, 2)) == A2.from_word([1, 2])
    assert demazure_pi(A2, (2, -1)) == A2.from_word([1, 2])


def test_crossings_a1():
    cr = compute_crossings(A1, (1, 1, 1))
    assert red(A1, cr.u_seq) == [[], [], [], [1]]
    assert cr.solid == (1, 2)
    assert compute_crossings(A1, (-1, 1, 1)).solid == (1, 2)


def test_crossings_a2():
    # "1 2 1 2": only the first crossing stalls
    cr = compute_crossings(A2, (1, 2, 1, 2))
    assert cr.solid == (1,)
    assert red(A2, cr.u_seq) == [[], [], [2], [2, 1], [1, 2, 1]]
    # "1 2 1 1" carries the u-sequence (id, s1, s1s2, s1s2, w0) and J = {3}
    cr = compute_crossings(A2, (1, 2, 1, 1))
    assert cr.solid == (3,)
    assert red(A2, cr.u_seq) == [[], [1], [1, 2], [1, 2], [1, 2, 1]]
    assert mutable_frozen(A2, (1, 2, 1, 1), cr) == ((), (3,))


def test_bad_demazure():
    with pytest.raises(BadDemazure):
        compute_crossings(A2, (1, 2))
    assert not is_valid(A2, (1, 2))


def test_aps_examples():
    cr = compute_crossings(A1, (1, 1, 1))
    a2 = compute_aps(A1, (1, 1, 1), cr, 2)
    assert red(A1, a2.u_aps) == [[], [1], [], [1]] and a2.mutable_flag
    a1 = compute_aps(A1, (1, 1, 1), cr, 1)
    assert a1.u_aps[0] == A1.simple(1) and not a1.mutable_flag
    word = (1, 2, 1, 1)
    a3 = compute_aps(A2, word, compute_crossings(A2, word), 3)
    assert a3.u_aps[0] == A2.simple(2) and not a3.mutable_flag
    with pytest.raises(ValueError):
        compute_aps(A1, (1, 1, 1), cr, 3)


def test_op_word_and_suffix():
    assert op_word(A1, (-1, 1, 1)) == (1, -1, -1)
    assert op_word(A2, (1,)) == (-2,)
    assert op_word(A3, (2, -1)) == (-2, 3)
    assert suffix((1, 2, 1), 1) == (2, 1)
    assert suffix((1, 2, 1), 0) == (1, 2, 1)
    assert suffix((1, 2, 1), 3) == ()


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "G2", "B3", "D4"])
def test_crossing_properties(name):
    D = parse_type(name)
    rng = random.Random(3)
    for _ in range(60):
        word = random_valid_word(D, rng.randint(D.n_pos_roots, D.n_pos_roots + 6), rng)
        m = len(word)
        cr = compute_crossings(D, word)
        assert cr.u_seq[0] == D.identity and cr.u_seq[m] == D.w0
        assert len(cr.solid) == m - D.w0.length
        for c in range(1, m + 1):
            if cr.is_solid(c):
                assert cr.u_seq[c - 1] == cr.u_seq[c]
            else:
                assert cr.u_seq[c - 1].length == cr.u_seq[c].length - 1
        for c in range(m + 1):
            assert cr.w_seq[c] == D.mul(D.w0, cr.u_seq[c])
        for e in cr.solid:
            aps = compute_aps(D, word, cr, e)
            assert aps.u_aps[m] == D.w0
            for c in range(m + 1):
                assert aps.u_aps[c].length >= cr.u_seq[c].length
                if c >= e:
                    assert aps.u_aps[c] == cr.u_seq[c]
            assert aps.mutable_flag == (aps.u_aps[0] == D.identity)
        # solidity after c only depends on the suffix
        c = rng.randint(0, m)
        other = tuple(rng.choice([-1, 1]) * rng.randint(1, D.rank) for _ in range(rng.randint(0, 3)))
        word2 = other + word[c:]
        if is_valid(D, word2):
            cr2 = compute_crossings(D, word2)
            shift = len(other) - c
            assert [p for p in cr.solid if p > c] == [p - shift for p in cr2.solid if p > len(other)]


def test_valid_words_matches_brute_force():
    from itertools import product
    letters = [1, 2, -1, -2]
    brute = [w for m in range(5) for w in product(letters, repeat=m) if is_valid(A2, w)]
    assert sorted(valid_words(A2, 4)) == sorted(brute)
    assert len(valid_words(A2, 6)) == 4176
    assert all(all(x > 0 for x in w) for w in valid_words(A2, 6, signed=False))
