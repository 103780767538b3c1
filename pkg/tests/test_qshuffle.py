import json
import math

import pytest
from hypothesis import given, settings, strategies as st

from klrtab.cartan import RootVector, bilinear, weight_of_word
from klrtab.errors import DomainError
from klrtab.qshuffle import (
    LaurentPoly,
    QChar,
    concat,
    e_i,
    ei_exactness_check,
    epsilon_i,
    nilhecke_char,
    q_factorial,
    q_integer,
    serre_check,
    shuffle,
)
from klrtab.segments import Segment, induced_char
from oracles import naive_shuffle

N = 3


def word_char(w, n=N):
    return QChar.from_word(w, n)


def test_laurent_arithmetic():
    p = LaurentPoly({-1: 1, 1: 1})
    assert (p * p).terms == {-2: 1, 0: 2, 2: 1}
    assert (p - p).terms == {}
    assert p.at_one() == 2
    assert p.shift(1).terms == {0: 1, 2: 1}
    assert q_integer(3).terms == {-2: 1, 0: 1, 2: 1}
    assert q_factorial(3).at_one() == 6
    assert LaurentPoly.from_json(p.to_json()) == p


def test_concat_examples():
    assert concat(word_char((1,)), word_char((2,))).terms == {(1, 2): LaurentPoly.const(1)}
    unit = QChar.unit(N)
    A = word_char((1, 2))
    assert concat(unit, A) == A == concat(A, unit)
    assert concat(word_char((1, 2)), word_char((1,))).at_one() == {(1, 2, 1): 1}


def test_shuffle_examples():
    A, B = word_char((1, 2)), word_char((1,))
    assert shuffle(A, B).at_one() == {(1, 1, 2): 2, (1, 2, 1): 1}
    assert shuffle(A, QChar.unit(N)) == A
    g = shuffle(word_char((1,)), word_char((3,)), graded=True)
    assert g.terms == {(1, 3): LaurentPoly.const(1), (3, 1): LaurentPoly.const(1)}
    g = shuffle(A, B, graded=True)
    assert g.coefficient((1, 1, 2)).terms == {-1: 1, 1: 1}
    assert g.coefficient((1, 2, 1)).terms == {0: 1}


small_words = st.lists(st.integers(1, N), max_size=4).map(tuple)


@settings(max_examples=150, deadline=None)
@given(small_words, small_words)
def test_shuffle_matches_naive_oracle(u, v):
    got = shuffle(word_char(u), word_char(v), graded=True)
    want = naive_shuffle(u, v, graded=True)
    assert {w: c.terms for w, c in got.terms.items()} == \
        {w: {e: k for e, k in poly.items() if k} for w, poly in want.items()}
    assert shuffle(word_char(u), word_char(v)).at_one() == naive_shuffle(u, v)


@settings(max_examples=60, deadline=None)
@given(small_words, small_words, small_words)
def test_shuffle_associative(u, v, w):
    a, b, c = word_char(u), word_char(v), word_char(w)
    for graded in (False, True):
        assert shuffle(shuffle(a, b, graded), c, graded) == shuffle(a, shuffle(b, c, graded), graded)
    assert shuffle(a, b).at_one() == shuffle(b, a).at_one()
    assert concat(concat(a, b), c) == concat(a, concat(b, c))


@settings(max_examples=60, deadline=None)
@given(small_words, small_words)
def test_grading_specializes(u, v):
    a, b = word_char(u), word_char(v)
    assert shuffle(a, b, graded=True).at_one() == shuffle(a, b).at_one()


def test_reversed_term_degree():
    # the interleaving putting all of B first has degree -(wt A | wt B)
    u, v = (1, 2), (3,)
    g = shuffle(word_char(u), word_char(v), graded=True)
    K = -bilinear(weight_of_word(u, N), weight_of_word(v, N))
    assert g.coefficient(v + u).terms == {K: 1}


def test_serre_examples():
    assert serre_check(QChar.from_counts({(1, 1, 2): 2, (1, 2, 1): 1}, N))
    bad = serre_check(QChar.from_counts({(1, 3): 1}, N))
    assert not bad and "(3, 1)" in bad.witness
    assert serre_check(QChar.zero(RootVector.zero(N)))
    assert not serre_check({(1, 2, 1): 1})


def test_epsilon_and_e():
    A = QChar.from_counts({(1, 1, 2): 2, (1, 2, 1): 1}, N)
    assert epsilon_i(A, 1) == 1
    assert epsilon_i(A, 2) == 1
    assert epsilon_i(nilhecke_char(1, 3, N), 1) == 3
    assert e_i(A, 1).at_one() == {(1, 2): 1}
    assert e_i(A, 2).at_one() == {(1, 1): 2}
    assert not e_i(QChar.zero(RootVector.zero(N)), 1)
    with pytest.raises(DomainError):
        epsilon_i(QChar.zero(RootVector.zero(N)), 1)


def test_nilhecke_char():
    assert nilhecke_char(2, 0, N).terms == {(): LaurentPoly.const(1)}
    assert nilhecke_char(2, 2, N).coefficient((2, 2)).terms == {0: 1, 2: 1}
    for m in range(7):
        assert nilhecke_char(1, m, N).at_one() == {(1,) * m: math.factorial(m)}


def test_exactness_examples():
    A, B = word_char((1, 2)), word_char((1,))
    assert ei_exactness_check(A, B, 1)
    unit = QChar.unit(N)
    assert ei_exactness_check(A, unit, 2)
    assert e_i(shuffle(A, unit), 2) == e_i(A, 2)


segments = st.builds(lambda a, l: Segment(a, l), st.integers(1, N), st.integers(0, 2)).filter(
    lambda s: s.a + s.length - 1 <= N)


@settings(max_examples=80, deadline=None)
@given(st.lists(segments, max_size=2), st.lists(segments, max_size=2), st.integers(1, N))
def test_exactness_on_segment_characters(left, right, i):
    A, B = induced_char(left, N), induced_char(right, N)
    assert ei_exactness_check(A, B, i)
    assert ei_exactness_check(induced_char(left, N, True), induced_char(right, N, True), i,
                              graded=True)


def test_epsilon_against_letter_free_factor():
    # A has no letter 3, so trailing 3s of A*B come from B only
    A = induced_char([Segment(1, 2)], N)
    B = induced_char([Segment(3, 1), Segment(2, 2)], N)
    assert epsilon_i(shuffle(A, B), 3) == epsilon_i(B, 3) == 2


def test_json_round_trip():
    A = shuffle(word_char((1, 2)), word_char((1,)), graded=True)
    data = json.loads(json.dumps(A.to_json()))
    assert data["alpha"] == [2, 1, 0]
    assert data["terms"][0] == {"word": [1, 1, 2], "coeff": {"-1": 1, "1": 1}}
    assert QChar.from_json(data) == A


def test_weight_mismatch_rejected():
    with pytest.raises(DomainError):
        QChar(RootVector((1, 0, 0)), {(2,): LaurentPoly.const(1)})
