import pytest
from hypothesis import given, strategies as st

from klrtab.cartan import (
    RootVector,
    Weight,
    bilinear,
    cartan_matrix,
    dominant_to_partition,
    partition_to_dominant,
    weight_of_word,
)
from klrtab.errors import DomainError


def test_cartan_matrix_shape():
    A = cartan_matrix(4)
    assert A[0] == (2, -1, 0, 0)
    assert all(A[i][j] == A[j][i] for i in range(4) for j in range(4))
    assert {sum(row) for row in A} <= {0, 1, 2}


@pytest.mark.parametrize("a, expected", [
    ((2, 2, 0, 1, 1), (6, 4, 2, 2, 1)),
    ((0, 0, 0), (0, 0, 0)),
    ((1, 1), (2, 1)),
])
def test_dominant_to_partition(a, expected):
    assert dominant_to_partition(a) == expected


def test_dominant_to_partition_rejects_negative():
    with pytest.raises(DomainError):
        dominant_to_partition((1, -1))


@given(st.lists(st.integers(0, 5), min_size=1, max_size=6))
def test_dominant_partition_round_trip(a):
    assert partition_to_dominant(dominant_to_partition(a), len(a)) == tuple(a)


def test_bilinear_examples():
    a1 = RootVector.simple(1, 3)
    a2 = RootVector.simple(2, 3)
    a3 = RootVector.simple(3, 3)
    assert bilinear(a1, a1) == 2
    assert bilinear(a1, a3) == 0
    assert bilinear(a1 + a2, a2) == 1
    with pytest.raises(DomainError):
        bilinear(a1, RootVector.simple(1, 2))


vectors = st.integers(1, 5).flatmap(
    lambda n: st.tuples(*[st.lists(st.integers(-3, 3), min_size=n, max_size=n)] * 2))


@given(vectors)
def test_bilinear_symmetric(pair):
    b, g = RootVector(tuple(pair[0])), RootVector(tuple(pair[1]))
    assert bilinear(b, g) == bilinear(g, b)
    # against the matrix directly
    A = cartan_matrix(b.n)
    assert bilinear(b, g) == sum(b.coeffs[i] * g.coeffs[j] * A[i][j]
                                 for i in range(b.n) for j in range(b.n))


def test_weight_of_word():
    assert weight_of_word((1, 2, 1), 3).coeffs == (2, 1, 0)
    assert weight_of_word((), 3) == RootVector.zero(3)
    assert weight_of_word((2, 3, 4), 5).coeffs == (0, 1, 1, 1, 0)
    with pytest.raises(DomainError):
        weight_of_word((4,), 3)


@given(st.lists(st.integers(1, 4)), st.lists(st.integers(1, 4)))
def test_weight_of_word_additive(u, v):
    assert weight_of_word(u + v, 4) == weight_of_word(u, 4) + weight_of_word(v, 4)


def test_root_to_weight():
    # alpha_1 in sl_3 pairs to (2, -1)
    assert RootVector.simple(1, 2).to_weight() == Weight((2, -1))
    assert RootVector((1, 1)).to_weight() == Weight((1, 1))
