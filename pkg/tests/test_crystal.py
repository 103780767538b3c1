import json

import pytest
from hypothesis import given, settings, strategies as st

from klrtab import fixtures
from klrtab.cartan import RootVector, Weight
from klrtab.crystal import (
    BoxElement,
    CElement,
    TElement,
    TensorElement,
    box_ops,
    check_crystal_axioms,
    crystal_isomorphic,
    generate_crystal,
    reading_op,
    tableau_e,
    tableau_epsilon,
    tableau_f,
    tensor_e,
    tensor_f,
    tensor_rule_e,
    tensor_rule_f,
)
from klrtab.errors import DomainError
from klrtab.tableaux import Tableau, count_ssyt, highest_weight_tableau, partitions
from oracles import tensor_rule_pair


def test_box_ops():
    assert box_ops(1, 1) == (None, 2, 0, 1)
    assert box_ops(3, 1) == (None, None, 0, 0)
    assert box_ops(5, 4) == (4, None, 1, 0)


@pytest.mark.parametrize("word, e, f", [
    ((2, 1), (1, 1), (2, 2)),
    ((1, 2), None, None),
    ((2, 2), (2, 1), None),
    ((1, 1), None, (2, 1)),
])
def test_two_box_words(word, e, f):
    assert tensor_e(word, 1) == e
    assert tensor_f(word, 1) == f
    assert tensor_rule_pair(word[0], word[1], 1) == (e, f)


words = st.integers(1, 3).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.integers(1, n + 1), max_size=7),
                        st.integers(1, n)))


@settings(max_examples=300)
@given(words)
def test_signature_rule_matches_tensor_rule(data):
    n, word, i = data
    assert tensor_e(word, i) == tensor_rule_e(word, i, n)
    assert tensor_f(word, i) == tensor_rule_f(word, i, n)
    elem = TensorElement(tuple(BoxElement(x, n) for x in word)) if word else None
    if elem is not None:
        from klrtab.crystal import word_epsilon, word_phi
        assert elem.epsilon(i) == word_epsilon(word, i)
        assert elem.phi(i) == word_phi(word, i)


def test_aux_crystals():
    t = TElement(Weight((2, 0)))
    c = CElement(2)
    assert t.epsilon(1) == t.phi(1) == float("-inf")
    assert c.epsilon(1) == c.phi(1) == 0
    assert t.e(1) is None and c.f(2) is None
    # t (x) c: eps = -<h, lambda>, phi = 0
    tc = TensorElement((t, c))
    assert tc.epsilon(1) == -2 and tc.phi(1) == 0


def test_box_rejects_out_of_range():
    with pytest.raises(DomainError):
        BoxElement(4, 2)


def test_tableau_operators_on_example():
    T = fixtures.EXAMPLE_TABLEAU
    assert tableau_epsilon(T, 2) == 3
    S = T
    for _ in range(3):
        S = tableau_e(S, 2)
    assert S == fixtures.EXAMPLE_RAISED
    assert tableau_e(S, 2) is None
    hw = highest_weight_tableau((3, 2))
    assert all(tableau_e(hw, i) is None for i in (1, 2, 3))
    assert tableau_f(Tableau.from_rows([[1]]), 1) == Tableau.from_rows([[2]])


@pytest.mark.parametrize("shape, n, size", [((1,), 1, 2), ((2, 1), 2, 8), ((), 3, 1)])
def test_generate_crystal_sizes(shape, n, size):
    assert len(generate_crystal(shape, n)) == size


def test_generate_rejects_non_highest():
    with pytest.raises(DomainError):
        generate_crystal(Tableau.from_rows([[2]]), 1)


def test_crystal_axioms_and_counts():
    for n in range(1, 4):
        for size in range(5):
            for shape in partitions(size, n):
                G = generate_crystal(shape, n)
                assert len(G) == count_ssyt(shape, n + 1)
                assert check_crystal_axioms(G) == []


def test_isomorphism():
    G = generate_crystal((2, 1), 2)
    assert crystal_isomorphic(G, G)
    assert crystal_isomorphic(G, generate_crystal((2, 1), 2, "far"))
    a, b = generate_crystal((1,), 2), generate_crystal((1, 1), 2)
    assert len(a) == len(b) == 3
    assert not crystal_isomorphic(a, b)


def test_readings_agree_vertexwise():
    G = generate_crystal((2, 2, 1), 3)
    for T in G.vertices:
        for i in range(1, 4):
            for raising in (True, False):
                assert reading_op(T, i, raising, "middle") == reading_op(T, i, raising, "far")


def test_deterministic_export():
    a = generate_crystal((2, 1), 2).to_dot()
    b = generate_crystal((2, 1), 2).to_dot()
    assert a == b
    assert a.splitlines()[1] == '  v0 [label="1,1/2\\nwt=(1,1)"];'
    data = json.loads(generate_crystal((1,), 1).dumps("json"))
    assert data["edges"] == [[0, 1, 1]]
    assert [v["tableau"]["rows"] for v in data["vertices"]] == [[[1]], [[2]]]
