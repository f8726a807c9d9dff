import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from coxsort.coxeter import (
    INFINITY,
    CoxeterMatrix,
    bruhat_leq,
    create_system,
    evaluate_word,
    exchange_delete,
    format_word,
    is_left_descent,
    is_reduced,
    is_right_descent,
    longest_element,
    parse_matrix_text,
    parse_word,
    preset,
    preset_matrix,
    reduced_words,
    weak_leq,
)

from oracles import (
    DihedralModel,
    PermModel,
    SignedPermModel,
    brute_reduced_words,
    cayley_lengths,
    commutation_classes,
    evaluate,
    inversion_pairs,
    perm_left_descents,
    perm_right_descents,
    subword_products,
)


def _words(model, lengths):
    """One word per model element, read off a BFS tree."""
    words = {model.identity: ()}
    frontier = [model.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in range(1, model.rank + 1):
                h = model.right(g, s)
                if h in lengths and h not in words and lengths[h] == lengths[g] + 1:
                    words[h] = words[g] + (s,)
                    nxt.append(h)
        frontier = nxt
    return words


@pytest.mark.parametrize(
    "name,length",
    [("A1", 1), ("A2", 3), ("A3", 6), ("A4", 10), ("B2", 4), ("B3", 9), ("D4", 12), ("H3", 15),
     ("F4", 24), ("I2:4", 4), ("I2:7", 7), ("E6", 36)],
)
def test_longest_element_length_is_number_of_positive_roots(name, length):
    assert longest_element(preset(name)).length == length


def test_infinite_group_has_no_longest_element():
    with pytest.raises(ValueError):
        longest_element(preset("I2:inf"), max_length=30)


@pytest.mark.parametrize(
    "name,model",
    [("A3", PermModel(4)), ("B3", SignedPermModel(3)), ("I2:5", DihedralModel(5)), ("I2:6", DihedralModel(6))],
)
def test_lengths_and_group_match_cayley_bfs(name, model):
    sys = preset(name)
    lengths = _lengths = cayley_lengths(model)
    words = _words(model, _lengths)
    seen = {}
    for g, w in words.items():
        u = sys.element(w)
        assert u.length == lengths[g]
        seen[u] = g
    # the representation is faithful: distinct model elements give distinct elements
    assert len(seen) == len(words)
    # random long words agree with the model
    rng = random.Random(1)
    for _ in range(100):
        w = [rng.randint(1, sys.n) for _ in range(rng.randint(0, 15))]
        assert sys.element(w).length == lengths[evaluate(model, w)]


def test_infinite_dihedral_lengths():
    sys = preset("I2:inf")
    model = DihedralModel(None)
    lengths = cayley_lengths(model, max_length=12)
    rng = random.Random(2)
    for _ in range(200):
        w = [rng.randint(1, 2) for _ in range(rng.randint(0, 12))]
        assert sys.element(w).length == lengths[evaluate(model, w)]
    assert is_reduced(sys, (1, 2) * 10)


def test_descents_all_of_s4():
    sys = preset("A3")
    model = PermModel(4)
    lengths = cayley_lengths(model)
    for p, w in _words(model, lengths).items():
        u = sys.element(w)
        assert set(sys.left_descents(u)) == perm_left_descents(p)
        assert set(sys.right_descents(u)) == perm_right_descents(p)
        assert u.length == len(inversion_pairs(p))


def test_descents_random_s6():
    sys = preset("A5")
    model = PermModel(6)
    rng = random.Random(3)
    for _ in range(1000):
        w = [rng.randint(1, 5) for _ in range(rng.randint(0, 25))]
        p = evaluate(model, w)
        u = sys.element(w)
        assert u.length == len(inversion_pairs(p))
        for s in range(1, 6):
            assert is_left_descent(sys, u, s) == (s in perm_left_descents(p))
            assert is_right_descent(sys, u, s) == (s in perm_right_descents(p))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=12), st.lists(st.integers(1, 3), max_size=12))
def test_multiplication_and_inverse(a, b):
    sys = preset("B3")
    u, w = sys.element(a), sys.element(b)
    assert sys.multiply(u, w) == sys.element(a + b)
    assert u * u.inverse() == sys.identity
    assert u.inverse() == sys.element(list(reversed(a)))
    assert sys.element(sys.reduced_word(u)) == u
    assert len(sys.reduced_word(u)) == u.length


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 3), max_size=10), st.integers(1, 3))
def test_descent_xor_length_change(a, s):
    sys = preset("H3")
    u = sys.element(a)
    us = sys.left_multiply(s, u)
    assert (us.length == u.length - 1) == sys.is_left_descent(u, s)
    assert abs(us.length - u.length) == 1


def test_bruhat_matches_subword_oracle_s4():
    sys = preset("A3")
    model = PermModel(4)
    lengths = cayley_lengths(model)
    words = _words(model, lengths)
    elems = {g: sys.element(w) for g, w in words.items()}
    for gw, w in words.items():
        below = subword_products(model, w)
        for gu, u in elems.items():
            assert bruhat_leq(sys, u, elems[gw]) == (gu in below)


def test_bruhat_matches_subword_oracle_b3_sample():
    sys = preset("B3")
    model = SignedPermModel(3)
    lengths = cayley_lengths(model)
    words = _words(model, lengths)
    elems = {g: sys.element(w) for g, w in words.items()}
    rng = random.Random(5)
    for gw in rng.sample(sorted(words), 20):
        below = subword_products(model, words[gw])
        for gu, u in elems.items():
            assert bruhat_leq(sys, u, elems[gw]) == (gu in below)


def test_weak_order_is_inversion_containment_s4():
    sys = preset("A3")
    model = PermModel(4)
    lengths = cayley_lengths(model)
    words = _words(model, lengths)
    for p, a in words.items():
        for q, b in words.items():
            expected = inversion_pairs(p) <= inversion_pairs(q)
            assert weak_leq(sys, sys.element(a), sys.element(b)) == expected


def test_exchange_delete():
    sys = preset("A3")
    word = (1, 2, 3, 2, 1, 2)
    u = sys.element(word)
    for s in sys.left_descents(u):
        i = exchange_delete(sys, word, s)
        assert sys.element(word[: i - 1] + word[i:]) == sys.left_multiply(s, u)
    assert exchange_delete(sys, (1, 2, 1), 2) == 3
    with pytest.raises(ValueError):
        exchange_delete(sys, (1, 2), 2)


def test_reduced_words_of_s4_longest_element():
    sys = preset("A3")
    w0 = longest_element(sys)
    words = reduced_words(sys, w0)
    model = PermModel(4)
    lengths = cayley_lengths(model)
    brute = brute_reduced_words(model, lengths, (4, 3, 2, 1), (1, 2, 3))
    assert set(words) == brute
    assert len(words) == 16
    assert words == sorted(words)
    classes = commutation_classes(words, lambda s, t: abs(s - t) > 1)
    assert len(classes) == 8


def test_is_reduced():
    sys = preset("A2")
    assert is_reduced(sys, (1, 2, 1))
    assert not is_reduced(sys, (1, 2, 1, 2))
    assert not is_reduced(sys, (1, 1))
    assert is_reduced(sys, ())


def test_matrix_validation():
    with pytest.raises(ValueError, match="asymmetric"):
        CoxeterMatrix([[1, 3], [4, 1]])
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 3], [3, 2]])
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 1], [1, 1]])
    with pytest.raises(ValueError):
        CoxeterMatrix([[1, 3, 2], [3, 1]])


def test_field_degree_choice():
    assert preset("A3").N == 3
    assert preset("B3").N == 12
    assert preset("B2").N == 4
    assert preset("H3").N == 15
    assert preset("I2:inf").N == 2
    assert create_system([[1, 2], [2, 1]]).N == 2


def test_presets():
    assert preset_matrix("B3") == [[1, 4, 2], [4, 1, 3], [2, 3, 1]]
    assert preset_matrix("I2:inf") == [[1, INFINITY], [INFINITY, 1]]
    d4 = preset_matrix("D4")
    assert d4[0][2] == d4[1][2] == d4[2][3] == 3 and d4[0][1] == 2
    with pytest.raises(ValueError):
        preset("Q3")
    with pytest.raises(ValueError):
        preset("I2:1")


def test_bilinear_form():
    sys = preset("B2")
    assert float(sys.bilinear_form(1, 1)) == pytest.approx(1.0)
    assert float(sys.bilinear_form(1, 2)) == pytest.approx(-(2**0.5) / 2)
    inf = preset("I2:inf")
    assert float(inf.bilinear_form(1, 2)) == pytest.approx(-1.0)


def test_text_formats_round_trip():
    m = CoxeterMatrix(preset_matrix("H3"))
    assert parse_matrix_text(m.to_text()) == m
    with pytest.raises(ValueError):
        parse_matrix_text("3\n1 3 2\n3 1 3\n")
    with pytest.raises(ValueError):
        parse_matrix_text("2\n1 x\nx 1\n")
    assert parse_word("1234321232") == (1, 2, 3, 4, 3, 2, 1, 2, 3, 2)
    assert parse_word("1, 2 3") == (1, 2, 3)
    assert format_word((2, 3, 4)) == "(2,3,4)"
    with pytest.raises(ValueError):
        parse_word("1,5", n=4)
    with pytest.raises(ValueError):
        parse_word("1,a")
    a2 = preset("A2")
    assert evaluate_word(a2, ()) == a2.identity


def test_letter_out_of_range():
    with pytest.raises(ValueError):
        preset("A2").element((3,))
