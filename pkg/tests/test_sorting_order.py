import json

import pytest

from coxsort.convexity import is_antimatroid, is_supersolvable_antimatroid
from coxsort.coxeter import bruhat_leq, longest_element, preset, reduced_words, weak_leq
from coxsort.lattice import is_join_distributive, is_sn_el_labelling, is_supersolvable
from coxsort.sorting_order import (
    build_sorting_order,
    build_truncated_infinite,
    bruhat_covers,
    commutation_class,
    compare_orders,
    sorting_order_to_dot,
    sorting_order_to_json,
    verify_commutation_invariance,
    verify_maximality,
    weak_covers,
)
from coxsort.subwords import SortingWord


def _order(name, letters):
    return build_sorting_order(SortingWord(preset(name), letters))


def _brute_covers(so, leq):
    """Cover pairs of the relation ``leq`` on W_omega, by checking every triple."""
    k = len(so)
    els = so.elements
    rel = [[i != j and leq(els[i], els[j]) for j in range(k)] for i in range(k)]
    return {
        (i, j)
        for i in range(k)
        for j in range(k)
        if rel[i][j] and not any(rel[i][z] and rel[z][j] for z in range(k))
    }


def test_dihedral_sandwich():
    so = _order("I2:4", (1, 2, 1, 2))
    sys = so.word.system
    assert len(so) == 8
    cmp_ = compare_orders(so)
    assert (cmp_.weak_cover_count, cmp_.sorting_cover_count, cmp_.bruhat_cover_count) == (8, 10, 12)
    assert cmp_.weak_relations < cmp_.sorting_relations < cmp_.bruhat_relations
    assert weak_covers(so) == _brute_covers(so, lambda u, w: weak_leq(sys, u, w))
    assert bruhat_covers(so) == _brute_covers(so, lambda u, w: bruhat_leq(sys, u, w))
    assert set(so.lattice.covers) == _brute_covers(so, so.leq)


def test_i2_3_counts():
    cmp_ = compare_orders(_order("I2:3", (1, 2, 1)))
    assert (cmp_.weak_cover_count, cmp_.sorting_cover_count, cmp_.bruhat_cover_count) == (6, 7, 8)


def test_s4_cocktail_shaker():
    so = _order("A3", (1, 2, 3, 2, 1, 2))
    assert len(so) == 24
    cmp_ = compare_orders(so)
    assert cmp_.weak_subset and cmp_.bruhat_superset
    assert cmp_.strict_below and cmp_.strict_above
    lat = so.lattice
    assert all(lat.rank[i] == u.length for i, u in enumerate(so.elements))
    report = is_join_distributive(lat)
    assert report.boolean_atomic and report.unique_meet_decomp and report.usm_and_msd
    assert is_sn_el_labelling(lat)
    assert is_supersolvable_antimatroid(so.family)


def test_every_reduced_word_of_s4_longest():
    sys = preset("A3")
    for w in reduced_words(sys, longest_element(sys)):
        so = build_sorting_order(SortingWord(sys, w))
        assert len(so) == 24
        assert is_antimatroid(so.family)
        assert is_supersolvable_antimatroid(so.family)
        cmp_ = compare_orders(so)
        assert cmp_.weak_subset and cmp_.bruhat_superset


@pytest.mark.parametrize(
    "name,letters",
    [("B2", (1, 2, 1, 2)), ("B3", (1, 2, 1, 3, 2, 1)), ("H3", (1, 2, 1, 2, 3)), ("A3", (2, 1, 3, 2, 2, 1)),
     ("I2:5", (1, 2, 1, 2, 1, 2, 1))],
)
def test_antimatroid_for_other_words(name, letters):
    # any sorting word, reduced or not
    so = _order(name, letters)
    assert is_antimatroid(so.family)
    assert is_supersolvable_antimatroid(so.family)
    assert is_join_distributive(so.lattice)
    cmp_ = compare_orders(so)
    assert cmp_.weak_subset and cmp_.bruhat_superset


def test_commuting_letters_collapse_the_sandwich():
    # in A1 x A1 all three orders coincide
    so = _order("D4", (1, 2))
    cmp_ = compare_orders(so)
    assert not cmp_.strict_below and not cmp_.strict_above
    assert cmp_.weak_cover_count == cmp_.sorting_cover_count == cmp_.bruhat_cover_count == 4


def test_maximality():
    assert verify_maximality(_order("I2:3", (1, 2, 1)))
    assert verify_maximality(_order("I2:4", (1, 2, 1, 2)))
    assert verify_maximality(_order("A3", (1, 2, 3, 2, 1, 2)), samples=50)


def test_weak_has_fewer_covers_than_sorting():
    so = _order("I2:4", (1, 2, 1, 2))
    assert len(weak_covers(so)) < len(so.lattice.covers)


def test_commutation_invariance():
    sys = preset("A3")
    for w in [(1, 3, 2, 1, 3, 2), (1, 2, 3, 2, 1, 2), (3, 1, 2)]:
        assert verify_commutation_invariance(SortingWord(sys, w))


def test_commutation_classes_of_s4_longest():
    sys = preset("A3")
    words = reduced_words(sys, longest_element(sys))
    classes = {frozenset(commutation_class(SortingWord(sys, w))) for w in words}
    assert len(classes) == 8
    assert sum(len(c) for c in classes) == 16
    for cls in classes:
        orders = set()
        for w in cls:
            so = build_sorting_order(SortingWord(sys, w))
            orders.add(frozenset(so.relation_pairs()))
        assert len(orders) == 1


def test_infinite_dihedral_truncation():
    sys = preset("I2:inf")
    so, report = build_truncated_infinite(sys, (1, 2, 1, 2, 1, 2))
    assert len(so) == 12
    assert report
    assert report.intervals > 0
    s1, s2 = sys.element((1,)), sys.element((2,))
    j = so.lattice.join(so.index[s1], so.index[s2])
    assert so.elements[j] == sys.element((1, 2))


def test_truncation_must_be_reduced():
    with pytest.raises(ValueError, match="not reduced"):
        build_truncated_infinite(preset("I2:3"), (1, 2, 1, 2))


def test_odd_truncation_intervals():
    so, report = build_truncated_infinite(preset("I2:inf"), (2, 1, 2, 1, 2))
    assert report and len(so) == 10
    assert is_supersolvable(so.lattice)


def test_element_cap():
    with pytest.raises(ValueError, match="cap"):
        build_sorting_order(SortingWord(preset("A3"), (1, 2, 3, 2, 1, 2)), element_cap=10)


def test_exports_are_deterministic():
    so = _order("I2:4", (1, 2, 1, 2))
    doc = json.loads(sorting_order_to_json(so))
    assert doc["word"] == [1, 2, 1, 2]
    assert len(doc["elements"]) == 8 and len(doc["covers"]) == 10
    for e in doc["elements"]:
        assert len(e["one_reduced_word"]) == e["length"] == len(e["index_set"])
    dot = sorting_order_to_dot(so)
    assert dot == sorting_order_to_dot(_order("I2:4", (1, 2, 1, 2)))
    assert dot.count("->") == 12
    assert dot.count("penwidth=4") == 8
    assert dot.count("style=dotted") == 2
    assert dot.count("style=solid") == 2
