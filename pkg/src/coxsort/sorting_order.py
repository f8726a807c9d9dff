"""The sorting order on W_omega and its comparison with weak and Bruhat order."""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field

from .convexity import SetSystem, members
from .coxeter import CoxeterSystem, GroupElement, bruhat_leq, format_word, is_reduced, weak_leq
from .lattice import (
    GradedLattice,
    build_lattice_from_family,
    is_join_distributive,
    is_lattice,
    is_maximal_lattice,
    is_supersolvable,
)
from .subwords import DEFAULT_WORD_CAP, SortingWord, Subword, commutation_swap, enumerate_sorted

__all__ = [
    "DEFAULT_ELEMENT_CAP",
    "SortingOrder",
    "OrderComparison",
    "TruncationReport",
    "build_sorting_order",
    "compare_orders",
    "bruhat_covers",
    "weak_covers",
    "verify_maximality",
    "verify_commutation_invariance",
    "commutation_class",
    "build_truncated_infinite",
    "sorting_order_to_json",
    "sorting_order_to_dot",
]

DEFAULT_ELEMENT_CAP = 5000


@dataclass
class SortingOrder:
    word: SortingWord
    family: SetSystem
    lattice: GradedLattice
    elements: list[GroupElement]
    index: dict[GroupElement, int] = field(repr=False)

    def __len__(self):
        return len(self.elements)

    def subword(self, i: int) -> Subword:
        return Subword.from_mask(self.word, self.lattice.elements[i])

    def sorted_word(self, u: GroupElement) -> Subword:
        return self.subword(self.index[u])

    def leq(self, u: GroupElement, w: GroupElement) -> bool:
        return self.lattice.leq(self.index[u], self.index[w])

    def relation_pairs(self) -> set[tuple[GroupElement, GroupElement]]:
        lat = self.lattice
        return {
            (self.elements[i], self.elements[j])
            for i in range(len(lat))
            for j in range(len(lat))
            if lat.leq(i, j)
        }


def build_sorting_order(
    word: SortingWord,
    word_cap: int = DEFAULT_WORD_CAP,
    element_cap: int = DEFAULT_ELEMENT_CAP,
) -> SortingOrder:
    """Sorted index sets under inclusion, with their group elements attached."""
    family = enumerate_sorted(word, cap=word_cap)
    if len(family) > element_cap:
        raise ValueError(f"|W_omega| = {len(family)} exceeds the element cap {element_cap}")
    lattice = build_lattice_from_family(family)
    elements = [Subword.from_mask(word, A).element() for A in lattice.elements]
    index = {u: i for i, u in enumerate(elements)}
    assert len(index) == len(elements), "two sorted words for one element"
    for i, u in enumerate(elements):
        assert lattice.rank[i] == u.length
    return SortingOrder(word, family, lattice, elements, index)


def weak_covers(so: SortingOrder) -> set[tuple[int, int]]:
    """Right weak covers u < us inside W_omega (as lattice indices)."""
    sys = so.word.system
    out = set()
    for i, u in enumerate(so.elements):
        for s in sys.generators:
            if not sys.is_right_descent(u, s):
                j = so.index.get(sys.right_multiply(u, s))
                if j is not None:
                    out.add((i, j))
    return out


def bruhat_covers(so: SortingOrder) -> set[tuple[int, int]]:
    """Bruhat covers inside W_omega: u <_B w with l(w) = l(u) + 1."""
    sys = so.word.system
    by_len: dict[int, list[int]] = {}
    for i, u in enumerate(so.elements):
        by_len.setdefault(u.length, []).append(i)
    out = set()
    for k, lower in by_len.items():
        for i in lower:
            for j in by_len.get(k + 1, ()):
                if bruhat_leq(sys, so.elements[i], so.elements[j]):
                    out.add((i, j))
    return out


@dataclass(frozen=True)
class OrderComparison:
    weak_subset: bool
    bruhat_superset: bool
    strict_below: bool
    strict_above: bool
    weak_relations: int
    sorting_relations: int
    bruhat_relations: int
    weak_cover_count: int
    sorting_cover_count: int
    bruhat_cover_count: int


def compare_orders(so: SortingOrder) -> OrderComparison:
    """Check weak ⊆ sorting ⊆ Bruhat pairwise on W_omega."""
    sys = so.word.system
    lat = so.lattice
    k = len(lat)
    weak = bruhat = sort = 0
    weak_subset = bruhat_superset = True
    for i in range(k):
        for j in range(k):
            if i == j:
                continue
            u, w = so.elements[i], so.elements[j]
            if u.length >= w.length:
                continue
            s_ij = lat.leq(i, j)
            w_ij = weak_leq(sys, u, w)
            b_ij = bruhat_leq(sys, u, w)
            weak += w_ij
            sort += s_ij
            bruhat += b_ij
            if w_ij and not s_ij:
                weak_subset = False
            if s_ij and not b_ij:
                bruhat_superset = False
    return OrderComparison(
        weak_subset=weak_subset,
        bruhat_superset=bruhat_superset,
        strict_below=weak_subset and sort > weak,
        strict_above=bruhat_superset and bruhat > sort,
        weak_relations=weak,
        sorting_relations=sort,
        bruhat_relations=bruhat,
        weak_cover_count=len(weak_covers(so)),
        sorting_cover_count=len(lat.covers),
        bruhat_cover_count=len(bruhat_covers(so)),
    )


def verify_maximality(so: SortingOrder, samples: int = 200, exhaustive_limit: int = 12, seed: int = 0) -> bool:
    """Adding missing Bruhat covers (in tested combinations) always breaks the lattice."""
    missing = sorted(bruhat_covers(so) - set(so.lattice.covers))
    return is_maximal_lattice(
        so.lattice, missing, samples=samples, exhaustive_limit=exhaustive_limit, rng=random.Random(seed)
    )


def _legal_swaps(word: SortingWord) -> list[int]:
    m = word.system.coxeter_matrix
    L = word.letters
    return [i for i in range(1, len(L)) if L[i - 1] != L[i] and m[L[i - 1], L[i]] == 2]


def _swap_mask(mask: int, i: int) -> int:
    a = mask >> (i - 1) & 1
    b = mask >> i & 1
    mask &= ~(3 << (i - 1))
    return mask | b << (i - 1) | a << i


def verify_commutation_invariance(word: SortingWord, word_cap: int = DEFAULT_WORD_CAP) -> bool:
    """Every legal commuting swap gives the same W_omega and the same order on it."""
    base = build_sorting_order(word, word_cap)
    base_rel = base.relation_pairs()
    for i in _legal_swaps(word):
        other = build_sorting_order(commutation_swap(word, i), word_cap)
        if set(other.index) != set(base.index):
            return False
        if {_swap_mask(A, i) for A in base.family} != set(other.family.family):
            return False
        if other.relation_pairs() != base_rel:
            return False
    return True


def commutation_class(word: SortingWord) -> set[tuple[int, ...]]:
    """All words reachable by swapping adjacent commuting letters."""
    seen = {word.letters}
    stack = [word]
    while stack:
        w = stack.pop()
        for i in _legal_swaps(w):
            z = commutation_swap(w, i)
            if z.letters not in seen:
                seen.add(z.letters)
                stack.append(z)
    return seen


@dataclass(frozen=True)
class TruncationReport:
    is_lattice: bool
    intervals: int
    intervals_join_distributive: bool
    intervals_supersolvable: bool

    def __bool__(self):
        return self.is_lattice and self.intervals_join_distributive and self.intervals_supersolvable


def build_truncated_infinite(
    sys: CoxeterSystem, letters, word_cap: int = DEFAULT_WORD_CAP
) -> tuple[SortingOrder, TruncationReport]:
    """Sorting order of a finite prefix of an infinite word, with interval checks.

    The prefix must be reduced (every prefix of a reduced word is reduced).
    """
    letters = tuple(letters)
    if not is_reduced(sys, letters):
        raise ValueError(f"prefix {format_word(letters)} is not reduced")
    so = build_sorting_order(SortingWord(sys, letters), word_cap)
    lat = so.lattice
    count = 0
    jd = ss = True
    for x in range(len(lat)):
        for y in range(len(lat)):
            if x != y and lat.leq(x, y):
                count += 1
                sub = lat.interval(x, y)
                if jd and not is_join_distributive(sub):
                    jd = False
                if ss and not is_supersolvable(sub):
                    ss = False
    return so, TruncationReport(is_lattice(lat), count, jd, ss)


def sorting_order_to_json(so: SortingOrder) -> str:
    sys = so.word.system
    doc = {
        "word": list(so.word.letters),
        "elements": [
            {
                "index_set": list(members(A)),
                "length": so.elements[i].length,
                "one_reduced_word": list(sys.reduced_word(so.elements[i])),
            }
            for i, A in enumerate(so.lattice.elements)
        ],
        "covers": [list(c) for c in so.lattice.covers],
    }
    return json.dumps(doc, indent=2)


def sorting_order_to_dot(so: SortingOrder) -> str:
    """Bruhat Hasse diagram styled as weak (bold grey), sorting-only (solid), Bruhat-only (dotted)."""
    weak = weak_covers(so)
    sorting = set(so.lattice.covers)
    edges = sorted(bruhat_covers(so) | sorting)
    lat = so.lattice
    out = ["digraph sorting_order {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i in range(len(lat)):
        out.append(f'  n{i} [label="{so.subword(i).placeholder_string() or "e"}"];')
    for r in range(lat.height + 1):
        same = " ".join(f"n{i};" for i in range(len(lat)) if lat.rank[i] == r)
        out.append(f"  {{ rank=same; {same} }}")
    for a, b in edges:
        if (a, b) in weak:
            style = 'color="gray60", penwidth=4'
        elif (a, b) in sorting:
            style = "style=solid"
        else:
            style = "style=dotted"
        out.append(f"  n{a} -> n{b} [{style}];")
    out.append("}")
    return "\n".join(out) + "\n"
