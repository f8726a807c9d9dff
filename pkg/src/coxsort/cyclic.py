"""Sorting by the cyclic word c^infinity, c-sortable elements and Catalan counts.

The infinite word is never materialised.  For an element of length l the
prefix of c^infinity with l copies of c is enough: while the residual is not
the identity it has a left descent, and every copy of c contains every
generator, so each copy removes at least one letter.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Sequence

from .coxeter import CoxeterSystem, GroupElement, bruhat_leq, longest_element
from .lattice import (
    GradedLattice,
    build_lattice_from_family,
    is_join_distributive,
    is_supersolvable,
    poset_isomorphic,
)
from .convexity import SetSystem
from .subwords import SortingWord, Subword, enumerate_sorted, sort_element

__all__ = [
    "DEGREES",
    "degrees",
    "catalan_number",
    "check_coxeter_word",
    "cyclic_prefix",
    "c_sort",
    "blocks",
    "is_c_sortable",
    "enumerate_group",
    "enumerate_sortables",
    "sortable_family",
    "sortable_lattice",
    "SortableReport",
    "sortable_report",
    "SortableCensus",
    "sortable_census",
    "census_to_json",
]

# degrees of the basic invariants and Coxeter number h for the exceptional types
DEGREES: dict[str, tuple[tuple[int, ...], int]] = {
    "H3": ((2, 6, 10), 10),
    "F4": ((2, 6, 8, 12), 12),
}


def degrees(type_name: str) -> tuple[tuple[int, ...], int]:
    """(degrees, Coxeter number) for A_n, B_n, D_n, I2(m), H3, F4."""
    key = type_name.strip().upper()
    if key in DEGREES:
        return DEGREES[key]
    m = re.fullmatch(r"I2:(\d+)", key)
    if m and int(m.group(1)) >= 2:
        k = int(m.group(1))
        return (2, k), k
    m = re.fullmatch(r"([ABD])(\d+)", key)
    if m:
        family, n = m.group(1), int(m.group(2))
        if family == "A" and n >= 1:
            return tuple(range(2, n + 2)), n + 1
        if family == "B" and n >= 2:
            return tuple(range(2, 2 * n + 1, 2)), 2 * n
        if family == "D" and n >= 4:
            return tuple(sorted(list(range(2, 2 * n - 1, 2)) + [n])), 2 * n - 2
    raise ValueError(f"no degree data for type {type_name!r}")


def catalan_number(type_name: str) -> int:
    """Cat(W) = prod (h + d_i) / d_i."""
    ds, h = degrees(type_name)
    value = Fraction(1)
    for d in ds:
        value *= Fraction(h + d, d)
    assert value.denominator == 1
    return int(value)


def check_coxeter_word(sys: CoxeterSystem, c: Sequence[int]) -> tuple[int, ...]:
    c = tuple(c)
    if sorted(c) != list(sys.generators):
        raise ValueError(f"{c} is not a Coxeter word: each generator must appear exactly once")
    return c


def cyclic_prefix(sys: CoxeterSystem, c: Sequence[int], copies: int) -> SortingWord:
    c = check_coxeter_word(sys, c)
    return SortingWord(sys, c * copies)


def c_sort(sys: CoxeterSystem, c: Sequence[int], u: GroupElement, copies: int | None = None) -> Subword:
    """The c^infinity-sorted word of u, as a subword of l(u) (or ``copies``) copies of c."""
    copies = u.length if copies is None else max(copies, u.length)
    word = cyclic_prefix(sys, c, copies)
    # the residual must reach the identity within l(u) copies
    return sort_element(word, u)


def blocks(alpha: Subword, n: int) -> list[frozenset[int]]:
    """Letter supports of the blocks alpha_(1), alpha_(2), ... (trailing empties dropped)."""
    out: list[set[int]] = []
    letters = alpha.parent.letters
    for i in alpha.indices:
        b = (i - 1) // n
        while len(out) <= b:
            out.append(set())
        out[b].add(letters[i - 1])
    return [frozenset(s) for s in out]


def _supports_descend(supports: Sequence[frozenset[int]]) -> bool:
    return all(supports[i] >= supports[i + 1] for i in range(len(supports) - 1))


def is_c_sortable(sys: CoxeterSystem, c: Sequence[int], u: GroupElement) -> bool:
    """Block supports of the sorted word form a descending chain."""
    return _supports_descend(blocks(c_sort(sys, c, u), sys.n))


def enumerate_group(sys: CoxeterSystem, word_cap: int = 64, element_cap: int = 5000) -> list[GroupElement]:
    """All elements of a finite W, from the sorted subwords of a reduced word for w0."""
    w0 = longest_element(sys)
    if w0.length > word_cap:
        raise ValueError(f"longest element has length {w0.length}, above the cap {word_cap}")
    word = SortingWord(sys, sys.reduced_word(w0))
    family = enumerate_sorted(word, cap=word_cap)
    if len(family) > element_cap:
        raise ValueError(f"|W| = {len(family)} exceeds the element cap {element_cap}")
    return [Subword.from_mask(word, A).element() for A in family.family]


def enumerate_sortables(sys: CoxeterSystem, c: Sequence[int], element_cap: int = 5000) -> list[GroupElement]:
    c = check_coxeter_word(sys, c)
    return [u for u in enumerate_group(sys, element_cap=element_cap) if is_c_sortable(sys, c, u)]


def sortable_family(sys: CoxeterSystem, c: Sequence[int], element_cap: int = 5000):
    """Sortable elements and their sorted index sets in one common prefix of c^infinity."""
    c = check_coxeter_word(sys, c)
    group = enumerate_group(sys, element_cap=element_cap)
    copies = max(u.length for u in group)
    word = cyclic_prefix(sys, c, copies)
    elements = []
    masks = []
    for u in group:
        alpha = sort_element(word, u)
        if _supports_descend(blocks(alpha, sys.n)):
            elements.append(u)
            masks.append(alpha.mask)
    return word, elements, masks


def sortable_lattice(sys: CoxeterSystem, c: Sequence[int], element_cap: int = 5000) -> GradedLattice:
    """The c^infinity-sorting order restricted to c-sortable elements.

    Covers of the restriction are covers of the full order, so the sortable
    index sets form an antimatroid; the lattice is built on it directly
    (which raises if that fails).
    """
    word, elements, masks = sortable_family(sys, c, element_cap)
    lat = build_lattice_from_family(SetSystem(len(word), masks))
    lat.group_elements = [elements[masks.index(A)] for A in lat.elements]
    lat.sorting_word = word
    return lat


@dataclass(frozen=True)
class SortableReport:
    count: int
    join_distributive: bool
    covers_in_full_order: bool
    # exploratory: reported, not part of any acceptance check
    equals_bruhat: bool
    supersolvable: bool


def sortable_report(sys: CoxeterSystem, c: Sequence[int], element_cap: int = 5000) -> SortableReport:
    """Checks on the sortable lattice, plus exploratory comparisons with Bruhat order."""
    lat = sortable_lattice(sys, c, element_cap)
    # sortable sets are sorted sets, so a one-index step is a cover of the full order
    in_full = all(bin(lat.elements[b] & ~lat.elements[a]).count("1") == 1 for a, b in lat.covers)
    els = lat.group_elements
    bruhat = all(
        lat.leq(i, j) == bruhat_leq(sys, els[i], els[j]) for i in range(len(lat)) for j in range(len(lat))
    )
    return SortableReport(len(lat), bool(is_join_distributive(lat)), in_full, bruhat, is_supersolvable(lat))


@dataclass
class SortableCensus:
    type_name: str
    words: list[tuple[int, ...]]
    counts: list[int]
    class_ids: list[int]
    lattices: list[GradedLattice]

    @property
    def classes(self) -> list[list[tuple[int, ...]]]:
        out: dict[int, list] = {}
        for w, k in zip(self.words, self.class_ids):
            out.setdefault(k, []).append(w)
        return [out[k] for k in sorted(out)]


def sortable_census(sys: CoxeterSystem, type_name: str | None = None, element_cap: int = 5000) -> SortableCensus:
    """Group the n! Coxeter words by isomorphism type of their sortable lattice."""
    if sys.n > 4:
        raise ValueError("census is limited to rank <= 4")
    words = list(permutations(sys.generators))
    lattices = [sortable_lattice(sys, c, element_cap) for c in words]
    reps: list[int] = []
    class_ids = []
    for i, lat in enumerate(lattices):
        for k, r in enumerate(reps):
            if poset_isomorphic(lat, lattices[r]):
                class_ids.append(k)
                break
        else:
            reps.append(i)
            class_ids.append(len(reps) - 1)
    return SortableCensus(
        type_name or sys.name or "",
        words,
        [len(lat) for lat in lattices],
        class_ids,
        lattices,
    )


def census_to_json(census: SortableCensus) -> str:
    doc = {
        "type": census.type_name,
        "words": [
            {"word": list(w), "sortable_count": k, "class_id": cid}
            for w, k, cid in zip(census.words, census.counts, census.class_ids)
        ],
        "classes": [[list(w) for w in cls] for cls in census.classes],
        "join_distributive": [bool(is_join_distributive(lat)) for lat in census.lattices],
    }
    return json.dumps(doc, indent=2)
