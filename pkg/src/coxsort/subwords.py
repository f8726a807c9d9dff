"""Sorting words, subwords as index sets, and the left-to-right sorting scan.

Positions in a sorting word are 1-based.  A subword is its index set: two
subwords with the same letters but different positions are different.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .convexity import SetSystem
from .coxeter import CoxeterSystem, GroupElement, format_word

__all__ = [
    "DEFAULT_WORD_CAP",
    "NotASubwordError",
    "SortingWord",
    "Subword",
    "lex_leq",
    "sort_element",
    "sort_subword",
    "is_omega_sorted",
    "enumerate_sorted",
    "reduced_support",
    "commutation_swap",
]

DEFAULT_WORD_CAP = 24


class NotASubwordError(ValueError):
    """The element does not occur as a subword of the sorting word."""


@dataclass(frozen=True)
class SortingWord:
    system: CoxeterSystem
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for s in self.letters:
            self.system._check_letter(s)

    def __len__(self):
        return len(self.letters)

    @property
    def ground(self) -> range:
        return range(1, len(self.letters) + 1)

    def subword(self, indices: Iterable[int]) -> "Subword":
        return Subword(self, tuple(indices))

    def full(self) -> "Subword":
        return Subword(self, tuple(self.ground))

    def __repr__(self):
        return f"SortingWord({format_word(self.letters)})"


@dataclass(frozen=True)
class Subword:
    parent: SortingWord
    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(set(self.indices)))
        m = len(self.parent)
        for i in idx:
            if not 1 <= i <= m:
                raise ValueError(f"index {i} outside 1..{m}")
        object.__setattr__(self, "indices", idx)

    @classmethod
    def from_mask(cls, parent: SortingWord, mask: int) -> "Subword":
        return cls(parent, tuple(i + 1 for i in range(len(parent)) if mask >> i & 1))

    @property
    def mask(self) -> int:
        out = 0
        for i in self.indices:
            out |= 1 << (i - 1)
        return out

    @property
    def letters(self) -> tuple[int, ...]:
        return tuple(self.parent.letters[i - 1] for i in self.indices)

    def element(self) -> GroupElement:
        return self.parent.system.element(self.letters)

    def __len__(self):
        return len(self.indices)

    def __or__(self, other: "Subword") -> "Subword":
        self._same_parent(other)
        return Subword(self.parent, self.indices + other.indices)

    def __and__(self, other: "Subword") -> "Subword":
        self._same_parent(other)
        return Subword(self.parent, tuple(set(self.indices) & set(other.indices)))

    def _same_parent(self, other):
        if other.parent != self.parent:
            raise ValueError("subwords of different sorting words")

    def placeholder_string(self) -> str:
        """Letters at their positions with 0 elsewhere, e.g. ``0212``."""
        chosen = set(self.indices)
        return "".join(
            str(s) if i in chosen else "0" for i, s in enumerate(self.parent.letters, start=1)
        )

    def __repr__(self):
        return "{" + ",".join(str(i) for i in self.indices) + "} " + format_word(self.letters)


def lex_leq(A: Iterable[int], B: Iterable[int]) -> bool:
    """A <=_lex B: equal, or the least element of the symmetric difference lies in A."""
    A, B = set(A), set(B)
    diff = A ^ B
    return not diff or min(diff) in A


def _scan(word: SortingWord, u: GroupElement) -> tuple[list[int], GroupElement]:
    sys = word.system
    x = u
    chosen = []
    for i, s in enumerate(word.letters, start=1):
        if sys._column_sign(x._inv, s - 1) < 0:
            chosen.append(i)
            x = sys._left_mul_raw(s - 1, x, -1)
    return chosen, x


def sort_element(word: SortingWord, u: GroupElement) -> Subword:
    """The sorted subword of ``word`` for ``u`` (left-to-right descent scan).

    Raises NotASubwordError when the residual is not the identity, i.e. u
    does not occur as a subword of the sorting word.
    """
    if u.system is not word.system:
        raise ValueError("element and sorting word belong to different systems")
    chosen, residual = _scan(word, u)
    if residual.length != 0:
        raise NotASubwordError(f"{u!r} is not a subword of {format_word(word.letters)}")
    return Subword(word, tuple(chosen))


def sort_subword(word: SortingWord, alpha: Subword) -> Subword:
    return sort_element(word, alpha.element())


def _is_sorted_mask(word: SortingWord, mask: int, top: int | None = None) -> bool:
    # x runs over <alpha ∩ (j+1..m)> from the right.  A descent at a chosen j
    # means alpha is not reduced; at an unchosen j it means a lex-smaller word exists.
    sys = word.system
    letters = word.letters
    x = sys.identity
    j = len(letters) if top is None else top
    sign = sys._column_sign
    while j >= 1:
        s = letters[j - 1] - 1
        if sign(x._inv, s) < 0:
            return False
        if mask >> (j - 1) & 1:
            x = sys._left_mul_raw(s, x, 1)
        j -= 1
    return True


def is_omega_sorted(word: SortingWord, alpha: Subword) -> bool:
    """Whether ``alpha`` is the lex-least reduced subword for its element."""
    if alpha.parent != word:
        raise ValueError("subword of a different sorting word")
    return _is_sorted_mask(word, alpha.mask)


def enumerate_sorted(word: SortingWord, cap: int = DEFAULT_WORD_CAP, full_growth: bool = False) -> SetSystem:
    """All index sets of sorted subwords, as a set system on ``1..m``.

    Growth adds indices above the current maximum only; this is complete
    because every prefix of a feasible set is feasible.  ``full_growth``
    tries every missing index instead (for cross-validation).
    """
    m = len(word)
    if m > cap:
        raise ValueError(f"sorting word length {m} exceeds the enumeration cap {cap}")
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for A in frontier:
            if full_growth:
                candidates = [i for i in range(m) if not A >> i & 1]
            else:
                candidates = range(A.bit_length(), m)
            for i in candidates:
                B = A | (1 << i)
                if B in found:
                    continue
                top = i + 1 if not full_growth else None
                if _is_sorted_mask(word, B, top):
                    found.add(B)
                    nxt.append(B)
        frontier = nxt
    return SetSystem(m, found)


def reduced_support(word: SortingWord, cap: int = DEFAULT_WORD_CAP) -> Subword:
    """Union of all sorted subwords; itself sorted, hence reduced."""
    union = 0
    for A in enumerate_sorted(word, cap).family:
        union |= A
    return Subword.from_mask(word, union)


def commutation_swap(word: SortingWord, i: int) -> SortingWord:
    """Swap the commuting letters at positions i and i+1 (1-based)."""
    letters = word.letters
    if not 1 <= i < len(letters):
        raise ValueError(f"position {i} must satisfy 1 <= i < {len(letters)}")
    a, b = letters[i - 1], letters[i]
    if a == b or word.system.coxeter_matrix[a, b] != 2:
        raise ValueError(f"letters {a} and {b} at positions {i},{i + 1} do not commute")
    swapped = letters[: i - 1] + (b, a) + letters[i + 1:]
    return SortingWord(word.system, swapped)
