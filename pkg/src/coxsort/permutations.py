"""Type A as the symmetric group: one-line permutations and their words.

Left multiplication by s_i swaps the values i and i+1, so s_i is a left
descent of a permutation exactly when i+1 appears before i in one-line
notation.
"""

from __future__ import annotations

from typing import Sequence

from .coxeter import CoxeterSystem, GroupElement

__all__ = [
    "parse_permutation",
    "permutation_word",
    "word_permutation",
    "inversions",
    "permutation_element",
]


def parse_permutation(text: str) -> tuple[int, ...]:
    """``"41532"`` or ``"4,1,5,3,2"`` to a tuple; must be a permutation of 1..n."""
    text = text.strip()
    parts = text.replace(",", " ").split() if ("," in text or " " in text) else list(text)
    try:
        perm = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed permutation {text!r}") from None
    if sorted(perm) != list(range(1, len(perm) + 1)):
        raise ValueError(f"{text!r} is not a permutation of 1..{len(perm)}")
    return perm


def _swap_values(perm: list[int], i: int) -> None:
    a = perm.index(i)
    b = perm.index(i + 1)
    perm[a], perm[b] = i + 1, i


def permutation_word(perm: Sequence[int]) -> tuple[int, ...]:
    """A reduced word for ``perm``, peeling the smallest left descent each time."""
    p = list(perm)
    word = []
    while True:
        pos = {v: k for k, v in enumerate(p)}
        i = next((i for i in range(1, len(p)) if pos[i + 1] < pos[i]), None)
        if i is None:
            return tuple(word)
        word.append(i)
        _swap_values(p, i)


def word_permutation(word: Sequence[int], n: int) -> tuple[int, ...]:
    """One-line notation of the product s_{w1} ... s_{wk} in S_n."""
    p = list(range(1, n + 1))
    for s in reversed(word):
        if not 1 <= s < n:
            raise ValueError(f"letter {s} out of range for S_{n}")
        _swap_values(p, s)
    return tuple(p)


def inversions(perm: Sequence[int]) -> int:
    n = len(perm)
    return sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])


def permutation_element(sys: CoxeterSystem, perm: Sequence[int]) -> GroupElement:
    """The group element of a one-line permutation; ``sys`` must be A_{len-1}."""
    n = len(perm)
    if sys.n != n - 1 or any(
        sys.coxeter_matrix[s, t] != (3 if abs(s - t) == 1 else 2)
        for s in sys.generators
        for t in sys.generators
        if s != t
    ):
        raise ValueError(f"permutations of length {n} need the type A{n - 1} system")
    return sys.element(permutation_word(perm))
