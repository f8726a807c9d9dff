"""Coxeter systems and their elements in the geometric representation.

Generators are labelled ``1..n`` in every public function; words are
sequences of those labels.  An element ``w`` is stored through two matrices
over the number field ``Q(2cos(pi/N))``:

* ``matrix[i][j]``   is coordinate ``i`` of ``w(alpha_j)``;
* ``inv_matrix[i][j]`` is coordinate ``i`` of ``w^{-1}(alpha_j)``.

``s`` is a left descent of ``w`` exactly when ``w^{-1}(alpha_s)`` is a
negative root, i.e. column ``s`` of ``inv_matrix`` is nonpositive.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

from .field import ExactScalar, NumberField

__all__ = [
    "INFINITY",
    "CoxeterMatrix",
    "CoxeterSystem",
    "GroupElement",
    "create_system",
    "preset",
    "preset_matrix",
    "parse_matrix_text",
    "evaluate_word",
    "is_left_descent",
    "is_right_descent",
    "is_reduced",
    "exchange_delete",
    "bruhat_leq",
    "weak_leq",
    "longest_element",
    "reduced_words",
    "parse_word",
    "format_word",
]

# Coxeter matrix entry for m(s,t) = infinity
INFINITY = 0


class CoxeterMatrix:
    """Symmetric Coxeter matrix; ``INFINITY`` (0) encodes m = infinity."""

    def __init__(self, rows: Sequence[Sequence[int]]):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise ValueError("Coxeter matrix must be square")
        for s in range(n):
            if entries[s][s] != 1:
                raise ValueError(f"diagonal entry m[{s + 1}][{s + 1}] must be 1")
            for t in range(n):
                if entries[s][t] != entries[t][s]:
                    raise ValueError(
                        f"Coxeter matrix is asymmetric: m[{s + 1}][{t + 1}]="
                        f"{entries[s][t]} but m[{t + 1}][{s + 1}]={entries[t][s]}"
                    )
                if s != t and entries[s][t] != INFINITY and entries[s][t] < 2:
                    raise ValueError(f"off-diagonal entry m[{s + 1}][{t + 1}] must be >= 2 or infinity")
        self.entries = entries
        self.n = n

    def __getitem__(self, st):
        s, t = st
        return self.entries[s - 1][t - 1]

    def __eq__(self, other):
        return isinstance(other, CoxeterMatrix) and other.entries == self.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"CoxeterMatrix({[list(r) for r in self.entries]})"

    def to_text(self) -> str:
        lines = [str(self.n)]
        lines += [" ".join(str(x) for x in row) for row in self.entries]
        return "\n".join(lines) + "\n"


class GroupElement:
    """An element of W, identified by its action on the simple roots."""

    __slots__ = ("system", "_matrix", "_inv", "length", "_hash")

    def __init__(self, system: "CoxeterSystem", matrix, inv, length: int):
        self.system = system
        self._matrix = matrix
        self._inv = inv
        self.length = length
        self._hash = hash(matrix)

    def __eq__(self, other):
        return (
            isinstance(other, GroupElement)
            and other.system is self.system
            and other._matrix == self._matrix
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        word = "".join(str(s) for s in self.system.reduced_word(self)) if self.system.n <= 9 else (
            " ".join(str(s) for s in self.system.reduced_word(self))
        )
        return f"<GroupElement {word or 'e'} (length {self.length})>"

    @property
    def matrix(self) -> tuple[tuple[ExactScalar, ...], ...]:
        F = self.system.field
        return tuple(tuple(ExactScalar(F, x) for x in row) for row in self._matrix)

    @property
    def inv_matrix(self) -> tuple[tuple[ExactScalar, ...], ...]:
        F = self.system.field
        return tuple(tuple(ExactScalar(F, x) for x in row) for row in self._inv)

    def is_identity(self) -> bool:
        return self == self.system.identity

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return self.system.multiply(self, other)

    def inverse(self) -> "GroupElement":
        return GroupElement(self.system, self._inv, self._matrix, self.length)


class CoxeterSystem:
    """A Coxeter system (W, S) with its exact geometric representation."""

    def __init__(self, matrix: CoxeterMatrix, name: str | None = None):
        self.coxeter_matrix = matrix
        self.n = matrix.n
        self.name = name
        finite = {m for row in matrix.entries for m in row if m >= 3}
        # m = 2 gives cos = 0 and m = infinity gives B = -1; neither enlarges the field
        self.N = reduce(math.lcm, finite, 1) if finite else 2
        self.field = NumberField(self.N)
        F = self.field
        n = self.n
        # reflection data: s(alpha_t) = alpha_t + c[s][t] alpha_s
        coeff = []
        for s in range(n):
            row = []
            for t in range(n):
                m = matrix.entries[s][t]
                if s == t:
                    row.append(-2)
                elif m == INFINITY:
                    row.append(2)
                elif m == 2:
                    row.append(0)
                elif m == 3:
                    row.append(1)
                else:
                    row.append(F.two_cos(m))
            coeff.append(tuple(row))
        self._coeff = tuple(coeff)
        ident = tuple(
            tuple(F.one if i == j else F.zero for j in range(n)) for i in range(n)
        )
        self.identity = GroupElement(self, ident, ident, 0)
        self._generators = tuple(self._left_mul_raw(s, self.identity, 1) for s in range(n))

    def __repr__(self):
        label = self.name or f"rank {self.n}"
        return f"CoxeterSystem({label}, field=Q(2cos(pi/{self.N})))"

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    def bilinear_form(self, s: int, t: int) -> ExactScalar:
        """B(alpha_s, alpha_t) = -cos(pi/m), and -1 for m = infinity."""
        self._check_letter(s)
        self._check_letter(t)
        F = self.field
        c = self._coeff[s - 1][t - 1]
        raw = F.from_int(c) if isinstance(c, int) else c
        # c = -2B, so B = -c/2
        return ExactScalar(F, tuple(Fraction(-x, 2) for x in raw))

    # raw updates -----------------------------------------------------------

    def _mul_coeff(self, c, x):
        if isinstance(c, int):
            if c == 1:
                return x
            return tuple(c * v for v in x)
        return self.field.mul(c, x)

    def _left_mul_raw(self, s: int, w: GroupElement, delta: int) -> GroupElement:
        """s*w for a 0-based generator s, given the length change delta."""
        F = self.field
        cs = self._coeff[s]
        n = self.n
        M = w._matrix
        # row s of M_s M_w: sum_t c[s][t] row_t, plus row_s itself
        new_row = list(M[s])
        for t in range(n):
            c = cs[t]
            if isinstance(c, int) and c == 0:
                continue
            row_t = M[t]
            for j in range(n):
                x = row_t[j]
                if any(x):
                    new_row[j] = F.add(new_row[j], self._mul_coeff(c, x))
        matrix = M[:s] + (tuple(new_row),) + M[s + 1:]
        # inverse: M_{w^-1} M_s adds c[s][t] * column s to column t
        inv_rows = []
        for row in w._inv:
            x = row[s]
            if not any(x):
                inv_rows.append(row)
                continue
            new = list(row)
            for t in range(n):
                c = cs[t]
                if isinstance(c, int) and c == 0:
                    continue
                new[t] = F.add(new[t], self._mul_coeff(c, x))
            inv_rows.append(tuple(new))
        return GroupElement(self, matrix, tuple(inv_rows), w.length + delta)

    def _column_sign(self, M, s: int) -> int:
        sign = self.field.sign
        for row in M:
            x = row[s]
            if any(x):
                return sign(x)
        raise AssertionError("zero column in a root vector")

    # element operations -----------------------------------------------------

    def _check_letter(self, s: int):
        if not isinstance(s, int) or not 1 <= s <= self.n:
            raise ValueError(f"generator {s!r} out of range 1..{self.n}")

    def is_left_descent(self, w: GroupElement, s: int) -> bool:
        self._check_letter(s)
        return self._column_sign(w._inv, s - 1) < 0

    def is_right_descent(self, w: GroupElement, s: int) -> bool:
        self._check_letter(s)
        return self._column_sign(w._matrix, s - 1) < 0

    def left_descents(self, w: GroupElement) -> tuple[int, ...]:
        return tuple(s for s in self.generators if self._column_sign(w._inv, s - 1) < 0)

    def right_descents(self, w: GroupElement) -> tuple[int, ...]:
        return tuple(s for s in self.generators if self._column_sign(w._matrix, s - 1) < 0)

    def left_multiply(self, s: int, w: GroupElement) -> GroupElement:
        """The element s*w."""
        self._check_letter(s)
        delta = -1 if self._column_sign(w._inv, s - 1) < 0 else 1
        return self._left_mul_raw(s - 1, w, delta)

    def right_multiply(self, w: GroupElement, s: int) -> GroupElement:
        """The element w*s."""
        return self.left_multiply(s, w.inverse()).inverse()

    def generator(self, s: int) -> GroupElement:
        self._check_letter(s)
        return self._generators[s - 1]

    def element(self, word: Iterable[int]) -> GroupElement:
        """The product of the letters of ``word``, left to right."""
        w = self.identity
        for s in word:
            w = self.right_multiply(w, s)
        return w

    def from_matrices(self, matrix, inv) -> GroupElement:
        """Wrap raw matrices, computing the length by stripping left descents."""
        w = GroupElement(self, matrix, inv, 0)
        steps = 0
        x = w
        while True:
            for s in range(self.n):
                if self._column_sign(x._inv, s) < 0:
                    x = self._left_mul_raw(s, x, -1)
                    steps += 1
                    break
            else:
                break
        w.length = steps
        return w

    def multiply(self, u: GroupElement, w: GroupElement) -> GroupElement:
        F = self.field
        n = self.n

        def matmul(A, B):
            out = []
            for i in range(n):
                row = []
                for j in range(n):
                    acc = F.zero
                    for k in range(n):
                        a = A[i][k]
                        b = B[k][j]
                        if any(a) and any(b):
                            acc = F.add(acc, F.mul(a, b))
                    row.append(acc)
                out.append(tuple(row))
            return tuple(out)

        return self.from_matrices(matmul(u._matrix, w._matrix), matmul(w._inv, u._inv))

    def reduced_word(self, w: GroupElement) -> tuple[int, ...]:
        """A reduced word for w (greedy by smallest left descent)."""
        word = []
        x = w
        while x.length > 0:
            for s in range(self.n):
                if self._column_sign(x._inv, s) < 0:
                    word.append(s + 1)
                    x = self._left_mul_raw(s, x, -1)
                    break
        return tuple(word)


def create_system(matrix: CoxeterMatrix | Sequence[Sequence[int]], name: str | None = None) -> CoxeterSystem:
    """Build a Coxeter system; raises ValueError on an invalid matrix."""
    if not isinstance(matrix, CoxeterMatrix):
        matrix = CoxeterMatrix(matrix)
    return CoxeterSystem(matrix, name=name)


def _path_matrix(n: int, bonds: dict[tuple[int, int], int]) -> list[list[int]]:
    rows = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    for (a, b), m in bonds.items():
        rows[a - 1][b - 1] = rows[b - 1][a - 1] = m
    return rows


def preset_matrix(name: str) -> list[list[int]]:
    """Coxeter matrix rows for a named type such as ``A3``, ``B3``, ``H3``, ``I2:5``.

    Conventions: ``B_n`` has the 4-bond between generators 1 and 2; ``D_n``
    branches at generator 3 with generators 1 and 2 as the two short legs.
    ``I2:inf`` (or ``I2:0``) is the infinite dihedral group.
    """
    key = name.strip().upper()
    m = re.fullmatch(r"I2:(\d+|INF)", key)
    if m:
        val = m.group(1)
        order = INFINITY if val in ("INF", "0") else int(val)
        if order != INFINITY and order < 2:
            raise ValueError("dihedral order must be >= 2")
        return [[1, order], [order, 1]]
    m = re.fullmatch(r"([ABDEFH])(\d+)", key)
    if not m:
        raise ValueError(f"unknown Coxeter type {name!r}")
    family, n = m.group(1), int(m.group(2))
    if family == "A" and n >= 1:
        return _path_matrix(n, {(i, i + 1): 3 for i in range(1, n)})
    if family == "B" and n >= 2:
        bonds = {(i, i + 1): 3 for i in range(1, n)}
        bonds[(1, 2)] = 4
        return _path_matrix(n, bonds)
    if family == "D" and n >= 4:
        bonds = {(1, 3): 3, (2, 3): 3}
        bonds.update({(i, i + 1): 3 for i in range(3, n)})
        return _path_matrix(n, bonds)
    if family == "F" and n == 4:
        return _path_matrix(4, {(1, 2): 3, (2, 3): 4, (3, 4): 3})
    if family == "H" and n in (3, 4):
        bonds = {(i, i + 1): 3 for i in range(1, n)}
        bonds[(1, 2)] = 5
        return _path_matrix(n, bonds)
    if family == "E" and n in (6, 7, 8):
        # Bourbaki labelling: 1-3-4-5-6(-7-8) with 2 attached to 4
        bonds = {(1, 3): 3, (3, 4): 3, (2, 4): 3}
        bonds.update({(i, i + 1): 3 for i in range(4, n)})
        return _path_matrix(n, bonds)
    raise ValueError(f"unknown Coxeter type {name!r}")


def preset(name: str) -> CoxeterSystem:
    return create_system(preset_matrix(name), name=name.strip().upper().replace("INF", "inf"))


def parse_matrix_text(text: str) -> CoxeterMatrix:
    """Parse the matrix file format: ``n`` then n rows; 0 means infinity."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise ValueError("empty Coxeter matrix file")
    try:
        n = int(lines[0][0])
        rows = [[int(x) for x in ln] for ln in lines[1:]]
    except ValueError as exc:
        raise ValueError(f"malformed Coxeter matrix: {exc}") from None
    if len(lines[0]) != 1 or len(rows) != n:
        raise ValueError(f"expected {n} matrix rows after the size line")
    return CoxeterMatrix(rows)


def parse_word(text: str, n: int | None = None) -> tuple[int, ...]:
    """Parse ``"1 2 3 2"``, ``"1,2,3"`` or the compact digit form ``"1232"``."""
    text = text.strip()
    if not text:
        return ()
    parts = re.split(r"[\s,]+", text)
    if len(parts) == 1 and len(parts[0]) > 1:
        if n is not None and n > 9:
            raise ValueError("compact digit words need at most 9 generators")
        parts = list(parts[0])
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed word {text!r}") from None
    if n is not None:
        for s in word:
            if not 1 <= s <= n:
                raise ValueError(f"letter {s} out of range 1..{n}")
    return word


def format_word(word: Sequence[int]) -> str:
    return "(" + ",".join(str(s) for s in word) + ")"


def evaluate_word(sys: CoxeterSystem, word: Iterable[int]) -> GroupElement:
    """The group element <word>."""
    return sys.element(word)


def is_left_descent(sys: CoxeterSystem, w: GroupElement, s: int) -> bool:
    return sys.is_left_descent(w, s)


def is_right_descent(sys: CoxeterSystem, w: GroupElement, s: int) -> bool:
    return sys.is_right_descent(w, s)


def is_reduced(sys: CoxeterSystem, word: Sequence[int]) -> bool:
    """True iff no letter of ``word`` decreases the length when appended."""
    w = sys.identity
    for s in word:
        if sys.is_right_descent(w, s):
            return False
        w = sys.right_multiply(w, s)
    return True


def exchange_delete(sys: CoxeterSystem, word: Sequence[int], s: int) -> int:
    """Smallest 1-based position i with ``s*<word>`` equal to word minus position i."""
    word = tuple(word)
    w = sys.element(word)
    if not sys.is_left_descent(w, s):
        raise ValueError(f"generator {s} is not a left descent of {format_word(word)}")
    target = sys.left_multiply(s, w)
    for i in range(len(word)):
        if sys.element(word[:i] + word[i + 1:]) == target:
            return i + 1
    raise AssertionError("Exchange property failed; the input word is not reduced")


def bruhat_leq(sys: CoxeterSystem, u: GroupElement, w: GroupElement) -> bool:
    """Bruhat comparison by descent recursion (the Lifting property)."""
    while True:
        if u.length == 0:
            return True
        if u.length > w.length:
            return False
        if u.length == w.length:
            return u == w
        s = next(t for t in range(sys.n) if sys._column_sign(w._inv, t) < 0)
        if sys._column_sign(u._inv, s) < 0:
            u = sys._left_mul_raw(s, u, -1)
        w = sys._left_mul_raw(s, w, -1)


def weak_leq(sys: CoxeterSystem, u: GroupElement, w: GroupElement) -> bool:
    """Right weak order: l(u) + l(u^{-1} w) == l(w)."""
    if u.length > w.length:
        return False
    return u.length + sys.multiply(u.inverse(), w).length == w.length


def longest_element(sys: CoxeterSystem, max_length: int = 400) -> GroupElement:
    """The longest element of a finite W; ValueError if none within ``max_length``."""
    w = sys.identity
    while True:
        for s in range(sys.n):
            if sys._column_sign(w._matrix, s) > 0:
                w = sys.left_multiply(s + 1, w.inverse()).inverse()
                break
        else:
            return w
        if w.length > max_length:
            raise ValueError("group appears infinite: no longest element within the length cap")


def reduced_words(sys: CoxeterSystem, w: GroupElement) -> list[tuple[int, ...]]:
    """All reduced words of w, sorted lexicographically."""
    memo: dict[GroupElement, list[tuple[int, ...]]] = {}

    def rec(x: GroupElement):
        if x.length == 0:
            return [()]
        if x in memo:
            return memo[x]
        out = []
        for s in range(sys.n):
            if sys._column_sign(x._inv, s) < 0:
                rest = rec(sys._left_mul_raw(s, x, -1))
                out.extend((s + 1,) + r for r in rest)
        memo[x] = out
        return out

    return sorted(rec(w))
