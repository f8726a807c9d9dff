"""Set systems on an ordered ground set: antimatroids and convex geometries.

The ground set is ``E = {1, ..., n}`` ordered naturally, and a subset is an
int bitmask with bit ``i - 1`` standing for element ``i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Sequence

__all__ = [
    "SetSystem",
    "AntimatroidReport",
    "ClosureOperator",
    "mask_of",
    "members",
    "is_accessible",
    "is_antimatroid",
    "is_supersolvable_antimatroid",
    "supersolvable_orders",
    "complement_system",
    "is_intersection_closed",
    "satisfies_antiexchange",
    "line_convex_geometry",
    "parse_set_system",
    "format_set_system",
]

MAX_GROUND = 63


def mask_of(elements: Iterable[int]) -> int:
    out = 0
    for e in elements:
        out |= 1 << (e - 1)
    return out


def members(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def _popcount(x: int) -> int:
    return bin(x).count("1")


class SetSystem:
    """A ground set ``1..n`` with a duplicate-free family of subsets."""

    __slots__ = ("n", "family", "_set")

    def __init__(self, n: int, family: Iterable[int | Iterable[int]]):
        if not 0 <= n <= MAX_GROUND:
            raise ValueError(f"ground set size must be in 0..{MAX_GROUND}")
        masks = set()
        full = (1 << n) - 1
        for A in family:
            mask = A if isinstance(A, int) else mask_of(A)
            if mask & ~full:
                raise ValueError(f"set {members(mask)} is not contained in 1..{n}")
            masks.add(mask)
        self.n = n
        self.family = tuple(sorted(masks, key=lambda x: (_popcount(x), members(x))))
        self._set = frozenset(masks)

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def __contains__(self, A) -> bool:
        mask = A if isinstance(A, int) else mask_of(A)
        return mask in self._set

    def __len__(self):
        return len(self.family)

    def __iter__(self):
        return iter(self.family)

    def __eq__(self, other):
        return isinstance(other, SetSystem) and other.n == self.n and other._set == self._set

    def __hash__(self):
        return hash((self.n, self._set))

    def sets(self) -> list[tuple[int, ...]]:
        return [members(A) for A in self.family]

    def relabel(self, order: Sequence[int]) -> "SetSystem":
        """Rename elements so that ``order[k]`` becomes ``k + 1``."""
        pos = {e: k + 1 for k, e in enumerate(order)}
        return SetSystem(self.n, [mask_of(pos[e] for e in members(A)) for A in self.family])

    def __repr__(self):
        body = ", ".join("{" + ",".join(map(str, members(A))) + "}" for A in self.family)
        return f"SetSystem(n={self.n}, [{body}])"


@dataclass(frozen=True)
class AntimatroidReport:
    augmentation: bool
    union_closed: bool
    local: bool

    def __bool__(self):
        return self.augmentation and self.union_closed and self.local

    @property
    def consistent(self) -> bool:
        return self.augmentation == self.union_closed == self.local


def is_accessible(sys: SetSystem) -> bool:
    """Empty set feasible and every nonempty feasible set has a feasible child."""
    F = sys._set
    if 0 not in F:
        return False
    for A in sys.family:
        if A and not any(A & ~(1 << i) in F for i in range(sys.n) if A >> i & 1):
            return False
    return True


def is_antimatroid(sys: SetSystem) -> AntimatroidReport:
    """Evaluate the three equivalent antimatroid conditions independently.

    Raises ValueError if the system is not accessible.
    """
    if not is_accessible(sys):
        raise ValueError("set system is not accessible")
    F = sys._set
    fam = sys.family
    n = sys.n

    augmentation = True
    for A in fam:
        for B in fam:
            if B & ~A and not any((A | (1 << i)) in F for i in range(n) if (B & ~A) >> i & 1):
                augmentation = False
                break
        if not augmentation:
            break

    union_closed = all((A | B) in F for A in fam for B in fam)

    local = True
    for A in fam:
        ext = [i for i in range(n) if not A >> i & 1 and (A | 1 << i) in F]
        for a in range(len(ext)):
            for b in range(a + 1, len(ext)):
                if (A | 1 << ext[a] | 1 << ext[b]) not in F:
                    local = False
                    break
            if not local:
                break
        if not local:
            break

    return AntimatroidReport(augmentation, union_closed, local)


def is_supersolvable_antimatroid(sys: SetSystem, order: Sequence[int] | None = None, search: bool = False) -> bool:
    """Check the min-extension condition: A ∪ {min(B \\ A)} is feasible.

    ``order`` lists the ground set from smallest to largest (default the
    natural order).  With ``search=True`` the answer is whether *some* total
    order works (exhaustive, n <= 8).
    """
    if search:
        return next(supersolvable_orders(sys), None) is not None
    F = sys._set
    if 0 not in F:
        return False
    if order is None:
        rank = list(range(sys.n))
    else:
        if sorted(order) != list(range(1, sys.n + 1)):
            raise ValueError("order must be a permutation of the ground set")
        rank = [0] * sys.n
        for k, e in enumerate(order):
            rank[e - 1] = k
    fam = sys.family
    for A in fam:
        for B in fam:
            diff = B & ~A
            if not diff:
                continue
            x = min((i for i in range(sys.n) if diff >> i & 1), key=rank.__getitem__)
            if (A | 1 << x) not in F:
                return False
    return True


def supersolvable_orders(sys: SetSystem):
    """Yield every total order (as a tuple) making ``sys`` supersolvable; n <= 8."""
    if sys.n > 8:
        raise ValueError("order search is limited to ground sets of size <= 8")
    for order in permutations(range(1, sys.n + 1)):
        if is_supersolvable_antimatroid(sys, order):
            yield order


def complement_system(sys: SetSystem) -> SetSystem:
    full = sys.ground
    return SetSystem(sys.n, [full & ~A for A in sys.family])


def is_intersection_closed(sys: SetSystem) -> bool:
    F = sys._set
    return all((A & B) in F for A in sys.family for B in sys.family)


class ClosureOperator:
    """X -> intersection of all closed supersets, for an intersection-closed family containing E."""

    def __init__(self, closed: SetSystem):
        if closed.ground not in closed or not is_intersection_closed(closed):
            raise ValueError("closed sets must contain E and be closed under intersection")
        self.system = closed
        self.n = closed.n

    def __call__(self, X: int | Iterable[int]) -> int:
        mask = X if isinstance(X, int) else mask_of(X)
        out = self.system.ground
        for C in self.system.family:
            if C & mask == mask:
                out &= C
        return out


def satisfies_antiexchange(closure: ClosureOperator) -> bool:
    """x, y ∉ τ(A), x ≠ y, x ∈ τ(A ∪ {y})  implies  y ∉ τ(A ∪ {x}).

    It suffices to test closed A, since τ(A ∪ {x}) = τ(τ(A) ∪ {x}).
    Requires ∅ to be closed.
    """
    if 0 not in closure.system:
        raise ValueError("the empty set must be closed")
    n = closure.n
    for A in closure.system.family:
        outside = [i for i in range(n) if not A >> i & 1]
        hull = {x: closure(A | 1 << x) for x in outside}
        for x in outside:
            for y in outside:
                if x != y and hull[y] >> x & 1 and hull[x] >> y & 1:
                    return False
    return True


def line_convex_geometry(n: int) -> SetSystem:
    """Open sets of n collinear points: complements of contiguous blocks."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    full = (1 << n) - 1
    family = {full}  # complement of the empty block
    for i in range(n):
        for j in range(i, n):
            block = ((1 << (j + 1)) - 1) & ~((1 << i) - 1)
            family.add(full & ~block)
    return SetSystem(n, family)


def parse_set_system(text: str) -> SetSystem:
    """Parse: first line ``n``, then one feasible set per line, ``-`` for ∅."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise ValueError("empty set-system file")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the ground set size, got {lines[0]!r}") from None
    family = []
    for ln in lines[1:]:
        if ln == "-":
            family.append(0)
            continue
        try:
            family.append(mask_of(int(x) for x in ln.replace(",", " ").split()))
        except ValueError:
            raise ValueError(f"malformed set line {ln!r}") from None
    return SetSystem(n, family)


def format_set_system(sys: SetSystem) -> str:
    lines = [str(sys.n)]
    for A in sys.family:
        lines.append(" ".join(map(str, members(A))) if A else "-")
    return "\n".join(lines) + "\n"
