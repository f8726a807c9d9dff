"""Finite posets and lattices given by cover relations.

Elements are the integers ``0..k-1`` (payloads are kept alongside).  Order
relations are stored as reflexive up-sets and down-sets encoded as int
bitmasks, so ``x <= y`` is a bit test and meets/joins are dictionary lookups
of intersected up/down-sets.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from graphlib import CycleError, TopologicalSorter
from itertools import combinations, permutations
from typing import Any, Callable, Hashable, Iterable, Sequence

import networkx as nx
import numpy as np

from .convexity import SetSystem, is_antimatroid, members

__all__ = [
    "MAX_TABLE",
    "FinitePoset",
    "GradedLattice",
    "JoinDistributivityReport",
    "build_lattice_from_family",
    "is_lattice",
    "is_join_distributive",
    "is_sn_el_labelling",
    "is_supersolvable",
    "find_m_chain",
    "sublattice_generated",
    "is_distributive",
    "is_maximal_lattice",
    "poset_isomorphic",
    "chain_lattice",
    "boolean_lattice",
    "diamond_lattice",
    "pentagon_lattice",
    "lattice_to_dot",
    "lattice_to_json",
]

MAX_TABLE = 4096


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def _popcount(x: int) -> int:
    return bin(x).count("1")


class FinitePoset:
    """A finite poset from its Hasse diagram.

    ``covers`` are pairs ``(i, j)`` meaning ``i`` is covered by ``j``.  The
    cover digraph must be acyclic and transitively reduced.
    """

    def __init__(self, elements: Sequence[Any], covers: Iterable[tuple[int, int]]):
        self.elements = list(elements)
        k = len(self.elements)
        self.covers = sorted(set((int(a), int(b)) for a, b in covers))
        self.upper_covers: list[list[int]] = [[] for _ in range(k)]
        self.lower_covers: list[list[int]] = [[] for _ in range(k)]
        for a, b in self.covers:
            if not (0 <= a < k and 0 <= b < k) or a == b:
                raise ValueError(f"bad cover ({a}, {b})")
            self.upper_covers[a].append(b)
            self.lower_covers[b].append(a)
        ts = TopologicalSorter({i: self.lower_covers[i] for i in range(k)})
        try:
            order = list(ts.static_order())
        except CycleError:
            raise ValueError("cover relation has a cycle") from None
        self._topo = order
        up = [0] * k
        for i in reversed(order):
            m = 1 << i
            for j in self.upper_covers[i]:
                m |= up[j]
            up[i] = m
        self.up = up
        self.down = _transpose(up)
        for a, b in self.covers:
            for c in self.upper_covers[a]:
                if c != b and up[c] >> b & 1:
                    raise ValueError(f"cover ({a}, {b}) is implied by transitivity")

    @classmethod
    def from_relation(cls, elements: Sequence[Any], leq: Callable[[Any, Any], bool]):
        """Build from a (reflexive, transitive) comparison on payloads."""
        k = len(elements)
        strict = [0] * k
        for i, a in enumerate(elements):
            for j, b in enumerate(elements):
                if i != j and leq(a, b):
                    strict[i] |= 1 << j
        return cls(elements, _covers_from_strict(strict))

    @classmethod
    def from_upsets(cls, elements: Sequence[Any], up: Sequence[int]):
        strict = [u & ~(1 << i) for i, u in enumerate(up)]
        return cls(elements, _covers_from_strict(strict))

    def __len__(self):
        return len(self.elements)

    def leq(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.leq(i, j) or self.leq(j, i)

    def index(self, payload: Hashable) -> int:
        if not hasattr(self, "_index"):
            self._index = {p: i for i, p in enumerate(self.elements)}
        return self._index[payload]

    def minimal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.lower_covers[i]]

    def maximal(self) -> list[int]:
        return [i for i in range(len(self)) if not self.upper_covers[i]]

    def relation_count(self) -> int:
        """Number of pairs x < y."""
        return sum(_popcount(u) - 1 for u in self.up)

    def cover_graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self)))
        g.add_edges_from(self.covers)
        return g


def _transpose(up: Sequence[int]) -> list[int]:
    down = [0] * len(up)
    for i, u in enumerate(up):
        for j in _bits(u):
            down[j] |= 1 << i
    return down


def _covers_from_strict(strict: Sequence[int]) -> list[tuple[int, int]]:
    covers = []
    for i, s in enumerate(strict):
        implied = 0
        for j in _bits(s):
            implied |= strict[j]
        for j in _bits(s & ~implied):
            covers.append((i, j))
    return covers


def _lattice_tables(up: Sequence[int], down: Sequence[int] | None = None):
    """(join, meet) as nested lists, or None if some pair lacks a join or meet."""
    k = len(up)
    if k == 0:
        return None
    if down is None:
        down = _transpose(up)
    up_index = {u: i for i, u in enumerate(up)}
    down_index = {d: i for i, d in enumerate(down)}
    join = [[0] * k for _ in range(k)]
    meet = [[0] * k for _ in range(k)]
    for i in range(k):
        ui, di = up[i], down[i]
        join[i][i] = meet[i][i] = i
        for j in range(i + 1, k):
            z = up_index.get(ui & up[j])
            w = down_index.get(di & down[j])
            if z is None or w is None:
                return None
            join[i][j] = join[j][i] = z
            meet[i][j] = meet[j][i] = w
    return join, meet


def is_lattice(poset: FinitePoset) -> bool:
    """Every pair has a least upper bound and a greatest lower bound."""
    if len(poset) > MAX_TABLE:
        raise ValueError(f"poset exceeds {MAX_TABLE} elements")
    return _lattice_tables(poset.up, poset.down) is not None


class GradedLattice(FinitePoset):
    """A graded lattice with dense meet/join tables.

    ``labels`` optionally maps each cover ``(i, j)`` to an edge label, and
    ``ground`` lists the label set in its default order.
    """

    def __init__(
        self,
        elements: Sequence[Any],
        covers: Iterable[tuple[int, int]],
        labels: dict[tuple[int, int], Any] | None = None,
        ground: Sequence[Any] | None = None,
    ):
        super().__init__(elements, covers)
        k = len(self)
        if k > MAX_TABLE:
            raise ValueError(f"lattice exceeds {MAX_TABLE} elements")
        tables = _lattice_tables(self.up, self.down)
        if tables is None:
            raise ValueError("poset is not a lattice")
        self.join_table = np.array(tables[0], dtype=np.int32)
        self.meet_table = np.array(tables[1], dtype=np.int32)
        (self.bottom,) = self.minimal()
        (self.top,) = self.maximal()
        rank = [-1] * k
        rank[self.bottom] = 0
        for i in self._topo:
            for j in self.upper_covers[i]:
                if rank[j] == -1:
                    rank[j] = rank[i] + 1
                elif rank[j] != rank[i] + 1:
                    raise ValueError("lattice is not graded")
        self.rank = rank
        if labels is not None:
            missing = set(self.covers) - set(labels)
            if missing:
                raise ValueError(f"labelling misses covers {sorted(missing)[:3]}")
            labels = {c: labels[c] for c in self.covers}
            if ground is None:
                ground = sorted(set(labels.values()))
        self.labels = labels
        self.ground = tuple(ground) if ground is not None else None

    @property
    def height(self) -> int:
        return self.rank[self.top]

    def join(self, i: int, j: int) -> int:
        return int(self.join_table[i, j])

    def meet(self, i: int, j: int) -> int:
        return int(self.meet_table[i, j])

    def join_all(self, items: Iterable[int]) -> int:
        out = self.bottom
        for i in items:
            out = int(self.join_table[out, i])
        return out

    def meet_all(self, items: Iterable[int]) -> int:
        out = self.top
        for i in items:
            out = int(self.meet_table[out, i])
        return out

    def interval_elements(self, x: int, y: int) -> list[int]:
        return sorted(_bits(self.up[x] & self.down[y]), key=lambda i: (self.rank[i], i))

    def interval(self, x: int, y: int) -> "GradedLattice":
        """The interval [x, y] as a lattice (payloads and labels carried over)."""
        if not self.leq(x, y):
            raise ValueError("x is not below y")
        idx = self.interval_elements(x, y)
        pos = {e: n for n, e in enumerate(idx)}
        covers = [(pos[a], pos[b]) for a, b in self.covers if a in pos and b in pos]
        labels = None
        ground = None
        if self.labels is not None:
            labels = {(pos[a], pos[b]): self.labels[a, b] for a, b in self.covers if a in pos and b in pos}
            used = set(labels.values())
            ground = [g for g in self.ground if g in used]
        return GradedLattice([self.elements[e] for e in idx], covers, labels, ground)

    def maximal_chains(self, x: int | None = None, y: int | None = None, limit: int = 100_000):
        """Maximal chains of [x, y] as tuples of element ids, lexicographic by id."""
        x = self.bottom if x is None else x
        y = self.top if y is None else y
        out = []

        def rec(path):
            if len(out) >= limit:
                raise ValueError(f"more than {limit} maximal chains")
            last = path[-1]
            if last == y:
                out.append(tuple(path))
                return
            for c in sorted(self.upper_covers[last]):
                if self.down[y] >> c & 1:
                    path.append(c)
                    rec(path)
                    path.pop()

        rec([x])
        return out

    def atoms(self, x: int | None = None) -> list[int]:
        x = self.bottom if x is None else x
        return sorted(self.upper_covers[x])


@dataclass(frozen=True)
class JoinDistributivityReport:
    boolean_atomic: bool
    unique_meet_decomp: bool
    usm_and_msd: bool

    def __bool__(self):
        return self.boolean_atomic and self.unique_meet_decomp and self.usm_and_msd

    @property
    def consistent(self) -> bool:
        return self.boolean_atomic == self.unique_meet_decomp == self.usm_and_msd


def build_lattice_from_family(sys: SetSystem) -> GradedLattice:
    """Feasible sets of an antimatroid under inclusion, labelled by the added element."""
    if not is_antimatroid(sys):
        raise ValueError("set system is not an antimatroid")
    fam = list(sys.family)
    pos = {A: i for i, A in enumerate(fam)}
    covers = []
    labels = {}
    for A in fam:
        for e in range(sys.n):
            B = A | 1 << e
            if B != A and B in pos:
                covers.append((pos[A], pos[B]))
                labels[pos[A], pos[B]] = e + 1
    return GradedLattice(fam, covers, labels, ground=tuple(range(1, sys.n + 1)))


def _atomic_intervals_boolean(lat: GradedLattice, max_atoms: int = 16) -> bool:
    checked = set()
    for x in range(len(lat)):
        atoms = sorted(lat.upper_covers[x])
        if len(atoms) > max_atoms:
            raise ValueError(f"element with {len(atoms)} upper covers; atomic-interval test capped at {max_atoms}")
        for r in range(1, len(atoms) + 1):
            for Y in combinations(atoms, r):
                z = lat.join_all(Y)
                if (x, z) in checked:
                    continue
                checked.add((x, z))
                if not _is_boolean_interval(lat, x, z):
                    return False
    return True


def _is_boolean_interval(lat: GradedLattice, x: int, z: int) -> bool:
    atoms = [a for a in lat.upper_covers[x] if lat.down[z] >> a & 1]
    size = _popcount(lat.up[x] & lat.down[z])
    if size != 1 << len(atoms):
        return False
    seen = set()
    for r in range(len(atoms) + 1):
        for T in combinations(atoms, r):
            v = x
            for a in T:
                v = lat.join(v, a)
            if v in seen:
                return False
            seen.add(v)
            below = {a for a in atoms if lat.leq(a, v)}
            if below != set(T):
                return False
    return True


def _unique_meet_decompositions(lat: GradedLattice) -> bool:
    # x has a unique irredundant decomposition iff the elements of M(x) that
    # cannot be dropped already meet to x
    irreducible = [i for i in range(len(lat)) if len(lat.upper_covers[i]) == 1]
    for x in range(len(lat)):
        above = [m for m in irreducible if lat.leq(x, m)]
        essential = []
        for m in above:
            if lat.meet_all(a for a in above if a != m) != x:
                essential.append(m)
        if lat.meet_all(essential) != x:
            return False
    return True


def _usm_and_msd(lat: GradedLattice) -> bool:
    J, M = lat.join_table, lat.meet_table
    for z in range(len(lat)):
        ups = lat.upper_covers[z]
        for a, b in combinations(ups, 2):
            j = int(J[a, b])
            if a not in lat.lower_covers[j] or b not in lat.lower_covers[j]:
                return False
    for x in range(len(lat)):
        row = M[x]
        same = row[:, None] == row[None, :]
        kept = row[J] == row[:, None]
        if np.any(same & ~kept):
            return False
    return True


def is_join_distributive(lat: GradedLattice) -> JoinDistributivityReport:
    """The three equivalent join-distributivity conditions, each evaluated on its own."""
    if not isinstance(lat, GradedLattice):
        raise ValueError("input must be a lattice")
    return JoinDistributivityReport(
        boolean_atomic=_atomic_intervals_boolean(lat),
        unique_meet_decomp=_unique_meet_decompositions(lat),
        usm_and_msd=_usm_and_msd(lat),
    )


def is_sn_el_labelling(
    lat: GradedLattice,
    labels: dict[tuple[int, int], Any] | None = None,
    order: Sequence[Any] | None = None,
) -> bool:
    """In every interval the chain labels permute a fixed set, with one increasing chain.

    ``order`` lists the labels from least to greatest; it defaults to the
    lattice's ``ground`` order (or sorted labels).
    """
    labels = lat.labels if labels is None else labels
    if labels is None:
        raise ValueError("no edge labelling given")
    if order is None:
        order = lat.ground if lat.ground is not None else sorted(set(labels.values()))
    rank = {lab: r for r, lab in enumerate(order)}
    code = {}
    for c in lat.covers:
        if labels[c] not in rank:
            raise ValueError(f"label {labels[c]!r} missing from the label order")
        code[c] = rank[labels[c]]
    topo = sorted(range(len(lat)), key=lambda i: lat.rank[i])
    for x in range(len(lat)):
        upx = lat.up[x]
        labelset = {x: 0}
        top_label = {x: -1}
        increasing = {x: 1}
        for y in topo:
            if y == x or not upx >> y & 1:
                continue
            common = None
            count = 0
            for p in lat.lower_covers[y]:
                if p not in labelset:
                    continue
                lab = code[p, y]
                if labelset[p] >> lab & 1:
                    return False
                s = labelset[p] | 1 << lab
                if common is None:
                    common = s
                elif s != common:
                    return False
                if lab > top_label[p]:
                    count += increasing[p]
            if count != 1:
                return False
            labelset[y] = common
            top_label[y] = common.bit_length() - 1
            increasing[y] = 1
    return True


def is_supersolvable(lat: GradedLattice, order_search: bool = True, max_elements: int = 100) -> bool:
    """Supersolvability test.

    Labelled feasible-set lattices: some order on the ground set makes the
    natural labelling S_n EL (all orders tried when there are at most 8
    labels and ``order_search`` is on, else the given order).  Unlabelled
    lattices: search for an M-chain (at most ``max_elements`` elements).
    """
    if lat.labels is not None:
        ground = list(lat.ground)
        if is_sn_el_labelling(lat, order=ground):
            return True
        if not order_search or len(ground) > 8:
            return False
        return any(is_sn_el_labelling(lat, order=p) for p in permutations(ground))
    return find_m_chain(lat, max_elements=max_elements) is not None


def find_m_chain(lat: GradedLattice, max_elements: int = 100, chain_limit: int = 20_000):
    """A maximal chain generating a distributive sublattice with every maximal chain, or None."""
    if len(lat) > max_elements:
        raise ValueError(f"M-chain search is capped at {max_elements} elements")
    chains = lat.maximal_chains(limit=chain_limit)
    memo: dict[frozenset, bool] = {}
    for m in chains:
        ok = True
        for c in chains:
            key = frozenset(m) | frozenset(c)
            if key not in memo:
                memo[key] = is_distributive(lat, sublattice_generated(lat, key))
            if not memo[key]:
                ok = False
                break
        if ok:
            return m
    return None


def sublattice_generated(lat: GradedLattice, X: Iterable[int]) -> frozenset[int]:
    """Closure of X under binary meets and joins."""
    current = set(X)
    frontier = list(current)
    while frontier:
        new = []
        for a in frontier:
            for b in list(current):
                for v in (lat.join(a, b), lat.meet(a, b)):
                    if v not in current:
                        current.add(v)
                        new.append(v)
        frontier = new
    return frozenset(current)


def is_distributive(lat: GradedLattice, subset: Iterable[int] | None = None) -> bool:
    """x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples (of ``subset`` if given)."""
    J, M = lat.join_table, lat.meet_table
    idx = np.arange(len(lat)) if subset is None else np.array(sorted(subset), dtype=np.int64)
    Jsub = J[np.ix_(idx, idx)]
    for x in idx:
        mx = M[x]
        lhs = mx[Jsub]
        mxs = mx[idx]
        rhs = J[mxs[:, None], mxs[None, :]]
        if np.any(lhs != rhs):
            return False
    return True


def _extended_upsets(up: Sequence[int], extra: Iterable[tuple[int, int]]) -> list[int]:
    up = list(up)
    extra = list(extra)
    changed = True
    while changed:
        changed = False
        for x, y in extra:
            uy = up[y]
            for z in range(len(up)):
                if up[z] >> x & 1 and (up[z] | uy) != up[z]:
                    up[z] |= uy
                    changed = True
    return up


def is_maximal_lattice(
    lat: GradedLattice,
    candidates: Sequence[tuple[int, int]],
    samples: int = 200,
    exhaustive_limit: int = 12,
    rng: random.Random | None = None,
) -> bool:
    """Adding any tested nonempty subset of candidate covers breaks the lattice property.

    Each candidate ``(x, y)`` must have ``rank[y] == rank[x] + 1`` with x, y
    incomparable.  All subsets are tried when there are at most
    ``exhaustive_limit`` candidates; otherwise all singletons plus ``samples``
    random subsets.  This is a testing regime, not a proof.
    """
    cands = [tuple(c) for c in candidates]
    for x, y in cands:
        if lat.rank[y] != lat.rank[x] + 1:
            raise ValueError(f"candidate ({x}, {y}) does not raise the rank by one")
        if lat.comparable(x, y):
            raise ValueError(f"candidate ({x}, {y}) is already comparable")
    if not cands:
        return True
    if len(cands) <= exhaustive_limit:
        subsets = (
            [cands[i] for i in range(len(cands)) if bits >> i & 1]
            for bits in range(1, 1 << len(cands))
        )
    else:
        rng = rng or random.Random(0)

        def sampled():
            for c in cands:
                yield [c]
            for _ in range(samples):
                size = rng.randint(1, len(cands))
                yield rng.sample(cands, size)

        subsets = sampled()
    for subset in subsets:
        if _lattice_tables(_extended_upsets(lat.up, subset)) is not None:
            return False
    return True


def poset_isomorphic(P: FinitePoset, Q: FinitePoset, max_elements: int = 200) -> bool:
    """Order-isomorphism test via isomorphism of the Hasse diagrams."""
    if max(len(P), len(Q)) > max_elements:
        raise ValueError(f"isomorphism test capped at {max_elements} elements")
    if len(P) != len(Q) or len(P.covers) != len(Q.covers):
        return False
    if P.relation_count() != Q.relation_count():
        return False
    gp, gq = P.cover_graph(), Q.cover_graph()
    for g, poset in ((gp, P), (gq, Q)):
        for i in range(len(poset)):
            g.nodes[i]["sig"] = (
                len(poset.lower_covers[i]),
                len(poset.upper_covers[i]),
                _popcount(poset.down[i]),
                _popcount(poset.up[i]),
            )
    return nx.is_isomorphic(gp, gq, node_match=lambda a, b: a["sig"] == b["sig"])


# small reference lattices


def chain_lattice(length: int) -> GradedLattice:
    return GradedLattice(list(range(length + 1)), [(i, i + 1) for i in range(length)])


def boolean_lattice(n: int) -> GradedLattice:
    elems = sorted(range(1 << n), key=lambda m: (_popcount(m), m))
    pos = {m: i for i, m in enumerate(elems)}
    covers = []
    labels = {}
    for m in elems:
        for e in range(n):
            if not m >> e & 1:
                covers.append((pos[m], pos[m | 1 << e]))
                labels[pos[m], pos[m | 1 << e]] = e + 1
    return GradedLattice(elems, covers, labels, ground=tuple(range(1, n + 1)))


def diamond_lattice() -> GradedLattice:
    """M3: bottom, three atoms, top."""
    return GradedLattice(["0", "a", "b", "c", "1"], [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def pentagon_lattice() -> GradedLattice:
    """N5 is not graded, so it is returned as a plain poset."""
    return FinitePoset(["0", "a", "b", "c", "1"], [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)])


# export


def _payload_str(p) -> str:
    if isinstance(p, int) and not isinstance(p, bool):
        return "{" + ",".join(map(str, members(p))) + "}"
    return str(p)


def lattice_to_dot(lat: GradedLattice, names: Sequence[str] | None = None, labels: bool = True) -> str:
    """Rank-layered Hasse diagram in DOT."""
    names = names or [_payload_str(p) for p in lat.elements]
    out = ["digraph hasse {", "  rankdir=BT;", "  node [shape=plaintext];"]
    for i, name in enumerate(names):
        out.append(f'  n{i} [label="{name}"];')
    for r in range(lat.height + 1):
        same = " ".join(f"n{i};" for i in range(len(lat)) if lat.rank[i] == r)
        out.append(f"  {{ rank=same; {same} }}")
    for a, b in lat.covers:
        attr = f' [label="{lat.labels[a, b]}"]' if labels and lat.labels is not None else ""
        out.append(f"  n{a} -> n{b}{attr};")
    out.append("}")
    return "\n".join(out) + "\n"


def lattice_to_json(lat: GradedLattice, names: Sequence[str] | None = None) -> str:
    names = names or [_payload_str(p) for p in lat.elements]
    doc = {
        "elements": list(names),
        "covers": [list(c) for c in lat.covers],
        "ranks": list(lat.rank),
        "labels": None if lat.labels is None else [
            {"cover": list(c), "label": lat.labels[c]} for c in lat.covers
        ],
    }
    return json.dumps(doc, indent=2)
