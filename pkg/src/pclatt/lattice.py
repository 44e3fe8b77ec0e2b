"""Finite bounded lattices given by their Hasse diagram.

Lattices built from covers index their elements ``0..n-1`` along a
topological order of the cover relation, so ``leq(x, y)`` implies ``x <= y``
as integers.  Labels are only used for input and output.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from pclatt.errors import LatticeError, NotALattice, NotAPoset, NotBounded

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking a quantified statement on one lattice.

    ``counterexample`` is a JSON-ready dict with an ``assignment`` of
    variables to labels and the two evaluated sides.
    """

    holds: bool
    counterexample: dict | None = None
    hypothesis_met: bool = True

    def __post_init__(self):
        if not self.holds and self.counterexample is None:
            raise ValueError("a failing verdict needs a counterexample")


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    labels: tuple[str, ...]
    leq_table: tuple[tuple[bool, ...], ...]
    meet_table: Table
    join_table: Table
    bottom: int
    top: int
    _index: dict[str, int] = field(repr=False)

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def elements(self) -> range:
        return range(len(self.labels))

    def leq(self, x: int, y: int) -> bool:
        return self.leq_table[x][y]

    def meet(self, x: int, y: int) -> int:
        return self.meet_table[x][y]

    def join(self, x: int, y: int) -> int:
        return self.join_table[x][y]

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise LatticeError(f"unknown element {label!r}") from None

    def label(self, x: int) -> str:
        return self.labels[x]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)`` in index order."""
        n = self.n
        le = self.leq_table
        out = []
        for x in range(n):
            for y in range(n):
                if x != y and le[x][y] and not any(
                    le[x][z] and le[z][y] for z in range(n) if z != x and z != y
                ):
                    out.append((x, y))
        return out

    def format_set(self, members: Iterable[int]) -> str:
        return "{" + ",".join(self.labels[i] for i in sorted(members)) + "}"

    def parse_set(self, text: str) -> frozenset[int]:
        text = text.strip().strip("{}")
        return frozenset(self.index(t.strip()) for t in text.split(",") if t.strip())

    def __eq__(self, other):
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.labels == other.labels and self.leq_table == other.leq_table

    def __hash__(self):
        return hash((self.labels, self.leq_table))

    @classmethod
    def from_leq(cls, labels: Sequence[str], leq: Sequence[Sequence[bool]]) -> "FiniteLattice":
        """Validate a full order relation and tabulate meet and join."""
        labels = tuple(labels)
        n = len(labels)
        if n == 0:
            raise LatticeError("a lattice needs at least one element")
        if len(set(labels)) != n:
            raise LatticeError("element labels must be distinct")
        if any(not lab for lab in labels):
            raise LatticeError("element labels must be non-empty")
        le = tuple(tuple(bool(leq[i][j]) for j in range(n)) for i in range(n))
        for i in range(n):
            if not le[i][i]:
                raise LatticeError(f"order is not reflexive at {labels[i]}")
            for j in range(n):
                if i != j and le[i][j] and le[j][i]:
                    raise NotAPoset([labels[i], labels[j]])
                if le[i][j]:
                    for k in range(n):
                        if le[j][k] and not le[i][k]:
                            raise LatticeError(
                                f"order is not transitive: {labels[i]}<={labels[j]}<={labels[k]}"
                            )

        minima = [i for i in range(n) if all(le[i][j] for j in range(n))]
        maxima = [i for i in range(n) if all(le[j][i] for j in range(n))]
        if len(minima) != 1:
            cands = [labels[i] for i in range(n) if not any(le[j][i] for j in range(n) if j != i)]
            raise NotBounded("minimum", cands)
        if len(maxima) != 1:
            cands = [labels[i] for i in range(n) if not any(le[i][j] for j in range(n) if j != i)]
            raise NotBounded("maximum", cands)

        down = [sum(1 << j for j in range(n) if le[j][i]) for i in range(n)]
        up = [sum(1 << j for j in range(n) if le[i][j]) for i in range(n)]
        by_down = {m: i for i, m in enumerate(down)}
        by_up = {m: i for i, m in enumerate(up)}
        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                # the glb is the element whose down-set is the common down-set
                g = by_down.get(down[x] & down[y])
                if g is None:
                    raise NotALattice(labels[x], labels[y], "greatest lower bound")
                lub = by_up.get(up[x] & up[y])
                if lub is None:
                    raise NotALattice(labels[x], labels[y], "least upper bound")
                meet[x][y] = meet[y][x] = g
                join[x][y] = join[y][x] = lub
        return cls(
            labels=labels,
            leq_table=le,
            meet_table=tuple(map(tuple, meet)),
            join_table=tuple(map(tuple, join)),
            bottom=minima[0],
            top=maxima[0],
            _index={lab: i for i, lab in enumerate(labels)},
        )


def _topological_order(labels: Sequence[str], succ: list[set[int]]) -> list[int]:
    # Kahn's algorithm; ties broken by declaration order so the result is stable
    n = len(labels)
    indeg = [0] * n
    for s in succ:
        for v in s:
            indeg[v] += 1
    heap = [i for i in range(n) if indeg[i] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        u = heapq.heappop(heap)
        order.append(u)
        for v in sorted(succ[u]):
            indeg[v] -= 1
            if indeg[v] == 0:
                heapq.heappush(heap, v)
    if len(order) < n:
        stuck = [labels[i] for i in range(n) if indeg[i] > 0]
        raise NotAPoset(stuck)
    return order


def build_lattice(labels: Sequence[str], covers: Iterable[tuple[str, str]]) -> FiniteLattice:
    """Build a lattice from element labels and ``(lower, upper)`` cover pairs.

    The order is the reflexive-transitive closure of the covers.  Raises
    NotAPoset, NotBounded or NotALattice when the input does not describe
    a bounded lattice.
    """
    labels = list(labels)
    if len(set(labels)) != len(labels):
        raise LatticeError("element labels must be distinct")
    pos = {lab: i for i, lab in enumerate(labels)}
    succ: list[set[int]] = [set() for _ in labels]
    for lo, hi in covers:
        for lab in (lo, hi):
            if lab not in pos:
                raise LatticeError(f"cover references undeclared element {lab!r}")
        if lo == hi:
            raise NotAPoset([lo])
        succ[pos[lo]].add(pos[hi])

    order = _topological_order(labels, succ)
    rank = {old: new for new, old in enumerate(order)}
    n = len(labels)
    # closure in reverse topological order: everything above x is above its successors
    above = [0] * n
    for old in reversed(order):
        mask = 1 << rank[old]
        for v in succ[old]:
            mask |= above[rank[v]]
        above[rank[old]] = mask
    leq = [[bool(above[i] >> j & 1) for j in range(n)] for i in range(n)]
    return FiniteLattice.from_leq([labels[old] for old in order], leq)


def chain(n: int) -> FiniteLattice:
    """The n-element chain labelled ``0, c1, ..., 1`` (``0`` alone when n == 1)."""
    if n == 1:
        return build_lattice(["0"], [])
    labels = ["0"] + [f"c{i}" for i in range(1, n - 1)] + ["1"]
    return build_lattice(labels, zip(labels, labels[1:]))
