"""Exhaustive generation of small bounded lattices.

A bounded lattice on n elements is a poset on n-2 inner elements with a new
bottom and top added, such that every pair has a meet and a join.  Inner
posets are grown one element at a time, each new element receiving a
down-set of the elements already placed as its strict predecessors; this
produces every naturally labelled poset exactly once.  Isomorphic copies are
removed with a canonical code minimized over all linear extensions.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from pclatt.classify import check_tag, classify, has_tag
from pclatt.errors import SizeLimit
from pclatt.lattice import FiniteLattice

MAX_GEN_N = 8


def _downsets(below: list[int]) -> Iterator[int]:
    k = len(below)
    for mask in range(1 << k):
        if all(below[i] & ~mask == 0 for i in range(k) if mask >> i & 1):
            yield mask


def _inner_posets(m: int) -> Iterator[list[int]]:
    """Strict-predecessor bitmasks of every naturally labelled poset on m elements."""
    below: list[int] = []

    def rec():
        if len(below) == m:
            yield list(below)
            return
        for S in list(_downsets(below)):
            below.append(S)
            yield from rec()
            below.pop()

    yield from rec()


def _linear_extensions(below: list[int]) -> Iterator[list[int]]:
    m = len(below)
    order: list[int] = []

    def rec(placed):
        if len(order) == m:
            yield list(order)
            return
        for e in range(m):
            if not placed >> e & 1 and below[e] & ~placed == 0:
                order.append(e)
                yield from rec(placed | 1 << e)
                order.pop()

    yield from rec(0)


def _code(below: list[int], order: list[int]) -> tuple[int, ...]:
    return tuple(
        1 if below[order[j]] >> order[i] & 1 else 0
        for j in range(len(order)) for i in range(j)
    )


def _canonical_code(below: list[int]) -> tuple[int, ...]:
    return min(_code(below, ext) for ext in _linear_extensions(below))


def _below_from_code(m: int, code: tuple[int, ...]) -> list[int]:
    below = [0] * m
    k = 0
    for j in range(m):
        for i in range(j):
            if code[k]:
                below[j] |= 1 << i
            k += 1
    return below


def _inner_below(L: FiniteLattice) -> list[int]:
    inner = [x for x in L.elements if x not in (L.bottom, L.top)]
    pos = {x: i for i, x in enumerate(inner)}
    return [
        sum(1 << pos[y] for y in inner if y != x and L.leq(y, x)) for x in inner
    ]


def canonical_form(L: FiniteLattice) -> tuple[int, tuple[int, ...]]:
    """Isomorphism invariant: equal for two lattices iff they are isomorphic."""
    if L.n == 1:
        return (1, ())
    return (L.n, _canonical_code(_inner_below(L)))


def is_isomorphic(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    return L1.n == L2.n and canonical_form(L1) == canonical_form(L2)


def _is_lattice(below: list[int]) -> bool:
    # inner posets only: a pair without an inner lub has the new top as lub,
    # which is fine unless several minimal inner upper bounds exist
    m = len(below)
    above = [sum(1 << j for j in range(m) if below[j] >> i & 1) for i in range(m)]
    down = [below[i] | 1 << i for i in range(m)]
    up = [above[i] | 1 << i for i in range(m)]
    down_set = set(down)
    up_set = set(up)
    for x in range(m):
        for y in range(x + 1, m):
            common_up = up[x] & up[y]
            if common_up and common_up not in up_set:
                return False
            common_down = down[x] & down[y]
            if common_down and common_down not in down_set:
                return False
    return True


def _labels(n: int) -> list[str]:
    return ["0"] + list(string.ascii_lowercase[: n - 2]) + ["1"]


def _lattice_from_inner(below: list[int]) -> FiniteLattice:
    m = len(below)
    n = m + 2
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[0][i] = leq[i][n - 1] = leq[i][i] = True
    for j in range(m):
        for i in range(m):
            if below[j] >> i & 1:
                leq[i + 1][j + 1] = True
    return FiniteLattice.from_leq(_labels(n), leq)


def _generate(n: int, dedup: bool) -> Iterator[FiniteLattice]:
    if n == 1:
        yield FiniteLattice.from_leq(["0"], [[True]])
        return
    seen = set()
    for below in _inner_posets(n - 2):
        if not _is_lattice(below):
            continue
        if dedup:
            code = _canonical_code(below)
            if code in seen:
                continue
            seen.add(code)
            below = _below_from_code(n - 2, code)
        yield _lattice_from_inner(below)


@dataclass(frozen=True)
class LatticeFamily:
    """A re-iterable stream of lattices of one size."""

    n: int
    dedup: bool
    source: Callable[[], Iterable[FiniteLattice]]

    def __iter__(self) -> Iterator[FiniteLattice]:
        return iter(self.source())


def generate_all(n: int, dedup: bool = True) -> LatticeFamily:
    """All bounded lattices on n elements, 1 <= n <= 8.

    Without dedup every naturally labelled lattice is emitted (element
    indices form a linear extension of the order); with dedup exactly one
    member per isomorphism class, in canonical labelling.
    """
    if not 1 <= n <= MAX_GEN_N:
        raise SizeLimit(f"lattice generation supports 1 <= n <= {MAX_GEN_N}, got {n}")
    return LatticeFamily(n, dedup, lambda: _generate(n, dedup))


def filter_family(family: LatticeFamily, predicate: str | Callable[[FiniteLattice], bool]) -> LatticeFamily:
    """Members satisfying a classification predicate.

    ``predicate`` is a comma-separated list of tags (``stone``,
    ``not-distributive``, ...) that must all hold, or a callable.
    """
    if callable(predicate):
        test = predicate
    else:
        tags = [t.strip() for t in predicate.split(",") if t.strip()]
        for t in tags:
            check_tag(t)

        def test(L):
            c = classify(L)
            return all(has_tag(c, t) for t in tags)

    return LatticeFamily(family.n, family.dedup, lambda: (L for L in family if test(L)))
