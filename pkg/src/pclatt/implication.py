"""The implications x→y := x*∨y and x⇒y := x*∨y** as operation tables."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from pclatt.classify import is_distributive, is_stone
from pclatt.errors import NotDistributive
from pclatt.lattice import FiniteLattice, Table, Verdict
from pclatt.pseudo import UnaryTable, doublestar_table, pseudocomplement_table


@dataclass(frozen=True)
class ImplTable:
    kind: str  # "arrow" or "darrow"
    map: Table

    def __call__(self, x: int, y: int) -> int:
        return self.map[x][y]


def arrow_table(L: FiniteLattice, star: UnaryTable) -> ImplTable:
    return ImplTable("arrow", tuple(
        tuple(L.join(star(x), y) for y in L.elements) for x in L.elements
    ))


def darrow_table(L: FiniteLattice, star: UnaryTable) -> ImplTable:
    return ImplTable("darrow", tuple(
        tuple(L.join(star(x), star(star(y))) for y in L.elements) for x in L.elements
    ))


class PCAlgebra:
    """A pseudocomplemented lattice with every derived table precomputed."""

    def __init__(self, L: FiniteLattice, star: UnaryTable | None = None):
        self.L = L
        self.star_table = star if star is not None else pseudocomplement_table(L)
        self.dstar_table = doublestar_table(self.star_table)
        self.arrow_table = arrow_table(L, self.star_table)
        self.darrow_table = darrow_table(L, self.star_table)
        self.n = L.n
        self.top = L.top
        self.bottom = L.bottom
        self.meet = L.meet
        self.join = L.join
        self.leq = L.leq
        self.star = self.star_table.__call__
        self.dstar = self.dstar_table.__call__
        self.arrow = self.arrow_table.__call__
        self.darrow = self.darrow_table.__call__

    @property
    def elements(self) -> range:
        return self.L.elements

    def impl(self, kind: str):
        """``arrow`` for the first kind, ``darrow`` for the second."""
        if kind in ("first", "arrow", "→"):
            return self.arrow
        if kind in ("second", "darrow", "⇒"):
            return self.darrow
        raise ValueError(f"unknown implication kind {kind!r}")


STONE_CHARACTERIZATION = {
    "(1)": "x∧(0→0) = x",
    "(2)": "x∧(x→0) = 0",
    "(3)": "x∧((x∧y)→0) = x∧(y→0)",
    "(4)": "(x→0)∨((x→0)→0) = 1",
}


def stone_identities_failure(L: FiniteLattice, table: Sequence[Sequence[int]]) -> dict | None:
    """First violation of the four identities for a binary operation table, or None."""
    imp = lambda x, y: table[x][y]  # noqa: E731
    z, one, lab = L.bottom, L.top, L.label

    def fail(ident, assignment, lhs, rhs):
        text_l, text_r = STONE_CHARACTERIZATION[ident].split(" = ")
        return {
            "identity": ident,
            "assignment": {k: lab(v) for k, v in assignment.items()},
            "lhs": text_l, "lhs_value": lab(lhs),
            "relation": "=",
            "rhs": text_r, "rhs_value": lab(rhs),
        }

    for x in L.elements:
        v = L.meet(x, imp(z, z))
        if v != x:
            return fail("(1)", {"x": x}, v, x)
    for x in L.elements:
        v = L.meet(x, imp(x, z))
        if v != z:
            return fail("(2)", {"x": x}, v, z)
    for x in L.elements:
        for y in L.elements:
            lhs = L.meet(x, imp(L.meet(x, y), z))
            rhs = L.meet(x, imp(y, z))
            if lhs != rhs:
                return fail("(3)", {"x": x, "y": y}, lhs, rhs)
    for x in L.elements:
        nx = imp(x, z)
        v = L.join(nx, imp(nx, z))
        if v != one:
            return fail("(4)", {"x": x}, v, one)
    return None


def check_stone_characterization(
    L: FiniteLattice, table: ImplTable | Sequence[Sequence[int]] | None = None
) -> Verdict:
    """Check the four identities that characterize Stone lattices via →.

    ``table`` is a candidate binary operation; by default it is the arrow
    table of L's own pseudocomplement.  On a bounded distributive lattice
    the identities hold exactly when ``x ↦ x→0`` makes L a Stone lattice.
    """
    if not is_distributive(L).holds:
        raise NotDistributive("the characterization needs a bounded distributive lattice")
    if table is None:
        table = arrow_table(L, pseudocomplement_table(L))
    if isinstance(table, ImplTable):
        table = table.map
    failure = stone_identities_failure(L, table)
    if failure is None:
        return Verdict(True)
    return Verdict(False, failure)


def negation_candidates(L: FiniteLattice) -> list[tuple[int, ...]]:
    """All unary maps u for which ``x→y := u(x)∨y`` satisfies the four identities.

    Only ``0→0``, ``x→0`` and ``(x→0)→0`` enter the identities, so the
    search is over the map ``u(x) = x→0``; identity (2) prunes each value to
    elements disjoint from x.
    """
    n, z = L.n, L.bottom
    options = [[v for v in L.elements if L.meet(x, v) == z] for x in L.elements]
    found = []
    u = [0] * n

    def rec(i):
        if i == n:
            table = [[L.join(u[x], y) for y in range(n)] for x in range(n)]
            if stone_identities_failure(L, table) is None:
                found.append(tuple(u))
            return
        for v in options[i]:
            u[i] = v
            rec(i + 1)

    rec(0)
    return found


def stone_characterization_agrees(L: FiniteLattice) -> Verdict:
    """Both directions of the characterization on a distributive lattice.

    Stone lattices satisfy the identities with their own arrow table, and any
    negation satisfying them is the pseudocomplement of a Stone lattice.
    """
    star = pseudocomplement_table(L)
    stone = is_stone(L, star).holds
    own = check_stone_characterization(L)
    lab = L.label
    if own.holds != stone:
        return Verdict(False, {
            "assignment": own.counterexample["assignment"] if own.counterexample else {},
            "lhs": "identities (1)-(4) for x*∨y", "lhs_value": str(own.holds).lower(),
            "relation": "iff",
            "rhs": "Stone lattice", "rhs_value": str(stone).lower(),
        })
    for u in negation_candidates(L):
        if not stone or u != star.map:
            return Verdict(False, {
                "assignment": {"u": ",".join(f"{lab(x)}:{lab(v)}" for x, v in enumerate(u))},
                "lhs": "identities (1)-(4) for u(x)∨y", "lhs_value": "true",
                "relation": "implies",
                "rhs": "u = * on a Stone lattice", "rhs_value": "false",
            })
    return Verdict(True)
