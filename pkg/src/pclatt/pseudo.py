"""Pseudocomplements, double pseudocomplements and dense elements."""

from __future__ import annotations

from dataclasses import dataclass

from pclatt.errors import NotPseudocomplemented
from pclatt.lattice import FiniteLattice


@dataclass(frozen=True)
class UnaryTable:
    kind: str  # "star" or "doublestar"
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __len__(self) -> int:
        return len(self.map)


def _disjoint_maxima(L: FiniteLattice, a: int) -> list[int]:
    zero = [x for x in L.elements if L.meet(a, x) == L.bottom]
    return [x for x in zero if not any(y != x and L.leq(x, y) for y in zero)]


def pseudocomplement_table(L: FiniteLattice) -> UnaryTable:
    """Tabulate ``a*``, the greatest x with ``a ∧ x = 0``, for every a.

    Raises NotPseudocomplemented naming the first element whose set of
    disjoint elements has more than one maximal member.
    """
    out = []
    for a in L.elements:
        maxima = _disjoint_maxima(L, a)
        if len(maxima) != 1:
            raise NotPseudocomplemented(L.label(a), [L.label(m) for m in maxima])
        out.append(maxima[0])
    return UnaryTable("star", tuple(out))


def try_pseudocomplement_table(L: FiniteLattice) -> UnaryTable | None:
    try:
        return pseudocomplement_table(L)
    except NotPseudocomplemented:
        return None


def doublestar_table(star: UnaryTable) -> UnaryTable:
    return UnaryTable("doublestar", tuple(star(star(x)) for x in range(len(star))))


def dense_elements(L: FiniteLattice, star: UnaryTable) -> frozenset[int]:
    """D(L): the elements whose pseudocomplement is the bottom."""
    return frozenset(a for a in L.elements if star(a) == L.bottom)
