"""Congruences of (L, ∨, ∧, *) and the relation Θ(A) of a second-kind deductive system."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from pclatt.classify import is_stone
from pclatt.deduction import is_deductive_system
from pclatt.errors import HypothesisViolated, NotADeductiveSystem, SizeLimit
from pclatt.implication import PCAlgebra
from pclatt.lattice import FiniteLattice

MAX_CONGRUENCE_N = 8


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "Partition":
        bl = sorted(tuple(sorted(b)) for b in blocks if b)
        return cls(tuple(bl))

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)

    def to_relation(self, n: int) -> "BinRel":
        return BinRel(n, frozenset((x, y) for b in self.blocks for x in b for y in b))

    def format(self, L: FiniteLattice) -> str:
        return " ".join(L.format_set(b) for b in self.blocks)


@dataclass(frozen=True)
class BinRel:
    n: int
    pairs: frozenset[tuple[int, int]]

    def __contains__(self, pair) -> bool:
        return pair in self.pairs

    def is_reflexive(self) -> bool:
        return all((x, x) in self.pairs for x in range(self.n))

    def is_symmetric(self) -> bool:
        return all((y, x) in self.pairs for x, y in self.pairs)

    def transitivity_failure(self) -> tuple[int, int, int] | None:
        for x, y in sorted(self.pairs):
            for z in range(self.n):
                if (y, z) in self.pairs and (x, z) not in self.pairs:
                    return x, y, z
        return None

    def is_transitive(self) -> bool:
        return self.transitivity_failure() is None

    def row(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.n) if (x, y) in self.pairs)

    def classes(self) -> Partition:
        """Blocks of an equivalence relation."""
        if not (self.is_reflexive() and self.is_symmetric() and self.is_transitive()):
            raise ValueError("relation is not an equivalence")
        return Partition.of({self.row(x) for x in range(self.n)})

    def format_pairs(self, L: FiniteLattice) -> str:
        return " ".join(f"({L.label(x)},{L.label(y)})" for x, y in sorted(self.pairs))


def compatibility_failure(p: PCAlgebra, rel: BinRel) -> dict | None:
    """First (a,b) ∈ rel and c witnessing that rel is not compatible with ∨, ∧ or *."""
    lab = p.L.label
    for a, b in sorted(rel.pairs):
        if (p.star(a), p.star(b)) not in rel:
            return {"op": "*", "a": lab(a), "b": lab(b),
                    "image": (lab(p.star(a)), lab(p.star(b)))}
        for c in p.elements:
            for op, f in (("∨", p.join), ("∧", p.meet)):
                if (f(a, c), f(b, c)) not in rel:
                    return {"op": op, "a": lab(a), "b": lab(b), "c": lab(c),
                            "image": (lab(f(a, c)), lab(f(b, c)))}
    return None


def theta_of(p: PCAlgebra, A: Iterable[int]) -> BinRel:
    """Θ(A): (x, y) related iff x⇒y ∈ A and y⇒x ∈ A."""
    A = frozenset(A)
    v = is_deductive_system(p, A, "second")
    if not v.holds:
        raise NotADeductiveSystem(
            f"{p.L.format_set(A)} is not a deductive system of the second kind"
        )
    return BinRel(p.n, frozenset(
        (x, y) for x in p.elements for y in p.elements
        if p.darrow(x, y) in A and p.darrow(y, x) in A
    ))


def class_of_top(L: FiniteLattice, P: Partition | BinRel) -> frozenset[int]:
    if isinstance(P, Partition):
        return frozenset(P.block_of(L.top))
    return P.row(L.top)


def is_meet_closed(p: PCAlgebra, A: Iterable[int]) -> bool:
    A = frozenset(A)
    return all(p.meet(x, y) in A for x in A for y in A)


@dataclass(frozen=True)
class ThetaReport:
    relation: BinRel
    reflexive: bool
    symmetric: bool
    compatibility_failure: dict | None
    top_class: frozenset[int]
    expected_top_class: frozenset[int]
    meet_closed: bool
    transitive: bool

    @property
    def compatible(self) -> bool:
        return self.compatibility_failure is None

    @property
    def ok(self) -> bool:
        """Everything the theorem promises for this A holds."""
        return (
            self.reflexive
            and self.symmetric
            and self.compatible
            and self.top_class == self.expected_top_class
            and (self.transitive or not self.meet_closed)
        )


def check_theta_theorem(p: PCAlgebra, A: Iterable[int]) -> ThetaReport:
    """Evaluate every claim about Θ(A) on a Stone lattice.

    Θ(A) must be reflexive, symmetric, compatible with ∨, ∧ and *, its class
    of 1 must be {x : x** ∈ A}, and it must be transitive when A is closed
    under ∧.  Raises HypothesisViolated when L is not Stone or A is not a
    second-kind deductive system.
    """
    A = frozenset(A)
    if not is_stone(p.L, p.star_table).holds:
        raise HypothesisViolated("Θ(A) theorem needs a Stone lattice")
    if not is_deductive_system(p, A, "second").holds:
        raise HypothesisViolated(f"{p.L.format_set(A)} is not a second-kind deductive system")
    rel = theta_of(p, A)
    return ThetaReport(
        relation=rel,
        reflexive=rel.is_reflexive(),
        symmetric=rel.is_symmetric(),
        compatibility_failure=compatibility_failure(p, rel),
        top_class=class_of_top(p.L, rel),
        expected_top_class=frozenset(x for x in p.elements if p.dstar(x) in A),
        meet_closed=is_meet_closed(p, A),
        transitive=rel.is_transitive(),
    )


def set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length n; each encodes one set partition."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i, m):
        if i == n:
            yield list(rgs)
            return
        for v in range(m + 2):
            rgs[i] = v
            yield from rec(i + 1, max(m, v))

    rgs[0] = 0
    yield from rec(1, 0)


def _compatible_rgs(p: PCAlgebra, rgs: list[int]) -> bool:
    for a in p.elements:
        for b in range(a + 1, p.n):
            if rgs[a] != rgs[b]:
                continue
            if rgs[p.star(a)] != rgs[p.star(b)]:
                return False
            for c in p.elements:
                if rgs[p.join(a, c)] != rgs[p.join(b, c)] or rgs[p.meet(a, c)] != rgs[p.meet(b, c)]:
                    return False
    return True


def enumerate_congruences(p: PCAlgebra) -> list[Partition]:
    """All congruences of (L, ∨, ∧, *): finest first, then by block lists."""
    if p.n > MAX_CONGRUENCE_N:
        raise SizeLimit(f"congruence enumeration is limited to {MAX_CONGRUENCE_N} elements")
    found = []
    for rgs in set_partitions(p.n):
        if _compatible_rgs(p, rgs):
            blocks: dict[int, list[int]] = {}
            for x, b in enumerate(rgs):
                blocks.setdefault(b, []).append(x)
            found.append(Partition.of(blocks.values()))
    return sorted(found, key=lambda P: (-len(P.blocks), P.blocks))
