"""Structural classes of finite lattices: distributivity, Stone identity and friends."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

from pclatt.errors import NotPseudocomplemented
from pclatt.lattice import FiniteLattice, Verdict
from pclatt.pseudo import UnaryTable, pseudocomplement_table


class Hypothesis(str, enum.Enum):
    """Hypothesis classes a law can require.

    ``OPEN`` marks exploratory statements that nothing guarantees; a failure
    there is never fatal.
    """

    ANY = "any"
    PSEUDOCOMPLEMENTED = "pseudocomplemented"
    DISTRIBUTIVE = "distributive"
    STONE_IDENTITY = "stone-identity"
    STONE = "stone"
    OPEN = "open"


def is_distributive(L: FiniteLattice) -> Verdict:
    for x, y, z in product(L.elements, repeat=3):
        lhs = L.meet(x, L.join(y, z))
        rhs = L.join(L.meet(x, y), L.meet(x, z))
        if lhs != rhs:
            lab = L.label
            return Verdict(False, {
                "assignment": {"x": lab(x), "y": lab(y), "z": lab(z)},
                "lhs": "x∧(y∨z)", "lhs_value": lab(lhs),
                "relation": "=",
                "rhs": "(x∧y)∨(x∧z)", "rhs_value": lab(rhs),
            })
    return Verdict(True)


def is_pseudocomplemented(L: FiniteLattice) -> Verdict:
    try:
        pseudocomplement_table(L)
    except NotPseudocomplemented as exc:
        return Verdict(False, {
            "assignment": {"a": exc.element},
            "lhs": "maximal x with a∧x=0", "lhs_value": ",".join(exc.maximal),
            "relation": "unique",
            "rhs": "a*", "rhs_value": "undefined",
        })
    return Verdict(True)


def satisfies_stone_identity(L: FiniteLattice, star: UnaryTable) -> Verdict:
    for x in L.elements:
        value = L.join(star(x), star(star(x)))
        if value != L.top:
            return Verdict(False, {
                "assignment": {"x": L.label(x)},
                "lhs": "x*∨x**", "lhs_value": L.label(value),
                "relation": "=",
                "rhs": "1", "rhs_value": L.label(L.top),
            })
    return Verdict(True)


def is_stone(L: FiniteLattice, star: UnaryTable) -> Verdict:
    dist = is_distributive(L)
    if not dist.holds:
        return dist
    return satisfies_stone_identity(L, star)


def is_brouwerian(L: FiniteLattice) -> Verdict:
    pc = is_pseudocomplemented(L)
    if not pc.holds:
        return pc
    return is_distributive(L)


@dataclass(frozen=True)
class Classification:
    pseudocomplemented: bool
    distributive: bool
    stone_identity: bool

    @property
    def stone(self) -> bool:
        return self.distributive and self.stone_identity

    @property
    def brouwerian(self) -> bool:
        return self.pseudocomplemented and self.distributive

    def meets(self, hyp: Hypothesis) -> bool:
        return {
            Hypothesis.ANY: True,
            Hypothesis.PSEUDOCOMPLEMENTED: self.pseudocomplemented,
            # finite distributive lattices are pseudocomplemented
            Hypothesis.DISTRIBUTIVE: self.distributive and self.pseudocomplemented,
            Hypothesis.STONE_IDENTITY: self.pseudocomplemented and self.stone_identity,
            Hypothesis.STONE: self.pseudocomplemented and self.stone,
            Hypothesis.OPEN: False,
        }[Hypothesis(hyp)]

    def tags(self) -> list[str]:
        out = []
        if self.pseudocomplemented:
            out.append("pseudocomplemented")
        if self.distributive:
            out.append("distributive")
        if self.stone_identity:
            out.append("stone-identity")
        if self.stone and self.pseudocomplemented:
            out.append("stone")
        if self.brouwerian:
            out.append("brouwerian")
        return out


def classify(L: FiniteLattice, star: UnaryTable | None = None) -> Classification:
    if star is None:
        try:
            star = pseudocomplement_table(L)
        except NotPseudocomplemented:
            star = None
    dist = is_distributive(L).holds
    if star is None:
        return Classification(False, dist, False)
    return Classification(True, dist, satisfies_stone_identity(L, star).holds)


PREDICATES = ("pseudocomplemented", "distributive", "stone-identity", "stone", "brouwerian")


def check_tag(tag: str) -> tuple[str, bool]:
    """Split a tag into its predicate name and a negation flag."""
    negate = False
    if tag.startswith("not-"):
        negate, tag = True, tag[4:]
    elif tag.startswith("!"):
        negate, tag = True, tag[1:]
    if tag != "any" and tag not in PREDICATES:
        raise ValueError(f"unknown classification tag {tag!r}")
    return tag, negate


def has_tag(c: Classification, tag: str) -> bool:
    """Evaluate a classification tag; a leading ``not-`` or ``!`` negates it."""
    name, negate = check_tag(tag)
    value = True if name == "any" else name in c.tags()
    return value != negate
