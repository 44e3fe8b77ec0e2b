"""Registry of implication laws and exhaustive finite-model checking.

Equational laws are written as formulas over the operation symbols
``∨ ∧ * → ⇒`` and the constants ``0 1``.  A formula is a conjunction of
chains (``s = t ≤ u``, joined by ``&``), optionally followed by ``⟹`` or
``⟺`` and a second conjunction.  Variables are single lowercase letters.
ASCII spellings ``\\/ /\\ -> => <= ==> <=>`` are accepted too.

Laws that quantify over subsets (deductive systems, filters, congruences)
carry a Python search function instead of a formula.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterator

from pclatt.classify import Classification, Hypothesis, classify
from pclatt.errors import PclattError, UnknownLaw
from pclatt.implication import PCAlgebra

H = Hypothesis


class FormulaError(PclattError, ValueError):
    pass


_TOKEN = re.compile(
    r"\s*(<=>|==>|⟺|⟹|\\/|/\\|->|=>|<=|[∨∧→⇒≤=&*()]|[a-z]|[01])"
)
_ASCII = {"<=>": "⟺", "==>": "⟹", "\\/": "∨", "/\\": "∧", "->": "→", "=>": "⇒", "<=": "≤"}


def _tokenize(text: str) -> list[tuple[str, int, int]]:
    out = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaError(f"unexpected character at {pos} in {text!r}")
        tok = _ASCII.get(m.group(1), m.group(1))
        out.append((tok, m.start(1), m.end(1)))
        pos = m.end()
    return out


@dataclass
class Term:
    text: str
    fn: Callable  # (algebra, env) -> element


@dataclass
class Chain:
    terms: list[Term]
    relations: list[str]


@dataclass
class Formula:
    source: str
    variables: tuple[str, ...]
    premise: list[Chain]
    connective: str | None  # None, "⟹" or "⟺"
    conclusion: list[Chain]


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0
        self.vars: list[str] = []

    def peek(self) -> str | None:
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, expected: str | None = None) -> tuple[str, int, int]:
        if self.i >= len(self.toks):
            raise FormulaError(f"unexpected end of {self.text!r}")
        tok = self.toks[self.i]
        if expected is not None and tok[0] != expected:
            raise FormulaError(f"expected {expected!r} at {tok[1]} in {self.text!r}")
        self.i += 1
        return tok

    def formula(self) -> Formula:
        left = self.conjunction()
        conn = None
        right: list[Chain] = []
        if self.peek() in ("⟹", "⟺"):
            conn = self.take()[0]
            right = self.conjunction()
        if self.peek() is not None:
            raise FormulaError(f"trailing input at {self.toks[self.i][1]} in {self.text!r}")
        if conn is None:
            return Formula(self.text, tuple(sorted(self.vars)), [], None, left)
        return Formula(self.text, tuple(sorted(self.vars)), left, conn, right)

    def conjunction(self) -> list[Chain]:
        chains = [self.chain()]
        while self.peek() == "&":
            self.take()
            chains.append(self.chain())
        return chains

    def chain(self) -> Chain:
        terms = [self.term()]
        rels = []
        while self.peek() in ("=", "≤"):
            rels.append(self.take()[0])
            terms.append(self.term())
        if not rels:
            raise FormulaError(f"expected a relation in {self.text!r}")
        return Chain(terms, rels)

    def term(self) -> Term:
        start = self.toks[self.i][1] if self.i < len(self.toks) else len(self.text)
        fn = self.implication()
        end = self.toks[self.i - 1][2]
        return Term(self.text[start:end].strip(), fn)

    def implication(self):
        left = self.disjunction()
        if self.peek() in ("→", "⇒"):
            op = self.take()[0]
            right = self.implication()
            if op == "→":
                return lambda p, e: p.arrow(left(p, e), right(p, e))
            return lambda p, e: p.darrow(left(p, e), right(p, e))
        return left

    def disjunction(self):
        f = self.conj_term()
        while self.peek() == "∨":
            self.take()
            g = self.conj_term()
            f = (lambda f, g: lambda p, e: p.join(f(p, e), g(p, e)))(f, g)
        return f

    def conj_term(self):
        f = self.postfix()
        while self.peek() == "∧":
            self.take()
            g = self.postfix()
            f = (lambda f, g: lambda p, e: p.meet(f(p, e), g(p, e)))(f, g)
        return f

    def postfix(self):
        f = self.atom()
        while self.peek() == "*":
            self.take()
            f = (lambda f: lambda p, e: p.star(f(p, e)))(f)
        return f

    def atom(self):
        tok = self.take()[0]
        if tok == "(":
            f = self.implication()
            self.take(")")
            return f
        if tok == "0":
            return lambda p, e: p.bottom
        if tok == "1":
            return lambda p, e: p.top
        if re.fullmatch(r"[a-z]", tok):
            if tok not in self.vars:
                self.vars.append(tok)
            return lambda p, e: e[tok]
        raise FormulaError(f"unexpected {tok!r} in {self.text!r}")


def parse_formula(text: str) -> Formula:
    return _Parser(text).formula()


def _chain_failure(p: PCAlgebra, chain: Chain, env: dict) -> dict | None:
    values = [t.fn(p, env) for t in chain.terms]
    for k, rel in enumerate(chain.relations):
        a, b = values[k], values[k + 1]
        ok = a == b if rel == "=" else p.leq(a, b)
        if not ok:
            lab = p.L.label
            return {
                "lhs": chain.terms[k].text, "lhs_value": lab(a),
                "relation": rel,
                "rhs": chain.terms[k + 1].text, "rhs_value": lab(b),
            }
    return None


def _conj_failure(p: PCAlgebra, chains: list[Chain], env: dict) -> dict | None:
    for ch in chains:
        f = _chain_failure(p, ch, env)
        if f is not None:
            return f
    return None


def _conj_text(chains: list[Chain]) -> str:
    return " & ".join(
        " ".join(
            [ch.terms[0].text] + [f"{r} {t.text}" for r, t in zip(ch.relations, ch.terms[1:])]
        )
        for ch in chains
    )


def evaluate_formula(p: PCAlgebra, f: Formula, env: dict[str, int]) -> dict | None:
    """Evaluate under one assignment; return the failing sides or None."""
    if f.connective is None:
        return _conj_failure(p, f.conclusion, env)
    left_ok = _conj_failure(p, f.premise, env) is None
    if f.connective == "⟹":
        if not left_ok:
            return None
        return _conj_failure(p, f.conclusion, env)
    right_ok = _conj_failure(p, f.conclusion, env) is None
    if left_ok == right_ok:
        return None
    return {
        "lhs": _conj_text(f.premise), "lhs_value": str(left_ok).lower(),
        "relation": "⟺",
        "rhs": _conj_text(f.conclusion), "rhs_value": str(right_ok).lower(),
    }


@dataclass(frozen=True)
class Law:
    """One registered claim.

    ``hypothesis`` is the weakest class under which the claim is asserted;
    ``evaluable`` is the class a lattice needs for the check to make sense
    at all (a pseudocomplement, usually).
    """

    id: str
    hypothesis: Hypothesis
    statement: str
    anchor: str
    search: Callable[[PCAlgebra], dict | None] | None = field(default=None, compare=False)
    evaluable: Hypothesis = H.PSEUDOCOMPLEMENTED

    @property
    def formula(self) -> Formula | None:
        return None if self.search is not None else _parsed(self.statement)

    def counterexamples(self, p: PCAlgebra) -> Iterator[dict]:
        if self.search is not None:
            ce = self.search(p)
            if ce is not None:
                yield ce
            return
        f = self.formula
        lab = p.L.label
        for values in product(p.elements, repeat=len(f.variables)):
            env = dict(zip(f.variables, values))
            fail = evaluate_formula(p, f, env)
            if fail is not None:
                yield {"assignment": {k: lab(v) for k, v in env.items()}, **fail}

    def first_counterexample(self, p: PCAlgebra) -> dict | None:
        return next(self.counterexamples(p), None)


_FORMULAS: dict[str, Formula] = {}


def _parsed(text: str) -> Formula:
    if text not in _FORMULAS:
        _FORMULAS[text] = parse_formula(text)
    return _FORMULAS[text]


REGISTRY: dict[str, Law] = {}


def register(law: Law) -> Law:
    if law.id in REGISTRY:
        raise ValueError(f"duplicate law id {law.id}")
    if law.search is None:
        parse_formula(law.statement)
    REGISTRY[law.id] = law
    return law


def get_law(law_id: str) -> Law:
    try:
        return REGISTRY[law_id]
    except KeyError:
        raise UnknownLaw(law_id) from None


def check_law(p: PCAlgebra, law: str | Law, classes: Classification | None = None):
    """Evaluate a law exhaustively; the verdict records whether its hypothesis holds."""
    from pclatt.lattice import Verdict

    if isinstance(law, str):
        law = get_law(law)
    if classes is None:
        classes = classify(p.L, p.star_table)
    if not classes.meets(law.evaluable):
        raise PclattError(f"law {law.id} cannot be evaluated on this lattice ({law.evaluable.value} required)")
    ce = law.first_counterexample(p)
    return Verdict(ce is None, ce, classes.meets(law.hypothesis))


# Tables of x→y and x⇒y restricted to {0, a, a*, a**, 1}, rows = left operand.
_REMARK_HEADS = ["0", "a", "a*", "a**", "1"]
_REMARK_ARROW = [
    ["1", "1", "1", "1", "1"],
    ["a*", "a∨a*", "a*", "a*∨a**", "1"],
    ["a**", "a**", "a*∨a**", "a**", "1"],
    ["a*", "a∨a*", "a*", "a*∨a**", "1"],
    ["0", "a", "a*", "a**", "1"],
]
_REMARK_DARROW = [
    ["1", "1", "1", "1", "1"],
    ["a*", "a*∨a**", "a*", "a*∨a**", "1"],
    ["a**", "a**", "a*∨a**", "a**", "1"],
    ["a*", "a*∨a**", "a*", "a*∨a**", "1"],
    ["0", "a**", "a*", "a**", "1"],
]


def _table_formula(op: str, table: list[list[str]]) -> str:
    cells = []
    for r, row in enumerate(table):
        for c, cell in enumerate(row):
            cells.append(f"({_REMARK_HEADS[r]}){op}({_REMARK_HEADS[c]}) = {cell}")
    return " & ".join(cells)


_EQUATIONAL = [
    # any pseudocomplemented lattice
    ("lem3-i", H.PSEUDOCOMPLEMENTED, "0* = 1 & 1* = 0 & a ≤ a** & a*** = a*", "pseudocomplement: constants and closure"),
    ("lem3-ii", H.PSEUDOCOMPLEMENTED, "a ≤ b ⟹ b* ≤ a*", "pseudocomplement: antitone"),
    ("lem3-iii", H.PSEUDOCOMPLEMENTED, "(a∨b)* = a*∧b*", "pseudocomplement: De Morgan for ∨"),
    ("lem3-iv", H.PSEUDOCOMPLEMENTED, "(a∧b)** = a**∧b**", "double pseudocomplement preserves ∧"),
    ("lem3-v", H.PSEUDOCOMPLEMENTED, "a∧(a*∧b)* = a", "pseudocomplement: absorption"),
    ("arrow-idem-star", H.PSEUDOCOMPLEMENTED, "x**→y = x→y = x→(x→y)", "→ basic laws"),
    ("arrow-y-le", H.PSEUDOCOMPLEMENTED, "y ≤ x→y", "→ basic laws"),
    ("arrow-zero", H.PSEUDOCOMPLEMENTED, "x→0 = x*", "→ basic laws"),
    ("lem4-i", H.PSEUDOCOMPLEMENTED, "a ≤ b ⟹ (a→b)* = 0", "→ of comparable elements is dense"),
    ("lem4-ii", H.PSEUDOCOMPLEMENTED, "(a→b)∨c = a→(b∨c) = (a→c)∨b", "→ distributes a join"),
    ("lem4-iii", H.PSEUDOCOMPLEMENTED, "a→(b→c) = (a→c)∨(b→c) = b→(a→c)", "→ exchange"),
    ("lem4-iv", H.PSEUDOCOMPLEMENTED, "(a→(b→a))* = 0", "→ weakening is dense"),
    ("lem4-v", H.PSEUDOCOMPLEMENTED, "a ≤ b ⟹ c→a ≤ c→b & b→c ≤ a→c", "→ monotone/antitone"),
    ("remark-arrow-table", H.PSEUDOCOMPLEMENTED, _table_formula("→", _REMARK_ARROW),
     "→ on {0,a,a*,a**,1}"),
    ("darrow-defs", H.PSEUDOCOMPLEMENTED,
     "x⇒y = x→y** & x⇒y* = x→y* & x⇒y = x**⇒y = x⇒y** = x**⇒y** & x→y ≤ x⇒y"
     " & x⇒y = y*⇒x* = y*→x* & x⇒0 = x*", "⇒ basic laws, contraposition"),
    ("remark-darrow-table", H.PSEUDOCOMPLEMENTED, _table_formula("⇒", _REMARK_DARROW),
     "⇒ on {0,a,a*,a**,1}"),
    ("lem9-i", H.PSEUDOCOMPLEMENTED, "a⇒b ≤ a⇒(a⇒b)", "⇒ contraction"),
    ("lem9-ii", H.PSEUDOCOMPLEMENTED, "a ≤ b ⟹ c⇒a ≤ c⇒b & b⇒c ≤ a⇒c", "⇒ monotone/antitone"),
    ("lem9-iii", H.PSEUDOCOMPLEMENTED, "a ≤ b ⟹ (a⇒b)* = 0", "⇒ of comparable elements is dense"),
    ("lem9-iv", H.PSEUDOCOMPLEMENTED, "(a⇒b)⇒a = a**", "⇒ Peirce-like law"),
    # distributive pseudocomplemented lattices
    ("dense-join", H.DISTRIBUTIVE, "(a∨a*)* = 0", "a∨a* is dense"),
    ("lem7-i", H.DISTRIBUTIVE, "a∨b = 1 & a∧b = 0 ⟹ a* = b & b* = a", "complements are pseudocomplements"),
    ("lem7-ii", H.DISTRIBUTIVE,
     "a∨c = 1 & a∧c = 0 & b∨d = 1 & b∧d = 0 ⟹ (a∨b)∨(c∧d) = 1 & (a∨b)∧(c∧d) = 0"
     " & (a∧b)∨(c∨d) = 1 & (a∧b)∧(c∨d) = 0", "complements of joins and meets"),
    ("lem1-i", H.DISTRIBUTIVE, "a∧(a→b) ≤ b", "→ modus ponens"),
    ("lem1-ii", H.DISTRIBUTIVE, "a ≤ b→c ⟹ a∧b ≤ c", "→ residuation, one direction"),
    ("lem1-iii", H.DISTRIBUTIVE, "a→b = 1 ⟹ a ≤ b", "→ equals 1 only on ≤"),
    ("lem8-i", H.DISTRIBUTIVE, "a∧(a⇒b) ≤ b**", "⇒ modus ponens up to **"),
    ("lem8-ii", H.DISTRIBUTIVE, "a ≤ b⇒c ⟹ a∧b ≤ c**", "⇒ residuation up to **"),
    ("lem8-iii", H.DISTRIBUTIVE, "a→b = a⇒b ⟹ a**∧b = a**∧b**", "when → and ⇒ agree"),
    # pseudocomplemented lattices satisfying the Stone identity
    ("lem2-i", H.STONE_IDENTITY, "a ≤ b** ⟹ a⇒b = 1", "⇒ is 1 below b**"),
    ("lem2-ii", H.STONE_IDENTITY, "a⇒(b⇒a) = 1", "⇒ weakening"),
    ("lem2-i'", H.STONE_IDENTITY, "a ≤ b ⟹ a⇒b = 1", "⇒ is 1 on ≤"),
    # Stone lattices
    ("lem6-i", H.STONE, "(a∨b)** = a**∨b**", "** preserves ∨"),
    ("lem6-ii", H.STONE, "(a∧b)* = a*∨b*", "De Morgan for ∧"),
    ("prop1-i", H.STONE, "(a*→b*)→b* = a*∨b* = (b*→a*)→a*", "→ quasi-commutativity on skeleton"),
    ("prop1-ii", H.STONE, "a∧b* ≤ c ⟺ a ≤ b*→c", "→ residuation on skeleton"),
    ("th1-i", H.STONE, "(a⇒b)⇒b = a**∨b** = (b⇒a)⇒a", "⇒ quasi-commutativity"),
    ("th1-ii", H.STONE, "a∧b* ≤ c** ⟺ a ≤ b*⇒c", "⇒ residuation"),
    ("th1-iii", H.STONE, "a→b = a⇒b ⟺ a**∧b = a**∧b**", "when → and ⇒ agree, converse"),
    ("th1-iv", H.STONE, "a⇒(b⇒c) = (a⇒c)∨(b⇒c) = b⇒(a⇒c)", "⇒ exchange"),
    ("th1-v", H.STONE, "(a⇒b*)∨c* = a⇒(b*∨c*) = (a⇒c*)∨b*", "⇒ distributes a join of pseudocomplements"),
    ("th1-vi", H.STONE, "a⇒b = 1 ⟺ a ≤ b**", "⇒ equals 1 exactly below b**"),
    ("axiom-a-modified", H.STONE, "(x⇒y)⇒x = x**", "Łukasiewicz-style axiom (a), modified"),
    ("axiom-b", H.STONE, "(x⇒y)⇒y = (y⇒x)⇒x", "Łukasiewicz-style axiom (b)"),
    ("axiom-c", H.STONE, "x⇒(y⇒z) = y⇒(x⇒z)", "Łukasiewicz-style axiom (c)"),
    ("unit-laws", H.STONE, "x⇒1 = 1 & 1⇒x = x**", "Łukasiewicz unit laws, modified"),
]

for _id, _hyp, _stmt, _anchor in _EQUATIONAL:
    register(Law(_id, _hyp, _stmt, _anchor))


def _structural():
    # imported here: these modules import PCAlgebra from implication, not from laws
    from pclatt import congruence as cg
    from pclatt import deduction as dd
    from pclatt.implication import stone_characterization_agrees

    def fmt(p, s):
        return p.L.format_set(s)

    def ds_families(p):
        full = frozenset(p.elements)
        for kind in ("first", "second"):
            fam = set(dd.enumerate_deductive_systems(p, kind))
            required = [full, frozenset({p.top})] if kind == "first" else [full]
            for must in required:
                if must not in fam:
                    return {"assignment": {"kind": kind}, "lhs": fmt(p, must),
                            "lhs_value": "missing", "relation": "∈", "rhs": "systems",
                            "rhs_value": "false"}
            for A in fam:
                for B in fam:
                    if A & B not in fam:
                        return {"assignment": {"kind": kind, "A": fmt(p, A), "B": fmt(p, B)},
                                "lhs": "A∩B", "lhs_value": fmt(p, A & B), "relation": "∈",
                                "rhs": "systems", "rhs_value": "false"}
        return None

    def ds2_bottom(p):
        v = dd.is_deductive_system(p, {p.top}, "second")
        return None if v.holds else v.counterexample

    def lem10(p):
        systems = set(dd.enumerate_deductive_systems(p, "first"))
        for F in dd.enumerate_filters(p.L):
            if F not in systems:
                v = dd.is_deductive_system(p, F, "first")
                return {"assignment": {"F": fmt(p, F)}, "lhs": "F filter", "lhs_value": "true",
                        "relation": "⟹", "rhs": "F first-kind system", "rhs_value": "false",
                        "witness": v.counterexample}
        return None

    def lem5_i(p):
        for A in dd.enumerate_deductive_systems(p, "second"):
            for a in sorted(A):
                for b in p.elements:
                    if p.leq(a, b) and b not in A:
                        return {"assignment": {"A": fmt(p, A), "a": p.L.label(a), "b": p.L.label(b)},
                                "lhs": "a ∈ A, a ≤ b", "lhs_value": "true", "relation": "⟹",
                                "rhs": "b ∈ A", "rhs_value": "false"}
        return None

    def lem5_ii(p):
        first = set(dd.enumerate_deductive_systems(p, "first"))
        for A in dd.enumerate_deductive_systems(p, "second"):
            if A not in first:
                return {"assignment": {"A": fmt(p, A)}, "lhs": "A second-kind system",
                        "lhs_value": "true", "relation": "⟹", "rhs": "A first-kind system",
                        "rhs_value": "false"}
        return None

    def cong_top(p):
        for P in cg.enumerate_congruences(p):
            top = cg.class_of_top(p.L, P)
            if not dd.is_deductive_system(p, top, "first").holds:
                return {"assignment": {"Θ": P.format(p.L)}, "lhs": "[1]Θ", "lhs_value": fmt(p, top),
                        "relation": "is", "rhs": "first-kind system", "rhs_value": "false"}
            for x in top:
                for y in top:
                    if p.join(x, y) not in top or p.meet(x, y) not in top:
                        return {"assignment": {"Θ": P.format(p.L)}, "lhs": "[1]Θ",
                                "lhs_value": fmt(p, top), "relation": "is",
                                "rhs": "sublattice", "rhs_value": "false"}
        return None

    def theta_thm(p):
        for A in dd.enumerate_deductive_systems(p, "second"):
            r = cg.check_theta_theorem(p, A)
            if not r.ok:
                return {"assignment": {"A": fmt(p, A)}, "lhs": "Θ(A) claims", "lhs_value": "false",
                        "relation": "=", "rhs": "expected", "rhs_value": "true",
                        "report": {
                            "reflexive": r.reflexive, "symmetric": r.symmetric,
                            "compatibility_failure": r.compatibility_failure,
                            "top_class": fmt(p, r.top_class),
                            "expected_top_class": fmt(p, r.expected_top_class),
                            "meet_closed": r.meet_closed, "transitive": r.transitive,
                        }}
        return None

    def theta_transitive(p):
        for A in dd.enumerate_deductive_systems(p, "second"):
            rel = cg.theta_of(p, A)
            t = rel.transitivity_failure()
            if t is not None:
                x, y, z = (p.L.label(v) for v in t)
                return {"assignment": {"A": fmt(p, A), "x": x, "y": y, "z": z},
                        "lhs": "(x,y),(y,z) ∈ Θ(A)", "lhs_value": "true", "relation": "⟹",
                        "rhs": "(x,z) ∈ Θ(A)", "rhs_value": "false"}
        return None

    def stone_char(p):
        v = stone_characterization_agrees(p.L)
        return v.counterexample

    return [
        Law("ds-families", H.PSEUDOCOMPLEMENTED,
            "deductive systems of both kinds contain L and are closed under ∩;"
            " first-kind ones contain {1}",
            "deductive systems form a closure system", ds_families),
        Law("ds2-bottom", H.OPEN, "{1} is a second-kind deductive system",
            "claimed bottom of the second-kind systems", ds2_bottom),
        Law("lem10", H.DISTRIBUTIVE, "every filter is a first-kind deductive system",
            "filters are first-kind systems", lem10),
        Law("lem5-i", H.STONE_IDENTITY, "every second-kind deductive system is upward closed",
            "second-kind systems are up-sets", lem5_i),
        Law("lem5-ii", H.STONE_IDENTITY,
            "every second-kind deductive system is a first-kind deductive system",
            "second kind implies first kind", lem5_ii),
        Law("cong-top-class", H.PSEUDOCOMPLEMENTED,
            "for every congruence Θ, [1]Θ is a first-kind deductive system and a sublattice",
            "congruence class of 1", cong_top),
        Law("stone-char", H.DISTRIBUTIVE,
            "identities (1)-(4) hold for → iff x ↦ x→0 makes L a Stone lattice",
            "Stone characterization theorem", stone_char, evaluable=H.DISTRIBUTIVE),
        Law("theta-thm", H.STONE,
            "Θ(A) is reflexive, symmetric, compatible, [1]Θ(A) = {x : x** ∈ A},"
            " and transitive when A is ∧-closed", "Θ(A) theorem", theta_thm,
            evaluable=H.STONE),
        Law("theta-transitive", H.OPEN,
            "Θ(A) is transitive for every second-kind deductive system A",
            "exploratory: ∧-closure dropped", theta_transitive, evaluable=H.STONE),
    ]


for _law in _structural():
    register(_law)
