"""Run every registered law over the fixtures and all generated lattices."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Iterable

from pclatt.classify import Classification, classify
from pclatt.genlat import generate_all
from pclatt.implication import PCAlgebra
from pclatt.laws import REGISTRY, Law, check_law, get_law
from pclatt.lattice import FiniteLattice
from pclatt.pseudo import try_pseudocomplement_table
from pclatt.textio import FIXTURES, fixture


@dataclass(frozen=True)
class SuiteEntry:
    lattice: str
    law: str
    hypothesis_met: bool
    holds: bool
    counterexample: dict | None = None

    @property
    def fatal(self) -> bool:
        return self.hypothesis_met and not self.holds


@dataclass
class SuiteReport:
    entries: list[SuiteEntry]
    # per-lattice classification tags; routing cache, not part of the JSON schema
    lattices: dict[str, list[str]] = field(default_factory=dict, compare=False)

    @property
    def fatal(self) -> list[SuiteEntry]:
        return [e for e in self.entries if e.fatal]

    @property
    def informational(self) -> list[SuiteEntry]:
        return [e for e in self.entries if not e.hypothesis_met and not e.holds]

    def summary(self) -> dict[str, int]:
        return {
            "lattices": len({e.lattice for e in self.entries} | set(self.lattices)),
            "checks": len(self.entries),
            "exercised": sum(e.hypothesis_met for e in self.entries),
            "passed": sum(e.holds for e in self.entries),
            "fatal": len(self.fatal),
            "informational": len(self.informational),
        }

    def to_json(self) -> str:
        return json.dumps([asdict(e) for e in self.entries], ensure_ascii=False, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "SuiteReport":
        return cls([SuiteEntry(**d) for d in json.loads(text)])

    def render_text(self, verbose: bool = False) -> str:
        lines = []
        for e in self.entries:
            if e.holds and not verbose:
                continue
            status = "PASS" if e.holds else ("FATAL" if e.fatal else "info")
            line = f"{status:5} {e.lattice:12} {e.law:20}"
            if not e.hypothesis_met:
                line += " (hypothesis not met)"
            if e.counterexample:
                line += " " + format_counterexample(e.counterexample)
            lines.append(line)
        s = self.summary()
        lines.append(
            f"{s['lattices']} lattices, {s['checks']} checks, {s['exercised']} under hypothesis, "
            f"{s['fatal']} FATAL, {s['informational']} informational failures"
        )
        return "\n".join(lines)


def format_counterexample(ce: dict) -> str:
    assign = ", ".join(f"{k}:={v}" for k, v in ce.get("assignment", {}).items())
    return (
        f"[{assign}] {ce['lhs']} {ce['relation']} {ce['rhs']} fails: "
        f"{ce['lhs']} is {ce['lhs_value']}, {ce['rhs']} is {ce['rhs_value']}"
    )


def evaluate_lattice(
    name: str, L: FiniteLattice, laws: Iterable[Law]
) -> tuple[list[SuiteEntry], Classification]:
    star = try_pseudocomplement_table(L)
    classes = classify(L, star)
    if star is None:
        return [], classes
    p = PCAlgebra(L, star)
    entries = []
    for law in laws:
        if not classes.meets(law.evaluable):
            continue
        v = check_law(p, law, classes)
        entries.append(SuiteEntry(name, law.id, v.hypothesis_met, v.holds, v.counterexample))
    return entries, classes


def suite_lattices(max_n: int, fixtures: bool = True, min_n: int = 2) -> list[tuple[str, FiniteLattice]]:
    out = []
    if fixtures:
        out += [(name, fixture(name)) for name in FIXTURES]
    for n in range(min_n, max_n + 1):
        out += [(f"n{n}-{k}", L) for k, L in enumerate(generate_all(n, dedup=True))]
    return out


def run_suite(
    max_n: int,
    laws: Iterable[str] | None = None,
    fixtures: bool = True,
    min_n: int = 2,
) -> SuiteReport:
    """Classify each lattice once, then check every selected law on it.

    Lattices are the built-in fixtures followed by all lattices with
    ``min_n..max_n`` elements up to isomorphism.  A law is evaluated wherever
    it makes sense; failures outside its hypothesis class are informational.
    """
    selected = [get_law(i) for i in laws] if laws is not None else list(REGISTRY.values())
    report = SuiteReport([])
    for name, L in suite_lattices(max_n, fixtures, min_n):
        entries, classes = evaluate_lattice(name, L, selected)
        report.entries.extend(entries)
        report.lattices[name] = classes.tags()
    return report
