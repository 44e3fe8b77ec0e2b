"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PclattError(Exception):
    """Base class for all errors raised by pclatt."""


class LatticeError(PclattError, ValueError):
    """Malformed input to lattice construction."""


class NotAPoset(LatticeError):
    def __init__(self, cycle: list[str]):
        self.cycle = cycle
        super().__init__(f"cover relation has a cycle through {', '.join(cycle)}")


class NotALattice(LatticeError):
    def __init__(self, x: str, y: str, missing: str):
        self.pair = (x, y)
        self.missing = missing
        super().__init__(f"elements {x} and {y} have no {missing}")


class NotBounded(LatticeError):
    def __init__(self, which: str, candidates: list[str]):
        self.which = which
        self.candidates = candidates
        super().__init__(f"no unique {which}; candidates: {', '.join(candidates)}")


class NotPseudocomplemented(PclattError):
    def __init__(self, element: str, maximal: list[str]):
        self.element = element
        self.maximal = maximal
        super().__init__(
            f"{element} has no pseudocomplement; maximal elements disjoint from it: "
            + ", ".join(maximal)
        )


class NotDistributive(PclattError):
    pass


class NotADeductiveSystem(PclattError):
    pass


class HypothesisViolated(PclattError):
    pass


class UnknownLaw(PclattError, KeyError):
    def __str__(self) -> str:
        return f"unknown law: {self.args[0]}"


class SizeLimit(PclattError):
    pass


class ParseError(LatticeError):
    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")
