"""Deductive systems of the first (→) and second (⇒) kind, and lattice filters."""

from __future__ import annotations

from typing import Iterable

import numpy as np

from pclatt.errors import SizeLimit
from pclatt.implication import PCAlgebra
from pclatt.lattice import FiniteLattice, Verdict

MAX_DS_N = 20

KIND_SYMBOL = {"first": "→", "second": "⇒"}


def canonical_order(sets: Iterable[frozenset[int]]) -> list[frozenset[int]]:
    """Sort by size, then lexicographically on the sorted member indices."""
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def is_deductive_system(p: PCAlgebra, A: Iterable[int], kind: str) -> Verdict:
    A = frozenset(A)
    lab = p.L.label
    if p.top not in A:
        return Verdict(False, {
            "assignment": {"A": p.L.format_set(A)},
            "lhs": "1", "lhs_value": lab(p.top),
            "relation": "∈",
            "rhs": "A", "rhs_value": "false",
        })
    imp = p.impl(kind)
    sym = KIND_SYMBOL[kind]
    for x in sorted(A):
        for y in p.elements:
            if y not in A and imp(x, y) in A:
                return Verdict(False, {
                    "assignment": {"A": p.L.format_set(A), "x": lab(x), "y": lab(y)},
                    "lhs": f"x{sym}y", "lhs_value": lab(imp(x, y)),
                    "relation": "∈ A but y ∉",
                    "rhs": "y", "rhs_value": lab(y),
                })
    return Verdict(True)


def _all_masks(n: int, top: int) -> np.ndarray:
    # every subset of range(n) containing top, as integer bitmasks in increasing order
    free = [i for i in range(n) if i != top]
    idx = np.arange(1 << len(free), dtype=np.int64)
    masks = np.full(idx.shape, 1 << top, dtype=np.int64)
    for bit, elem in enumerate(free):
        masks |= ((idx >> bit) & 1) << elem
    return masks


def enumerate_deductive_systems(p: PCAlgebra, kind: str) -> list[frozenset[int]]:
    """Every deductive system of the given kind, in canonical order.

    Brute force over all subsets containing the top, vectorized over the
    subsets: a subset is rejected when some x and x→y lie in it but y does not.
    """
    n = p.n
    if n > MAX_DS_N:
        raise SizeLimit(f"deductive system enumeration is limited to {MAX_DS_N} elements")
    imp = p.impl(kind)
    masks = _all_masks(n, p.top)
    ok = np.ones(masks.shape, dtype=bool)
    bits = [((masks >> i) & 1).astype(bool) for i in range(n)]
    for x in range(n):
        for y in range(n):
            ok &= ~(bits[x] & bits[imp(x, y)] & ~bits[y])
    found = [frozenset(i for i in range(n) if m >> i & 1) for m in masks[ok].tolist()]
    return canonical_order(found)


def ds_closure(p: PCAlgebra, seed: Iterable[int], kind: str) -> frozenset[int]:
    """Least deductive system of the given kind containing ``seed``."""
    imp = p.impl(kind)
    A = set(seed) | {p.top}
    changed = True
    while changed:
        changed = False
        for x in list(A):
            for y in p.elements:
                if y not in A and imp(x, y) in A:
                    A.add(y)
                    changed = True
    return frozenset(A)


def ds_join(p: PCAlgebra, A: Iterable[int], B: Iterable[int], kind: str) -> frozenset[int]:
    """Join in the lattice of deductive systems: closure of the union."""
    return ds_closure(p, set(A) | set(B), kind)


def is_filter(L: FiniteLattice, A: Iterable[int]) -> Verdict:
    A = frozenset(A)
    lab = L.label
    if not A:
        return Verdict(False, {
            "assignment": {"A": "{}"}, "lhs": "A", "lhs_value": "{}",
            "relation": "nonempty", "rhs": "", "rhs_value": "false",
        })
    for x in sorted(A):
        for y in L.elements:
            if L.leq(x, y) and y not in A:
                return Verdict(False, {
                    "assignment": {"A": L.format_set(A), "x": lab(x), "y": lab(y)},
                    "lhs": "x", "lhs_value": lab(x),
                    "relation": "≤ y, x ∈ A but y ∉",
                    "rhs": "y", "rhs_value": lab(y),
                })
    for x in sorted(A):
        for y in sorted(A):
            if L.meet(x, y) not in A:
                return Verdict(False, {
                    "assignment": {"A": L.format_set(A), "x": lab(x), "y": lab(y)},
                    "lhs": "x∧y", "lhs_value": lab(L.meet(x, y)),
                    "relation": "∉",
                    "rhs": "A", "rhs_value": L.format_set(A),
                })
    return Verdict(True)


def enumerate_filters(L: FiniteLattice) -> list[frozenset[int]]:
    """All filters, in canonical order.

    In a finite lattice every filter is the principal filter of its meet.
    """
    return canonical_order({frozenset(y for y in L.elements if L.leq(a, y)) for a in L.elements})
