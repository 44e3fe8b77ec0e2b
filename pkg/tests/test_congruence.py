from itertools import product

import pytest
from hypothesis import given, settings

from conftest import lattices, small_lattices
from pclatt.classify import is_stone
from pclatt.congruence import (
    BinRel,
    Partition,
    check_theta_theorem,
    class_of_top,
    compatibility_failure,
    enumerate_congruences,
    set_partitions,
    theta_of,
)
from pclatt.deduction import enumerate_deductive_systems
from pclatt.errors import HypothesisViolated, NotADeductiveSystem, SizeLimit
from pclatt.implication import PCAlgebra
from pclatt.lattice import chain
from pclatt.pseudo import try_pseudocomplement_table
from pclatt.textio import fixture


def _theta_brute(p, A):
    return {(x, y) for x, y in product(p.elements, repeat=2)
            if p.darrow(x, y) in A and p.darrow(y, x) in A}


@pytest.mark.parametrize("A,blocks", [
    ("c,1", "{0} {a} {b,d} {c,1}"),
    ("b,c,d,1", "{0,a} {b,c,d,1}"),
    ("a,c,1", "{0,b,d} {a,c,1}"),
    ("0,a,b,c,d,1", "{0,a,b,c,d,1}"),
])
def test_theta_on_grid(A, blocks):
    p = PCAlgebra(fixture("fig1b"))
    S = p.L.parse_set(A)
    rel = theta_of(p, S)
    assert rel.pairs == _theta_brute(p, S)
    assert rel.classes().format(p.L) == blocks
    r = check_theta_theorem(p, S)
    assert r.ok and r.compatible and r.transitive


def test_theta_rejects_non_system():
    p = PCAlgebra(fixture("fig1b"))
    with pytest.raises(NotADeductiveSystem):
        theta_of(p, {p.top})


def test_theta_theorem_needs_stone():
    p = PCAlgebra(fixture("fig1c"))
    with pytest.raises(HypothesisViolated):
        check_theta_theorem(p, p.L.parse_set("c,1"))


def test_chain2_congruences():
    p = PCAlgebra(chain(2))
    assert [P.blocks for P in enumerate_congruences(p)] == [((0,), (1,)), ((0, 1),)]


def test_grid_congruences():
    p = PCAlgebra(fixture("fig1b"))
    got = [P.format(p.L) for P in enumerate_congruences(p)]
    assert got == [
        "{0} {a} {b} {c} {d} {1}",
        "{0} {a} {b,d} {c,1}",
        "{0,a} {b,c} {d,1}",
        "{0,a} {b,c,d,1}",
        "{0,b,d} {a,c,1}",
        "{0,a,b,c,d,1}",
    ]


def test_set_partitions_bell_numbers():
    assert [sum(1 for _ in set_partitions(n)) for n in range(7)] == [1, 1, 2, 5, 15, 52, 203]


def test_size_limit():
    with pytest.raises(SizeLimit):
        enumerate_congruences(PCAlgebra(chain(9)))


def test_binrel_helpers():
    P = Partition.of([[2, 0], [1]])
    assert P.blocks == ((0, 2), (1,))
    rel = P.to_relation(3)
    assert rel.is_reflexive() and rel.is_symmetric() and rel.is_transitive()
    assert rel.classes() == P
    bad = BinRel(3, frozenset({(0, 1), (1, 2)}))
    assert bad.transitivity_failure() == (0, 1, 2)
    with pytest.raises(ValueError):
        bad.classes()


@settings(deadline=None)
@given(lattices(6))
def test_congruences_are_compatible_and_meet_closed(L):
    star = try_pseudocomplement_table(L)
    if star is None:
        return
    p = PCAlgebra(L, star)
    congs = enumerate_congruences(p)
    rels = {P.to_relation(L.n).pairs for P in congs}
    for P in congs:
        assert compatibility_failure(p, P.to_relation(L.n)) is None
    for r in rels:
        for s in rels:
            assert BinRel(L.n, r & s).classes().to_relation(L.n).pairs in rels
    # identity and total relation always present
    assert len(congs[0].blocks) == L.n and len(congs[-1].blocks) == 1


def test_theta_theorem_all_small_stone():
    for L in small_lattices(6):
        star = try_pseudocomplement_table(L)
        if star is None or not is_stone(L, star).holds:
            continue
        p = PCAlgebra(L, star)
        for A in enumerate_deductive_systems(p, "second"):
            r = check_theta_theorem(p, A)
            assert r.ok
            assert class_of_top(L, r.relation) == r.expected_top_class
