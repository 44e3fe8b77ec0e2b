from itertools import permutations, product

import pytest

from pclatt.classify import classify
from pclatt.errors import LatticeError, SizeLimit
from pclatt.genlat import canonical_form, filter_family, generate_all, is_isomorphic
from pclatt.lattice import FiniteLattice
from pclatt.textio import fixture

# published numbers of unlabelled lattices (OEIS A006966)
KNOWN = [1, 1, 1, 2, 5, 15, 53, 222]


def _brute_lattices(n):
    """All bounded lattices on n elements by trying every relation on the inner elements."""
    if n == 1:
        return [FiniteLattice.from_leq(["0"], [[True]])]
    m = n - 2
    pairs = [(i, j) for i in range(m) for j in range(m) if i != j]
    found = []
    for bits in product([False, True], repeat=len(pairs)):
        leq = [[i == j or i == 0 or j == n - 1 for j in range(n)] for i in range(n)]
        for (i, j), b in zip(pairs, bits):
            leq[i + 1][j + 1] = b
        try:
            found.append(FiniteLattice.from_leq([str(k) for k in range(n)], leq))
        except LatticeError:
            pass
    return found


def _iso_brute(L1, L2):
    n = L1.n
    if n != L2.n:
        return False
    return any(
        all(L1.leq(x, y) == L2.leq(pi[x], pi[y]) for x in range(n) for y in range(n))
        for pi in permutations(range(n))
    )


def _count_classes(ls):
    reps = []
    for L in ls:
        if not any(_iso_brute(L, R) for R in reps):
            reps.append(L)
    return len(reps)


@pytest.mark.parametrize("n", range(1, 7))
def test_dedup_counts_match_brute_force(n):
    expected = _count_classes(_brute_lattices(n))
    assert expected == KNOWN[n - 1]
    assert sum(1 for _ in generate_all(n)) == expected


@pytest.mark.parametrize("n", [7, 8])
def test_known_counts(n):
    assert sum(1 for _ in generate_all(n)) == KNOWN[n - 1]


def test_dedup_members_pairwise_non_isomorphic():
    fam = list(generate_all(6))
    for i, L in enumerate(fam):
        for M in fam[i + 1:]:
            assert not _iso_brute(L, M)


def test_non_dedup_covers_every_class():
    for n in range(2, 7):
        classes = {canonical_form(L) for L in generate_all(n, dedup=False)}
        assert classes == {canonical_form(L) for L in generate_all(n)}


def test_non_dedup_counts():
    # naturally labelled lattices: element order is a linear extension
    assert [sum(1 for _ in generate_all(n, dedup=False)) for n in range(1, 8)] == [1, 1, 1, 2, 7, 39, 320]


def test_canonical_form_is_invariant():
    fam = list(generate_all(5, dedup=False))
    for L in fam:
        for M in fam:
            assert (canonical_form(L) == canonical_form(M)) == _iso_brute(L, M)


def test_fixtures_appear():
    for name, n in [("fig1a", 5), ("fig1b", 6), ("fig1c", 5)]:
        assert sum(is_isomorphic(fixture(name), L) for L in generate_all(n)) == 1


def test_family_is_reiterable():
    fam = generate_all(5)
    assert list(fam) == list(fam)


def test_size_limits():
    for n in (0, 9):
        with pytest.raises(SizeLimit):
            generate_all(n)


def test_filter_examples():
    assert sum(1 for _ in filter_family(generate_all(5), "not-distributive")) == 2
    stone6 = list(filter_family(generate_all(6), "stone"))
    assert any(is_isomorphic(L, fixture("fig1b")) for L in stone6)
    assert all(classify(L).stone for L in stone6)
    odd = filter_family(generate_all(5), lambda L: L.n % 2 == 1)
    assert sum(1 for _ in odd) == 5


def test_filter_rejects_unknown_tag():
    with pytest.raises(ValueError):
        filter_family(generate_all(4), "modular")
