import pytest
from hypothesis import given, settings

from conftest import lattices
from pclatt.classify import Hypothesis, classify
from pclatt.errors import PclattError, UnknownLaw
from pclatt.implication import PCAlgebra
from pclatt.laws import REGISTRY, FormulaError, check_law, evaluate_formula, get_law, parse_formula
from pclatt.pseudo import try_pseudocomplement_table
from pclatt.textio import fixture

SPEC_IDS = [
    "arrow-idem-star", "arrow-y-le", "lem4-i", "lem4-ii", "lem4-iii", "lem4-iv", "lem4-v",
    "darrow-defs", "lem9-i", "lem9-ii", "lem9-iii", "lem9-iv",
    "lem1-i", "lem1-ii", "lem1-iii", "lem8-i", "lem8-ii", "lem8-iii",
    "lem2-i", "lem2-ii", "lem2-i'",
    "prop1-i", "prop1-ii", "th1-i", "th1-ii", "th1-iii", "th1-iv", "th1-v", "th1-vi",
    "axiom-a-modified", "axiom-b", "axiom-c", "unit-laws",
]


def test_registry_covers_listed_laws():
    assert set(SPEC_IDS) <= set(REGISTRY)


@pytest.mark.parametrize("law_id,hyp", [
    ("lem4-ii", Hypothesis.PSEUDOCOMPLEMENTED),
    ("lem1-i", Hypothesis.DISTRIBUTIVE),
    ("lem2-i", Hypothesis.STONE_IDENTITY),
    ("th1-i", Hypothesis.STONE),
    ("ds2-bottom", Hypothesis.OPEN),
])
def test_hypothesis_classes(law_id, hyp):
    assert get_law(law_id).hypothesis is hyp


def test_unknown_law():
    with pytest.raises(UnknownLaw):
        get_law("lem99")


def test_lem1_i_on_n5():
    p = PCAlgebra(fixture("fig1a"))
    v = check_law(p, "lem1-i")
    assert not v.holds and not v.hypothesis_met
    ce = v.counterexample
    assert ce["assignment"] == {"a": "c", "b": "a"}
    assert (ce["lhs_value"], ce["relation"], ce["rhs_value"]) == ("c", "≤", "a")


def test_lem1_ii_on_n5():
    v = check_law(PCAlgebra(fixture("fig1a")), "lem1-ii")
    assert not v.holds
    assert v.counterexample["assignment"] == {"a": "c", "b": "c", "c": "a"}


def test_th1_i_on_grid():
    v = check_law(PCAlgebra(fixture("fig1b")), "th1-i")
    assert v.holds and v.hypothesis_met


def test_stone_law_on_non_stone_is_informational():
    v = check_law(PCAlgebra(fixture("fig1c")), "lem5-ii")
    assert v.holds and not v.hypothesis_met


def test_not_evaluable():
    with pytest.raises(PclattError):
        check_law(PCAlgebra(fixture("fig1a")), "stone-char")


@pytest.mark.parametrize("name", ["fig1a", "fig1b", "fig1c"])
def test_counterexamples_reproduce(name):
    # every reported assignment must actually falsify the formula
    p = PCAlgebra(fixture(name))
    for law in REGISTRY.values():
        if law.search is not None:
            continue
        ce = law.first_counterexample(p)
        if ce is None:
            continue
        env = {k: p.L.index(v) for k, v in ce["assignment"].items()}
        again = evaluate_formula(p, law.formula, env)
        assert again is not None
        assert again["lhs_value"] == ce["lhs_value"]


def test_parser_shapes():
    f = parse_formula("a ≤ b ⟹ b* ≤ a*")
    assert f.connective == "⟹" and f.variables == ("a", "b")
    f = parse_formula("x⇒y = y*⇒x* = y*→x*")
    assert f.connective is None and len(f.conclusion[0].terms) == 3


def test_parser_ascii_aliases():
    p = PCAlgebra(fixture("fig1b"))
    a = parse_formula("a <= b ==> b* <= a*")
    u = parse_formula("a ≤ b ⟹ b* ≤ a*")
    for x in p.elements:
        for y in p.elements:
            env = {"a": x, "b": y}
            assert (evaluate_formula(p, a, env) is None) == (evaluate_formula(p, u, env) is None)


def test_parser_precedence():
    # * binds tighter than ∧, ∧ tighter than ∨, ∨ tighter than →
    p = PCAlgebra(fixture("fig1b"))
    L = p.L
    f = parse_formula("a*∨b∧c = (a*)∨(b∧c)")
    g = parse_formula("a∨b→c = (a∨b)→c")
    for x in L.elements:
        for y in L.elements:
            for z in L.elements:
                assert evaluate_formula(p, f, {"a": x, "b": y, "c": z}) is None
                assert evaluate_formula(p, g, {"a": x, "b": y, "c": z}) is None


@pytest.mark.parametrize("bad", ["a ≤", "(a∨b", "a ? b", "a = b = ", ""])
def test_parser_errors(bad):
    with pytest.raises(FormulaError):
        parse_formula(bad)


@settings(max_examples=60, deadline=None)
@given(lattices(5))
def test_no_law_fails_inside_its_class(L):
    star = try_pseudocomplement_table(L)
    if star is None:
        return
    p = PCAlgebra(L, star)
    classes = classify(L, star)
    for law in REGISTRY.values():
        if classes.meets(law.evaluable):
            v = check_law(p, law, classes)
            assert v.holds or not v.hypothesis_met, (law.id, v.counterexample)
