import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from displaycalc import engine, terms
from displaycalc.engine import (ActionStructure, CutFormula,
                                MissingLocaleError, applicable_rules,
                                check_condition, der, match, replace)
from displaycalc.terms import Node, Placeholder

import termgen


def P(spec, text, sort="Sequent"):
    return terms.parse_term(spec, text, sort)


def F(spec, text):
    return terms.parse_term(spec, text, "Formula", allow_placeholders=False)


def test_match_or_l_conclusion(deak):
    pattern = deak.rules["Or_L"].conclusion
    target = P(deak, "(p \\/ q) |- (I ; q)")
    sigma = match(pattern, target)
    assert sigma == {
        "A": F(deak, "p"),
        "B": F(deak, "q"),
        "X": Node("I", ()),
        "Y": P(deak, "q", "Structure"),
    }
    assert replace(pattern, sigma) == target


def test_match_bare_placeholder(deak):
    t = P(deak, "p ; q", "Structure")
    assert match(Placeholder("X"), t) == {"X": t}


def test_formula_placeholder_rejects_structures(deak):
    pattern = P(deak, "F?A |- ?X").children[0]  # coerced formula placeholder
    target = P(deak, "p ; q", "Structure")
    assert match(pattern, target) is None


def test_match_is_unique_and_nonlinear(deak):
    pattern = deak.rules["Id"].conclusion
    assert match(pattern, P(deak, "p |- p")) == {"A": F(deak, "p")}
    assert match(pattern, P(deak, "p |- q")) is None


def test_replace_unbound_placeholder_errors(deak):
    with pytest.raises(engine.EngineError):
        replace(deak.rules["Or_L"].conclusion, {"A": F(deak, "p")})


def test_replace_identity_on_closed_terms(deak):
    t = P(deak, "p ; q |- I")
    assert replace(t, {}) == t


def test_der_or_l(deak):
    res = der([], deak.rules["Or_L"], P(deak, "(p \\/ q) |- (s ; t)"))
    assert res == ("Or_L", [P(deak, "p |- s"), P(deak, "q |- t")])


def test_der_cut_uses_locale_formula(deak):
    res = der([CutFormula(F(deak, "p"))], deak.rules["SingleCut"],
              P(deak, "s |- t"))
    assert res == ("SingleCut", [P(deak, "s |- p"), P(deak, "p |- t")])


def test_der_cut_without_locale_raises_distinct_error(deak):
    with pytest.raises(MissingLocaleError):
        der([], deak.rules["SingleCut"], P(deak, "s |- t"))


def test_der_atom_strips_action_strings(deak):
    rule = deak.rules["Atom"]
    assert der([], rule, P(deak, "{alpha} p |- {alpha} p")) == ("Atom", [])
    assert der([], rule, P(deak, "{alpha}{beta} p |- p")) == ("Atom", [])
    assert der([], rule, P(deak, "p |- q")) is None


def test_check_condition_atom(deak):
    g = P(deak, "{alpha}{beta} p |- p")
    assert check_condition(deak, "atom", g, {})
    assert check_condition(deak, "atom", P(deak, "p |- p"), {})
    assert not check_condition(deak, "atom", P(deak, "{alpha} p |- {alpha} q"), {})
    # agent modalities are not action strings
    assert not check_condition(deak, "atom", P(deak, "{a} p |- p"), {})


def test_unknown_condition_is_defended(deak):
    with pytest.raises(engine.EngineError):
        check_condition(deak, "nope", P(deak, "p |- p"), {})


def test_applicable_rules_identity_goal(deak):
    app, needs = applicable_rules(deak, [], P(deak, "p |- p"))
    ids = [rid for rid, _ in app]
    assert "Id" in ids and "Or_L" not in ids
    assert ("SingleCut", "CutFormula f") in needs


def test_applicable_rules_reports_missing_locales(deak):
    app, needs = applicable_rules(deak, [], P(deak, "s |- t"))
    assert ("SingleCut", "CutFormula f") in needs
    assert all(rid != "SingleCut" for rid, _ in app)


def test_swap_expands_over_related_actions(deak):
    struct = ActionStructure(
        "multi", ("alpha", "beta"),
        (("alpha", F(deak, "p")), ("beta", F(deak, "q"))),
        ((("alpha", "a"), ("alpha", "beta")),))
    res = der([struct], deak.rules["Swap_R"], P(deak, "s |- {alpha} [a] p"))
    assert res == ("Swap_R", [P(deak, "s |- [a] [alpha] p"),
                              P(deak, "s |- [a] [beta] p")])


def test_swap_backward_uses_preimage(deak):
    struct = ActionStructure(
        "multi", ("alpha", "beta"),
        (("alpha", F(deak, "p")), ("beta", F(deak, "q"))),
        ((("beta", "a"), ("alpha",)),))
    res = der([struct], deak.rules["Swap_Rb"], P(deak, "s |- {alpha} [a]' p"))
    # alpha is related to itself (default) and is the image of beta
    assert res == ("Swap_Rb", [P(deak, "s |- [a]' [alpha] p"),
                               P(deak, "s |- [a]' [beta] p")])


def test_pre_rules_substitute_the_precondition(deak):
    struct = ActionStructure("f", ("father",),
                             (("father", F(deak, "p \\/ q")),))
    res = der([struct], deak.rules["Pre_L"], P(deak, "Phi father |- s"))
    assert res == ("Pre_L", [P(deak, "p \\/ q |- s")])
    res = der([struct], deak.rules["Pre_R"], P(deak, "s |- Phi father"))
    assert res == ("Pre_R", [P(deak, "s |- p \\/ q")])


def test_locale_serialization_roundtrip(deak):
    locs = [CutFormula(F(deak, "p -> q")),
            ActionStructure("f", ("father",),
                            (("father", F(deak, "p")),),
                            ((("father", "1"), ("father",)),))]
    doc = engine.locales_to_document(deak, locs)
    back = engine.locales_from_document(deak, doc)
    assert back == locs


# properties


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9), st.integers(0, 102))
def test_match_soundness_on_instantiated_conclusions(deak, seed, idx):
    rng = termgen.make_rng(seed)
    rule = list(deak.rules.values())[idx % len(deak.rules)]
    sigma = termgen.instantiation(rng, rule.conclusion)
    target = replace(rule.conclusion, sigma)
    got = match(rule.conclusion, target)
    assert got == sigma
    assert replace(rule.conclusion, got) == target


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**9))
def test_display_involution_random_goals(deak, seed):
    rng = termgen.make_rng(seed)
    pairs = deak.display_pairs
    rid, inv_id = pairs[seed % len(pairs)]
    rule, inv = deak.rules[rid], deak.rules[inv_id]
    sigma = termgen.instantiation(rng, rule.conclusion)
    goal = replace(rule.conclusion, sigma)
    _, premises = der([], rule, goal)
    assert len(premises) == 1
    back = der([], inv, premises[0])
    assert back is not None and back[1] == [goal]


def test_condition_purity(deak):
    g = P(deak, "{alpha} p |- p")
    sigma = {"A": F(deak, "p")}
    before = dict(sigma)
    check_condition(deak, "atom", g, sigma)
    check_condition(deak, "literal", g, sigma)
    assert sigma == before


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10**9))
def test_der_premises_are_well_sorted_on_random_goals(deak, seed):
    """Every premise of every applicable rule re-parses to itself."""
    rng = termgen.make_rng(seed)
    goal = termgen.sequent(rng, rng.randrange(1, 4))
    locs = [ActionStructure(a, (a,), ((a, termgen.formula(rng, 1)),))
            for a in termgen.ACTIONS]
    app, _ = applicable_rules(deak, locs, goal)
    for rid, premises in app:
        for prem in premises:
            out = terms.render(deak, prem)
            back = terms.parse_term(deak, out, "Sequent",
                                    allow_placeholders=False)
            assert back == prem, (rid, out)
