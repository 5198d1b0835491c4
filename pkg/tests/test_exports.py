import json

import pytest

from displaycalc import exports, muddy, prooftree, terms
from displaycalc.engine import ActionStructure, CutFormula
from displaycalc.exports import (ExportError, export_latex, load_script,
                                 save_script)
from displaycalc.prooftree import ByRule, Macro, Prooftree, open_goal
from displaycalc.session import ProofSession

import termgen


def P(spec, text):
    return terms.parse_term(spec, text, "Sequent")


def inference_lines(text):
    return [l for l in text.splitlines()
            if any(m in l for m in ("\\AX$", "\\UI$", "\\BI$", "\\TI$"))]


def test_latex_axiom_leaf(deak):
    tree = Prooftree(P(deak, "p |- p"), ByRule("Id"), ())
    out = export_latex(deak, tree)
    lines = inference_lines(out)
    assert len(lines) == 1
    assert "Id" in lines[0]
    assert out.rstrip().endswith("\\DisplayProof")


def test_latex_or_l_binary_inference(deak):
    goal = P(deak, "(p \\/ q) |- (p ; q)")
    tree = prooftree.apply_rule_at(deak, open_goal(goal), (), "Or_L")
    tree = prooftree.apply_rule_at(deak, tree, (0,), "Id")
    tree = prooftree.apply_rule_at(deak, tree, (1,), "Id")
    out = export_latex(deak, tree)
    lines = inference_lines(out)
    assert len(lines) == 3
    assert "\\BI$" in lines[2] and "\\vee_L" in lines[2]
    assert lines[0].count("\\AX$") == 1 and lines[1].count("\\AX$") == 1


def test_latex_line_count_equals_tree_size_for_goldens(deak):
    for name in ("mc_1_1", "mc_2_1", "mc_2_2"):
        tree = muddy.replay_script(name)
        out = export_latex(deak, tree)
        assert len(inference_lines(out)) == tree.size()
        assert out.count("{") == out.count("}")


def test_latex_is_byte_stable(deak):
    tree = muddy.replay_script("mc_1_1")
    assert export_latex(deak, tree) == export_latex(deak, tree)


def test_latex_rejects_wide_nodes(deak):
    wide = Prooftree(P(deak, "p |- p"), ByRule("Id"),
                     tuple(open_goal(P(deak, "p |- p")) for _ in range(4)))
    with pytest.raises(ExportError):
        export_latex(deak, wide)


def test_latex_applies_abbreviations(deak):
    session = ProofSession(deak, open_goal(P(deak, "p -> bot |- q")))
    session.define_abbreviation("notp", "p -> bot")
    out = export_latex(deak, session.tree, session.abbreviations)
    assert "notp" in out


def test_empty_session_roundtrip(deak):
    session = ProofSession(deak, open_goal(P(deak, "p |- p")))
    back = load_script(save_script(session), deak)
    assert back == session


def test_golden_roundtrip_node_for_node(deak):
    data = muddy.script_bytes("mc_2_2")
    session = load_script(data, deak)
    again = load_script(save_script(session), deak)
    assert again.tree == session.tree
    assert again == session


def test_full_session_roundtrip(deak):
    session = ProofSession(
        deak, open_goal(P(deak, "w ; (s \\/ t) |- x")),
        [CutFormula(terms.parse_term(deak, "p", "Formula")),
         ActionStructure("f", ("father",),
                         (("father", terms.parse_term(deak, "p", "Formula")),))])
    session.define_abbreviation("nots", "s -> bot")
    schema = Prooftree(
        terms.parse_term(deak, "F?A |- F?A", "Sequent",
                         allow_placeholders=True), ByRule("Id"), ())
    session.define_macro(Macro("genid_atom", schema))
    back = load_script(save_script(session), deak)
    assert back == session


def test_hash_mismatch_is_a_load_error(deak):
    session = ProofSession(deak, open_goal(P(deak, "p |- p")))
    doc = json.loads(save_script(session))
    doc["calculus"]["hash"] = "0" * 64
    with pytest.raises(ExportError):
        load_script(json.dumps(doc).encode(), deak)


def test_unknown_rule_in_script_is_named(deak):
    session = ProofSession(deak, open_goal(P(deak, "p |- p")))
    doc = json.loads(save_script(session))
    doc["tree"] = {"sequent": "p |- p", "rule": "Bogus"}
    with pytest.raises(ExportError) as exc:
        load_script(json.dumps(doc).encode(), deak)
    assert "Bogus" in str(exc.value)


def test_random_session_roundtrips(deak):
    rng = termgen.make_rng(7)
    for _ in range(40):
        goal = termgen.sequent(rng, 3)
        tree = prooftree.search(deak, [], goal, 2) or open_goal(goal)
        session = ProofSession(deak, tree)
        back = load_script(save_script(session), deak)
        assert back == session
