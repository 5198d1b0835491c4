"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest -s tests/test_acceptance.py` to see the per-criterion lines.
"""

import importlib.resources
import json
import subprocess
import sys
import time

import pytest

from displaycalc import engine, exports, muddy, prooftree, terms
from displaycalc.calculus import load_calculus
from displaycalc.engine import der, match, replace
from displaycalc.prooftree import rule_usage, search, tactic_atom, \
    tactic_identity, validate_tree
from displaycalc.session import ProofSession
from displaycalc.terms import Node

import termgen


def report(number, label, ok=True):
    print("\n[%s] criterion %d: %s" % ("PASS" if ok else "FAIL", number, label))
    assert ok


def P(spec, text):
    return terms.parse_term(spec, text, "Sequent")


def test_criterion_01_asset_fidelity():
    started = time.monotonic()
    data = importlib.resources.files("displaycalc").joinpath(
        "assets/deak.json").read_text(encoding="utf-8")
    spec = load_calculus(data)  # raises on any diagnostic
    elapsed = time.monotonic() - started
    # every entry of the structural-connective table, both tiers
    structural = ("Lt", "Gt", "Semi", "I", "SA", "SAb", "Phi", "SK", "SKb")
    operational = ("Top", "Bot", "And", "Or", "Imp", "BoxK", "DiaK", "BoxKb",
                   "DiaKb", "BoxA", "DiaA", "BoxAb", "DiaAb", "One")
    missing = [c for c in structural + operational if c not in spec.connectives]
    assert not missing, missing
    assert len(spec.rules) >= 100, len(spec.rules)
    assert elapsed < 1.0, elapsed
    report(1, "deak.json loads clean: %d rules, %d connectives in %.3fs"
           % (len(spec.rules), len(spec.connectives), elapsed))


def test_criterion_02_match_replace_roundtrip(deak):
    started = time.monotonic()
    rng = termgen.make_rng(202608)
    rules = list(deak.rules.values())
    failures = 0
    for i in range(1000):
        rule = rules[i % len(rules)]
        sigma = termgen.instantiation(rng, rule.conclusion, depth=3)
        target = replace(rule.conclusion, sigma)
        got = match(rule.conclusion, target)
        if got != sigma or replace(rule.conclusion, got) != target:
            failures += 1
    elapsed = time.monotonic() - started
    assert failures == 0 and elapsed < 5.0, (failures, elapsed)
    report(2, "1000 match/replace round trips, 0 failures, %.2fs" % elapsed)


def test_criterion_03_der_coherence_on_goldens(deak):
    failures = 0
    nodes = 0
    for name in muddy.SHIPPED_SCRIPTS:
        tree = muddy.replay_script(name)
        for _, node in tree.nodes():
            j = node.justification
            if not isinstance(j, prooftree.ByRule):
                continue
            nodes += 1
            res = der(list(j.locales), deak.rules[j.rule_id], node.sequent)
            if res is None or res[1] != [c.sequent for c in node.children]:
                failures += 1
    assert failures == 0
    report(3, "forward instantiation matches children on %d golden nodes"
           % nodes)


def test_criterion_04_display_involution(deak):
    rng = termgen.make_rng(31)
    assert deak.display_pairs
    checked = 0
    for rid, inv_id in deak.display_pairs:
        rule, inv = deak.rules[rid], deak.rules[inv_id]
        for _ in range(200):
            sigma = termgen.instantiation(rng, rule.conclusion)
            goal = replace(rule.conclusion, sigma)
            _, prems = der([], rule, goal)
            assert len(prems) == 1
            back = der([], inv, prems[0])
            assert back is not None and back[1] == [goal], (rid, inv_id)
            checked += 1
    report(4, "display involution holds on %d randomized goals over %d pairs"
           % (checked, len(deak.display_pairs)))


SMOKE_SUITE = [
    "p |- p",
    "p /\\ q |- p",
    "p |- p \\/ q",
    "p /\\ q |- q",
    "q |- p \\/ q",
    "I |- top",
    "p |- top",
    "bot |- I",
    "bot |- p",
    "p ; q |- p /\\ q",
]


def test_criterion_05_search_suite(deak):
    worst = 0.0
    for text in SMOKE_SUITE:
        started = time.monotonic()
        tree = search(deak, [], P(deak, text), 5)
        elapsed = time.monotonic() - started
        worst = max(worst, elapsed)
        assert tree is not None, text
        assert elapsed < 10.0, (text, elapsed)
        assert tree.height() <= 5
        assert validate_tree(deak, tree) == (True, []), text
    started = time.monotonic()
    assert search(deak, [], P(deak, "p |- q"), 5) is None
    elapsed = time.monotonic() - started
    assert elapsed < 10.0
    report(5, "10-goal smoke suite derived at depth 5 (worst %.2fs); "
              "p |- q correctly absent (%.2fs)" % (worst, elapsed))


def _tactic_formula(rng, depth):
    """Random formulas over the criterion's connective alphabet."""
    if depth <= 0:
        k = rng.randrange(6)
        if k == 0:
            return Node("Top", ())
        if k == 1:
            return Node("Bot", ())
        return termgen.atom(rng)
    k = rng.randrange(8)
    if k < 3:
        cid = rng.choice(["And", "Or", "Imp"])
        return Node(cid, (_tactic_formula(rng, depth - 1),
                          _tactic_formula(rng, depth - 1)))
    if k < 5:
        cid = rng.choice(["BoxK", "DiaK"])
        return Node(cid, (termgen.agent(rng), _tactic_formula(rng, depth - 1)))
    return _tactic_formula(rng, 0)


def test_criterion_06_tactics(deak):
    rng = termgen.make_rng(66)
    for _ in range(200):
        f = _tactic_formula(rng, rng.randrange(5))
        tree = tactic_identity(deak, f)
        assert tree.sequent == prooftree.sequent_of(deak, f, f)
        assert validate_tree(deak, tree) == (True, [])
    atom_tree = tactic_atom(deak, P(deak, "{alpha}{beta} p |- p"))
    assert validate_tree(deak, atom_tree) == (True, [])
    with pytest.raises(prooftree.ProofError):
        tactic_atom(deak, P(deak, "{alpha} p |- q"))
    report(6, "identity tactic valid on 200 random formulas; atom tactic "
              "closes modal-string goals and rejects mismatches")


def test_criterion_07_muddy_instances(deak):
    for name, params in [("mc_1_1", muddy.MCParams(1, 1, frozenset({1}), 1)),
                         ("mc_2_1", muddy.MCParams(2, 1, frozenset({1}), 1)),
                         ("mc_2_2", muddy.MCParams(2, 2, frozenset({1, 2}), 1))]:
        tree = muddy.replay_script(name)
        expected, _ = muddy.mc_goal(params)
        assert tree.sequent == expected, name
    goal11, _ = muddy.mc_goal(muddy.MCParams(1, 1, frozenset({1}), 1))
    assert terms.render(deak, goal11.children[1]) == "[father] [1] D_1"
    for n in range(1, 7):
        J = frozenset(range(1, n + 1))
        d = muddy.dirty(n, J)
        count = 0
        while isinstance(d, Node) and d.conn == "And":
            count += 1
            d = d.children[1]
        assert count + 1 == n or (n == 1 and count == 0)
        v = muddy.vision(n)
        parts = []
        while isinstance(v, Node) and v.conn == "And":
            parts.append(v.children[0])
            v = v.children[1]
        parts.append(v)
        if n == 1:
            assert parts == [Node("Top", ())]
        else:
            assert len(parts) == 2 * n * (n - 1)
        f = muddy._atom("p")
        assert muddy.everyone_iter(n, 0, f) == f
    report(7, "golden scripts replay with generator-exact roots; "
              "generator properties hold for n <= 6")


def test_criterion_08_intuitionism_scan(deak):
    tree = muddy.replay_script("mc_2_2")
    path = muddy.classical_subtree_path(deak, tree)
    outside = rule_usage(tree, exclude_path=path)
    gl = outside.get("Grishin_L", 0)
    gr = outside.get("Grishin_R", 0)
    assert gl == 0 and gr == 0, (gl, gr)
    inside = rule_usage(tree.node_at(path))
    assert inside.get("Grishin_L", 0) + inside.get("Grishin_R", 0) >= 1
    report(8, "no Grishin rules outside the designated classical subtree "
              "at %s" % (list(path),))


def test_criterion_09_persistence(deak):
    for name in muddy.SHIPPED_SCRIPTS:
        data = muddy.script_bytes(name)
        session = exports.load_script(data, deak)
        assert exports.load_script(exports.save_script(session), deak) == session
        latex = exports.export_latex(deak, session.tree)
        assert latex == exports.export_latex(deak, session.tree)
        assert latex.count("{") == latex.count("}")
        lines = [l for l in latex.splitlines()
                 if any(m in l for m in ("\\AX$", "\\UI$", "\\BI$", "\\TI$"))]
        assert len(lines) == session.tree.size()
    rng = termgen.make_rng(99)
    for i in range(200):
        goal = termgen.sequent(rng, 3)
        tree = search(deak, [], goal, 2) or prooftree.open_goal(goal)
        session = ProofSession(deak, tree)
        if i % 3 == 0:
            session.locales.append(
                engine.CutFormula(termgen.formula(rng, 2)))
        back = exports.load_script(exports.save_script(session), deak)
        assert back == session
    report(9, "save/load identity on goldens and 200 random sessions; "
              "LaTeX exports byte-stable and brace-balanced")


ASSET = str(importlib.resources.files("displaycalc").joinpath(
    "assets/deak.json"))
SCRIPTS = importlib.resources.files("displaycalc").joinpath("assets/scripts")


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "displaycalc.cli", *args],
                          capture_output=True, text=True, timeout=120)


def test_criterion_10_cli_contract(deak):
    assert _cli("check", ASSET, str(SCRIPTS / "mc_2_1.proof")).returncode == 0
    assert _cli("check", ASSET, "missing.proof").returncode == 3
    res = _cli("mc", "--n", "2", "--k", "2", "--emit-goal")
    goal, _ = muddy.mc_goal(muddy.MCParams(2, 2, frozenset({1, 2}), 1))
    assert res.stdout.strip() == terms.render(deak, goal)
    res = _cli("search", ASSET, "p |- p")
    doc = json.loads(res.stdout)
    assert res.returncode == 0
    assert doc["tree"] == {"sequent": "p |- p", "rule": "Id"}
    back = exports.load_script(res.stdout.encode(), deak)
    assert validate_tree(deak, back.tree) == (True, [])
    report(10, "CLI check/mc/search behave per contract end to end")
