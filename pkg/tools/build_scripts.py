"""Construct the shipped golden proof scripts.

Each derivation is written down as an explicit rule program (the same
applications one would click through in a proof UI) and checked node by node
while being built; the resulting trees are validated and saved under
src/displaycalc/assets/scripts/.  Run from the repo root:

    python tools/build_scripts.py
"""

import pathlib
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from displaycalc import exports, muddy, prooftree, terms  # noqa: E402
from displaycalc.engine import CutFormula, der  # noqa: E402
from displaycalc.prooftree import ByRule, Prooftree  # noqa: E402
from displaycalc.session import ProofSession  # noqa: E402

OUT = ROOT / "src/displaycalc/assets/scripts"


class Builder:
    def __init__(self, spec, locales):
        self.spec = spec
        self.locales = list(locales)

    def run(self, goal, program):
        """Interpret a rule program rooted at `goal` into a valid tree."""
        step, rest = program[0], program[1:]
        if isinstance(step, str):
            rid, prems, locs = self._apply(step, goal)
            if not prems:
                assert not rest, "trailing steps after closing rule %s" % rid
                return Prooftree(goal, ByRule(rid, locs), ())
            assert len(prems) == 1, \
                "%s is not single-premise inside a chain" % rid
            return Prooftree(goal, ByRule(rid, locs),
                             (self.run(prems[0], rest),))
        kind = step[0]
        if kind == "branch":
            _, rid, subprograms = step
            assert not rest
            rid, prems, locs = self._apply(rid, goal)
            assert len(prems) == len(subprograms), \
                "%s yields %d premises, %d programs given" % (
                    rid, len(prems), len(subprograms))
            kids = tuple(self.run(p, sp)
                         for p, sp in zip(prems, subprograms))
            return Prooftree(goal, ByRule(rid, locs), kids)
        if kind == "cut":
            _, formula, prog_left, prog_right = step
            assert not rest
            locs = (CutFormula(formula),)
            rule = self.spec.rules["SingleCut"]
            res = der(list(locs), rule, goal)
            assert res is not None
            _, prems = res
            kids = (self.run(prems[0], prog_left),
                    self.run(prems[1], prog_right))
            return Prooftree(goal, ByRule("SingleCut", locs), kids)
        if kind == "genid":
            assert not rest
            formula = goal.children[0]
            while (isinstance(formula, terms.Node)
                   and formula.conn in self.spec.coercions):
                formula = formula.children[0]
            tree = prooftree.tactic_identity(self.spec, formula)
            assert tree.sequent == goal, (
                "genid root %s differs from goal %s"
                % (terms.render(self.spec, tree.sequent),
                   terms.render(self.spec, goal)))
            return tree
        raise AssertionError("unknown step %r" % (step,))

    def _apply(self, rid, goal):
        rule = self.spec.rules[rid]
        locs = tuple(self.locales) if rule.locale_kind else ()
        res = der(list(locs), rule, goal)
        assert res is not None, "%s does not apply to %s" % (
            rid, terms.render(self.spec, goal))
        return rid, res[1], locs


GENID = ("genid",)


def mc_1_1_program():
    return ["BoxA_R", "Swap_R", "BoxK_R", "W_L", "Disp6b", "BoxA_R",
            "W_L", "Pre_L", "Atom"]


def mc_2_1_program():
    vision_mp = [
        "BoxK_L", "Disp2b", "E_L", "Disp1a",
        ("branch", "Imp_L", [[GENID], ["Bot_L"]]),
    ]
    dirty_case = [
        "Disp2b", "E_L", "Disp2a", "Disp6a", "W_L2", "Disp2a",
        "And_L", "E_L", "W_L", "Disp2b", "E_L", "Disp2a",
        "And_L", "W_L", "Refl_ForwK",
        "And_L", "E_L", "W_L", "And_L", "W_L",
        "Disp2b", "E_L", "Disp1a",
        ("branch", "Imp_L", [[GENID], vision_mp]),
    ]
    return ["BoxA_R", "Swap_R", "BoxK_R", "Disp6b", "BoxA_R",
            "IR_add", "E_R", "Disp2a", "Pre_L", "Shift_R2",
            ("branch", "Or_L", [["Atom"], dirty_case])]


def mc_2_2_program(f_star, nn_dirty):
    # intuitionistic part: after `no`, knowing rho and pre(no) yields
    # not-not-dirty for child 1
    pre_no_mp = [
        "Disp1b", "E_L", "Disp1a", "Pre_L", "And_L", "E_L", "W_L",
        ("branch", "Imp_L", [[GENID], ["Bot_L"]]),
    ]
    prog_notnot = [
        "Imp_R", "Disp1b", "Bot_R", "A_L", "E_L", "Disp2a", "Disp6a",
        "E_L", "W_L", "BoxK_L", "Disp2b", "A_L", "E_L", "Disp1a",
        "E_L", "Disp1a",
        ("branch", "Imp_L", [[GENID], pre_no_mp]),
    ]
    # the designated classical subtree: not-not-dirty entails dirty,
    # via the Grishin rule
    prog_classical = [
        "C_R", "IL_add", "Disp3b", "Shift_L1", "Disp1a",
        ("branch", "Imp_L", [
            ["Imp_R", "Disp1b", "Bot_R", "E_L", "Grishin_L", "Disp3a",
             "IL_del", "IR_del2", "Atom"],
            ["IR_add", "W_R", "Bot_L"],
        ]),
    ]
    prog_b = ["BoxA_L", "BoxA_R", "Swap_R", "BoxK_R", "Disp6b", "BoxA_R",
              ("cut", nn_dirty, prog_notnot, prog_classical)]
    # what child 1 sees of child 2 once `father` has spoken: if 1 were
    # clean, 2 would know it is dirty
    vision_mp = [
        "BoxK_L", "Disp2b", "E_L", "Disp1a",
        ("branch", "Imp_L", [[GENID], ["Bot_L"]]),
    ]
    prog_clean_case = [
        "Disp1b", "Disp2a", "Disp6a", "A_L", "E_L", "A_L", "W_L",
        "E_L", "Disp1a", "Disp6a", "W_L2", "W_L2", "W_L2",
        "And_L", "W_L", "BoxK_L", "And_L", "W_L", "Refl_ForwK",
        "And_L", "E_L", "W_L", "And_L", "E_L", "W_L",
        "And_L", "E_L", "W_L",
        ("branch", "Imp_L", [[GENID], vision_mp]),
    ]
    prog_a = ["BoxA_R", "Swap_R", "BoxK_R", "Disp6b", "BoxA_R",
              "AnnImp_R", "Swap_R", "BoxK_R", "Disp6b", "BoxA_R",
              "IR_add", "E_L", "Disp1a", "Pre_L", "Shift_R1",
              ("branch", "Or_L", [prog_clean_case, ["Atom"]])]
    return ["BoxA_R", ("cut", f_star, prog_a, prog_b)]


def build_all():
    spec = muddy.load_deak()
    OUT.mkdir(parents=True, exist_ok=True)

    for name, program_of in [
        ("mc_1_1", lambda p: mc_1_1_program()),
        ("mc_2_1", lambda p: mc_2_1_program()),
        ("mc_2_2", _mc_2_2),
    ]:
        params = muddy.SHIPPED_SCRIPTS[name]
        goal, locales = muddy.mc_goal(params)
        builder = Builder(spec, locales)
        tree = builder.run(goal, program_of(params))
        ok, diags = prooftree.validate_tree(spec, tree)
        assert ok, (name, diags[:5])
        session = ProofSession(spec, tree, locales)
        (OUT / ("%s.proof" % name)).write_bytes(exports.save_script(session))
        print("%s: %d nodes, usage has Grishin_L=%s" % (
            name, tree.size(),
            prooftree.rule_usage(tree).get("Grishin_L", 0)))

    # generalized-identity examples recorded from the tactic
    for name, text in [("genid_or", "p \\/ q"), ("genid_boxk", "[a] p")]:
        formula = terms.parse_term(spec, text, "Formula")
        tree = prooftree.tactic_identity(spec, formula)
        ok, diags = prooftree.validate_tree(spec, tree)
        assert ok, (name, diags[:5])
        session = ProofSession(spec, tree, [])
        (OUT / ("%s.proof" % name)).write_bytes(exports.save_script(session))
        print("%s: %d nodes" % (name, tree.size()))


def _mc_2_2(params):
    rho = muddy.Node("Imp", (muddy.neg(muddy.dirty_atom(1)),
                             muddy.knows(2, muddy.dirty_atom(2))))
    f_star = muddy.after("father", muddy.knows(1, rho))
    nn_dirty = muddy.neg(muddy.neg(muddy.dirty_atom(1)))
    return mc_2_2_program(f_star, nn_dirty)


if __name__ == "__main__":
    build_all()
