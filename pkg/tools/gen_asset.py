"""Regenerate assets/deak.json.

The description file is a static asset; this script exists so the connective
table and the 100+ rule entries stay reviewable as code.  Run from the repo
root:  python tools/gen_asset.py
"""

import json
import pathlib

OUT = pathlib.Path(__file__).resolve().parent.parent / "src/displaycalc/assets/deak.json"


def conn(sort, args, ascii_t, latex_t, prec):
    return {"sort": sort, "type": args, "ascii": ascii_t,
            "latex": latex_t, "precedence": prec}


CALC_STRUCTURE = {
    "Sequent": conn("Sequent", ["Structure", "Structure"], "_ |- _",
                    "_ \\ {\\textcolor{magenta}{\\boldsymbol{\\vdash}}}\\ _",
                    [311, 311, 310]),
    # silent coercions (never printed; the parser inserts them)
    "Fa": conn("Formula", ["Atprop"], "_", "_", [0, 0]),
    "Fs": conn("Structure", ["Formula"], "_", "_", [0, 0]),
    # formula tier
    "Top": conn("Formula", [], "top", "\\top", [430]),
    "Bot": conn("Formula", [], "bot", "\\bot", [430]),
    "And": conn("Formula", ["Formula", "Formula"], "_ /\\ _", "_ \\wedge _",
                [391, 390, 390]),
    "Or": conn("Formula", ["Formula", "Formula"], "_ \\/ _", "_ \\vee _",
               [381, 380, 380]),
    "Imp": conn("Formula", ["Formula", "Formula"], "_ -> _", "_ \\rightarrow _",
                [361, 360, 360]),
    "BoxK": conn("Formula", ["Agent", "Formula"], "[_] _",
                 "[\\texttt{_}]\\, _", [1000, 410, 410]),
    "DiaK": conn("Formula", ["Agent", "Formula"], "<_> _",
                 "\\langle\\texttt{_}\\rangle\\, _", [1000, 410, 410]),
    "BoxKb": conn("Formula", ["Agent", "Formula"], "[_]' _",
                  "[\\texttt{_}]'\\, _", [1000, 410, 410]),
    "DiaKb": conn("Formula", ["Agent", "Formula"], "<_>' _",
                  "\\langle\\texttt{_}\\rangle'\\, _", [1000, 410, 410]),
    "BoxA": conn("Formula", ["Action", "Formula"], "[_] _",
                 "[\\mathit{_}]\\, _", [1000, 410, 410]),
    "DiaA": conn("Formula", ["Action", "Formula"], "<_> _",
                 "\\langle\\mathit{_}\\rangle\\, _", [1000, 410, 410]),
    "BoxAb": conn("Formula", ["Action", "Formula"], "[_]' _",
                  "[\\mathit{_}]'\\, _", [1000, 410, 410]),
    "DiaAb": conn("Formula", ["Action", "Formula"], "<_>' _",
                  "\\langle\\mathit{_}\\rangle'\\, _", [1000, 410, 410]),
    "One": conn("Formula", ["Action"], "One _", "1\\sb{\\mathit{_}}",
                [1000, 420]),
    # structure tier
    "I": conn("Structure", [], "I", "\\textrm{I}", [430]),
    "Semi": conn("Structure", ["Structure", "Structure"], "_ ; _",
                 "_\\,;\\, _", [321, 320, 320]),
    "Gt": conn("Structure", ["Structure", "Structure"], "_ > _", "_ > _",
               [331, 331, 330]),
    "Lt": conn("Structure", ["Structure", "Structure"], "_ < _", "_ < _",
               [331, 331, 330]),
    "SK": conn("Structure", ["Agent", "Structure"], "{_} _",
               "\\{\\texttt{_}\\}\\, _", [1000, 340, 340]),
    "SKb": conn("Structure", ["Agent", "Structure"], "{_}' _",
                "\\{\\texttt{_}\\}'\\, _", [1000, 340, 340]),
    "SA": conn("Structure", ["Action", "Structure"], "{_} _",
               "\\{\\mathit{_}\\}\\, _", [1000, 340, 340]),
    "SAb": conn("Structure", ["Action", "Structure"], "{_}' _",
                "\\{\\mathit{_}\\}'\\, _", [1000, 340, 340]),
    "Phi": conn("Structure", ["Action"], "Phi _", "\\Phi\\sb{\\mathit{_}}",
                [1000, 350]),
}

# (id, class, patterns, extras) — conclusion first, premises after; an empty
# premise string means a zero-premise rule (mirrors the shipped Atom entry).
RULES = [
    # axioms / closers
    ("Id", "structural", ["F?A |- F?A"], {"condition": "atprop"}),
    ("Atom", "structural", ["?X |- ?Y", ""], {"condition": "atom"}),
    ("Top_R", "operational", ["I |- top"], {"latex": "\\top_R"}),
    ("Bot_L", "operational", ["bot |- I"], {"latex": "\\bot_L"}),
    ("TopW_R", "operational", ["?X |- top"], {"latex": "\\top_R'"}),
    ("BotW_L", "operational", ["bot |- ?X"], {"latex": "\\bot_L'"}),
    ("Phi_Id", "structural", ["Phi alpha |- One alpha"], {"latex": "\\Phi 1"}),
    ("ActTop_R", "structural", ["?X |- {alpha} top"], {"latex": "\\{\\}\\top"}),
    ("ActBot_L", "structural", ["{alpha} bot |- ?X"], {"latex": "\\{\\}\\bot"}),
    # operational rules
    ("Top_L", "operational", ["top |- ?X", "I |- ?X"], {"latex": "\\top_L"}),
    ("Bot_R", "operational", ["?X |- bot", "?X |- I"], {"latex": "\\bot_R"}),
    ("And_L", "operational", ["F?A /\\ F?B |- ?X", "F?A ; F?B |- ?X"],
     {"latex": "\\wedge_L"}),
    ("And_R", "operational",
     ["?X ; ?Y |- F?A /\\ F?B", "?X |- F?A", "?Y |- F?B"],
     {"latex": "\\wedge_R"}),
    ("Or_L", "operational",
     ["F?A \\/ F?B |- ?X ; ?Y", "F?A |- ?X", "F?B |- ?Y"],
     {"latex": "\\vee_L"}),
    ("Or_R", "operational", ["?X |- F?A \\/ F?B", "?X |- F?A ; F?B"],
     {"latex": "\\vee_R"}),
    ("Imp_L", "operational",
     ["F?A -> F?B |- ?X > ?Y", "?X |- F?A", "F?B |- ?Y"],
     {"latex": "\\rightarrow_L"}),
    ("Imp_R", "operational", ["?X |- F?A -> F?B", "?X |- F?A > F?B"],
     {"latex": "\\rightarrow_R"}),
    ("BoxK_L", "operational", ["[a] F?A |- {a} ?X", "F?A |- ?X"],
     {"latex": "[\\texttt{a}]_L"}),
    ("BoxK_R", "operational", ["?X |- [a] F?A", "?X |- {a} F?A"],
     {"latex": "[\\texttt{a}]_R"}),
    ("DiaK_L", "operational", ["<a> F?A |- ?X", "{a} F?A |- ?X"],
     {"latex": "\\langle\\texttt{a}\\rangle_L"}),
    ("DiaK_R", "operational", ["{a} ?X |- <a> F?A", "?X |- F?A"],
     {"latex": "\\langle\\texttt{a}\\rangle_R"}),
    ("BoxKb_L", "operational", ["[a]' F?A |- {a}' ?X", "F?A |- ?X"],
     {"latex": "[\\texttt{a}]'_L"}),
    ("BoxKb_R", "operational", ["?X |- [a]' F?A", "?X |- {a}' F?A"],
     {"latex": "[\\texttt{a}]'_R"}),
    ("DiaKb_L", "operational", ["<a>' F?A |- ?X", "{a}' F?A |- ?X"],
     {"latex": "\\langle\\texttt{a}\\rangle'_L"}),
    ("DiaKb_R", "operational", ["{a}' ?X |- <a>' F?A", "?X |- F?A"],
     {"latex": "\\langle\\texttt{a}\\rangle'_R"}),
    ("BoxA_L", "operational", ["[alpha] F?A |- {alpha} ?X", "F?A |- ?X"],
     {"latex": "[\\alpha]_L"}),
    ("BoxA_R", "operational",
     ["?X |- [alpha] F?A", "Phi alpha ; ?X |- {alpha} F?A"],
     {"latex": "[\\alpha]_R"}),
    ("DiaA_L", "operational",
     ["<alpha> F?A |- ?X", "Phi alpha ; {alpha} F?A |- ?X"],
     {"latex": "\\langle\\alpha\\rangle_L"}),
    ("DiaA_R", "operational", ["{alpha} ?X |- <alpha> F?A", "?X |- F?A"],
     {"latex": "\\langle\\alpha\\rangle_R"}),
    ("BoxAb_L", "operational", ["[alpha]' F?A |- {alpha}' ?X", "F?A |- ?X"],
     {"latex": "[\\alpha]'_L"}),
    ("BoxAb_R", "operational", ["?X |- [alpha]' F?A", "?X |- {alpha}' F?A"],
     {"latex": "[\\alpha]'_R"}),
    ("DiaAb_L", "operational", ["<alpha>' F?A |- ?X", "{alpha}' F?A |- ?X"],
     {"latex": "\\langle\\alpha\\rangle'_L"}),
    ("DiaAb_R", "operational", ["{alpha}' ?X |- <alpha>' F?A", "?X |- F?A"],
     {"latex": "\\langle\\alpha\\rangle'_R"}),
    ("One_L", "operational", ["One alpha |- ?X", "Phi alpha |- ?X"],
     {"latex": "1_L"}),
    ("One_R", "operational", ["?X |- One alpha", "?X |- Phi alpha"],
     {"latex": "1_R"}),
    # weakening / exchange
    ("W_L", "structural", ["?X ; ?Y |- ?Z", "?X |- ?Z"], {"latex": "W_L"}),
    ("W_L2", "structural", ["?X ; ?Y |- ?Z", "?Y |- ?Z"], {"latex": "W_L'"}),
    ("W_R", "structural", ["?X |- ?Y ; ?Z", "?X |- ?Y"], {"latex": "W_R"}),
    ("W_R2", "structural", ["?X |- ?Y ; ?Z", "?X |- ?Z"], {"latex": "W_R'"}),
    ("E_L", "structural", ["?X ; ?Y |- ?Z", "?Y ; ?X |- ?Z"], {"latex": "E_L"}),
    ("E_R", "structural", ["?X |- ?Y ; ?Z", "?X |- ?Z ; ?Y"], {"latex": "E_R"}),
    # display rules (registered bidirectional pairs)
    ("Disp1a", "display", ["?X ; ?Y |- ?Z", "?Y |- ?X > ?Z"],
     {"latex": "(;,>)", "inverse": "Disp1b"}),
    ("Disp1b", "display", ["?Y |- ?X > ?Z", "?X ; ?Y |- ?Z"],
     {"latex": "(;,>)", "inverse": "Disp1a"}),
    ("Disp2a", "display", ["?X ; ?Y |- ?Z", "?X |- ?Z < ?Y"],
     {"latex": "(;,<)", "inverse": "Disp2b"}),
    ("Disp2b", "display", ["?X |- ?Z < ?Y", "?X ; ?Y |- ?Z"],
     {"latex": "(;,<)", "inverse": "Disp2a"}),
    ("Disp3a", "display", ["?X > ?Z |- ?Y", "?Z |- ?X ; ?Y"],
     {"latex": "(>,;)", "inverse": "Disp3b"}),
    ("Disp3b", "display", ["?Z |- ?X ; ?Y", "?X > ?Z |- ?Y"],
     {"latex": "(>,;)", "inverse": "Disp3a"}),
    ("Disp4a", "display", ["?Z < ?Y |- ?X", "?Z |- ?X ; ?Y"],
     {"latex": "(<,;)", "inverse": "Disp4b"}),
    ("Disp4b", "display", ["?Z |- ?X ; ?Y", "?Z < ?Y |- ?X"],
     {"latex": "(<,;)", "inverse": "Disp4a"}),
    ("Disp5a", "display", ["{a} ?X |- ?Y", "?X |- {a}' ?Y"],
     {"latex": "(\\{a\\},\\{a\\}')", "inverse": "Disp5b"}),
    ("Disp5b", "display", ["?X |- {a}' ?Y", "{a} ?X |- ?Y"],
     {"latex": "(\\{a\\},\\{a\\}')", "inverse": "Disp5a"}),
    ("Disp6a", "display", ["{a}' ?X |- ?Y", "?X |- {a} ?Y"],
     {"latex": "(\\{a\\}',\\{a\\})", "inverse": "Disp6b"}),
    ("Disp6b", "display", ["?X |- {a} ?Y", "{a}' ?X |- ?Y"],
     {"latex": "(\\{a\\}',\\{a\\})", "inverse": "Disp6a"}),
    ("Disp7a", "display", ["{alpha} ?X |- ?Y", "?X |- {alpha}' ?Y"],
     {"latex": "(\\{\\alpha\\},\\{\\alpha\\}')", "inverse": "Disp7b"}),
    ("Disp7b", "display", ["?X |- {alpha}' ?Y", "{alpha} ?X |- ?Y"],
     {"latex": "(\\{\\alpha\\},\\{\\alpha\\}')", "inverse": "Disp7a"}),
    ("Disp8a", "display", ["{alpha}' ?X |- ?Y", "?X |- {alpha} ?Y"],
     {"latex": "(\\{\\alpha\\}',\\{\\alpha\\})", "inverse": "Disp8b"}),
    ("Disp8b", "display", ["?X |- {alpha} ?Y", "{alpha}' ?X |- ?Y"],
     {"latex": "(\\{\\alpha\\}',\\{\\alpha\\})", "inverse": "Disp8a"}),
    # neutral structure
    ("IL_add", "structural", ["?X |- ?Y", "I ; ?X |- ?Y"], {"latex": "I_L"}),
    ("IL_del", "structural", ["I ; ?X |- ?Y", "?X |- ?Y"], {"latex": "I_L"}),
    ("IL_add2", "structural", ["?X |- ?Y", "?X ; I |- ?Y"], {"latex": "I_L'"}),
    ("IL_del2", "structural", ["?X ; I |- ?Y", "?X |- ?Y"], {"latex": "I_L'"}),
    ("IR_add", "structural", ["?X |- ?Y", "?X |- I ; ?Y"], {"latex": "I_R"}),
    ("IR_del", "structural", ["?X |- I ; ?Y", "?X |- ?Y"], {"latex": "I_R"}),
    ("IR_add2", "structural", ["?X |- ?Y", "?X |- ?Y ; I"], {"latex": "I_R'"}),
    ("IR_del2", "structural", ["?X |- ?Y ; I", "?X |- ?Y"], {"latex": "I_R'"}),
    ("IW_L", "structural", ["?X |- ?Y", "I |- ?Y"], {"latex": "IW_L"}),
    ("IW_R", "structural", ["?X |- ?Y", "?X |- I"], {"latex": "IW_R"}),
    ("ITop_L", "structural", ["I |- ?X", "top |- ?X"], {"latex": "I\\top"}),
    ("IBot_R", "structural", ["?X |- I", "?X |- bot"], {"latex": "I\\bot"}),
    # associativity / contraction
    ("A_L", "structural", ["?X ; (?Y ; ?Z) |- ?W", "(?X ; ?Y) ; ?Z |- ?W"],
     {"latex": "A_L"}),
    ("A_L2", "structural", ["(?X ; ?Y) ; ?Z |- ?W", "?X ; (?Y ; ?Z) |- ?W"],
     {"latex": "A_L"}),
    ("A_R", "structural", ["?W |- ?X ; (?Y ; ?Z)", "?W |- (?X ; ?Y) ; ?Z"],
     {"latex": "A_R"}),
    ("A_R2", "structural", ["?W |- (?X ; ?Y) ; ?Z", "?W |- ?X ; (?Y ; ?Z)"],
     {"latex": "A_R"}),
    ("C_L", "structural", ["?X |- ?Y", "?X ; ?X |- ?Y"], {"latex": "C_L"}),
    ("C_R", "structural", ["?X |- ?Y", "?X |- ?Y ; ?Y"], {"latex": "C_R"}),
    # residuation shuffles (the intuitionistically valid directions)
    ("Shift_L1", "structural",
     ["?X > (?Y ; ?Z) |- ?W", "(?X > ?Y) ; ?Z |- ?W"], {"latex": "Sh_L"}),
    ("Shift_L2", "structural",
     ["(?X ; ?Y) < ?Z |- ?W", "?X ; (?Y < ?Z) |- ?W"], {"latex": "Sh_L'"}),
    ("Shift_R1", "structural",
     ["?W |- ?X > (?Y ; ?Z)", "?W |- (?X > ?Y) ; ?Z"], {"latex": "Sh_R"}),
    ("Shift_R2", "structural",
     ["?W |- (?X ; ?Y) < ?Z", "?W |- ?X ; (?Y < ?Z)"], {"latex": "Sh_R'"}),
    # modal structural rules
    # no agent-side balance rule: with the comma-free reading the left
    # occurrence is a diamond and the right a box, which only partial
    # functions reconcile; agent relations are not functions, actions are
    ("K_alpha", "structural", ["{alpha} ?X |- {alpha} ?Y", "?X |- ?Y"],
     {"latex": "K_\\alpha"}),
    ("K_alpha_b", "structural", ["{alpha}' ?X |- {alpha}' ?Y", "?X |- ?Y"],
     {"latex": "K_\\alpha'"}),
    ("Nec_a", "structural", ["I |- {a} ?Y", "I |- ?Y"], {"latex": "nec"}),
    ("Nec_a_b", "structural", ["I |- {a}' ?Y", "I |- ?Y"], {"latex": "nec'"}),
    ("Nec_alpha", "structural", ["I |- {alpha} ?Y", "I |- ?Y"],
     {"latex": "nec_\\alpha"}),
    ("Nec_alpha_b", "structural", ["I |- {alpha}' ?Y", "I |- ?Y"],
     {"latex": "nec_\\alpha'"}),
    # reflexivity of the knowledge relation ([a]p -> p as structural rules)
    ("Refl_ForwK", "structural", ["[a] F?A |- ?X", "F?A |- ?X"],
     {"latex": "refl"}),
    ("Refl_ForwK_dia", "structural", ["?X |- <a> F?A", "?X |- F?A"],
     {"latex": "refl\\Diamond"}),
    ("Refl_BackK", "structural", ["[a]' F?A |- ?X", "F?A |- ?X"],
     {"latex": "refl'"}),
    ("Refl_BackK_dia", "structural", ["?X |- <a>' F?A", "?X |- F?A"],
     {"latex": "refl'\\Diamond"}),
    # action reduction rules (deterministic, fact-preserving actions)
    ("AnnImp_R", "structural",
     ["?X |- {alpha} (F?A -> F?B)", "F?A ; ?X |- {alpha} F?B"],
     {"latex": "red\\rightarrow", "condition": "literal"}),
    ("ActAnd_R", "structural",
     ["?X |- {alpha} (F?A /\\ F?B)", "?X |- {alpha} F?A", "?X |- {alpha} F?B"],
     {"latex": "red\\wedge"}),
    ("ActOr_R", "structural",
     ["?X |- {alpha} (F?A \\/ F?B)", "?X |- {alpha} F?A ; {alpha} F?B"],
     {"latex": "red\\vee"}),
    # precondition rules and knowledge-action interaction (locale driven)
    ("Pre_L", "structural", ["Phi alpha |- ?X", "F?pre |- ?X"],
     {"latex": "pre_L", "locale": "ActionStructure"}),
    ("Pre_R", "structural", ["?X |- Phi alpha", "?X |- F?pre"],
     {"latex": "pre_R", "locale": "ActionStructure"}),
    ("Swap_R", "structural",
     ["?X |- {alpha} [a] F?A", "?X |- [a] [beta] F?A"],
     {"latex": "swap_R", "locale": "ActionStructure"}),
    ("Swap_L", "structural",
     ["{alpha} <a> F?A |- ?X", "<a> <beta> F?A |- ?X"],
     {"latex": "swap_L", "locale": "ActionStructure"}),
    ("Swap_Rb", "structural",
     ["?X |- {alpha} [a]' F?A", "?X |- [a]' [beta] F?A"],
     {"latex": "swap_R'", "locale": "ActionStructure", "relation": "preimage"}),
    ("Swap_Lb", "structural",
     ["{alpha} <a>' F?A |- ?X", "<a>' <beta> F?A |- ?X"],
     {"latex": "swap_L'", "locale": "ActionStructure", "relation": "preimage"}),
    # the Grishin rules: the only non-intuitionistic principles in the set
    ("Grishin_L", "structural",
     ["(?X > ?Y) ; ?Z |- ?W", "?X > (?Y ; ?Z) |- ?W"],
     {"latex": "Gri_L"}),
    ("Grishin_R", "structural",
     ["?W |- ?X ; (?Y < ?Z)", "?W |- (?X ; ?Y) < ?Z"],
     {"latex": "Gri_R"}),
    # cut
    ("SingleCut", "cut", ["?X |- ?Y", "?X |- F?f", "F?f |- ?Y"],
     {"ascii": "Cut", "latex": "Cut", "locale": "CutFormula f"}),
]


def main():
    meta = {}
    patterns = {}
    for rid, klass, pats, extras in RULES:
        entry = {"ascii": extras.get("ascii", rid),
                 "latex": extras.get("latex", rid),
                 "class": klass}
        for key in ("condition", "locale", "inverse", "relation"):
            if key in extras:
                entry[key] = extras[key]
        meta[rid] = entry
        patterns[rid] = pats
    doc = {
        "name": "D.EAK",
        "placeholders": {"generic": "?", "formula_only": "F?"},
        "sorts": ["Atprop", "Formula", "Structure", "Sequent", "Agent", "Action"],
        "labels": {
            "Agent": ["a", "b", "c", "1", "2", "3", "4", "5", "6", "7", "8"],
            "Action": ["alpha", "beta", "gamma", "father", "no"],
        },
        "coercions": {"atprop_to_formula": "Fa", "formula_to_structure": "Fs"},
        "negation": {"ascii": "neg", "imp": "Imp", "bot": "Bot", "precedence": 410},
        "calc_structure": CALC_STRUCTURE,
        "calc_structure_rules": meta,
        "rules": patterns,
    }
    OUT.write_text(json.dumps(doc, indent=1) + "\n", encoding="utf-8")
    print("wrote %s (%d rules)" % (OUT, len(RULES)))


if __name__ == "__main__":
    main()
