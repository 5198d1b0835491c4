"""A toolbox for building, checking, searching and exporting derivations in
display-style sequent calculi, shipped with the D.EAK calculus of dynamic
epistemic logic and the muddy children case study."""

from .calculus import (CalculusError, CalculusSpec, ConnectiveDef, Diagnostic,
                       NotationTemplate, RuleDef, load_calculus,
                       load_calculus_file, lookup_rule, validate_spec)
from .engine import (ActionStructure, CutFormula, Empty, MissingLocaleError,
                     applicable_rules, check_condition, der, match, replace)
from .exports import export_latex, load_script, save_script
from .prooftree import (Abbreviation, ByMacro, ByRule, Macro, Open, Prooftree,
                        apply_macro_at, apply_rule_at, edit_tree, open_goal,
                        rule_usage, search, tactic_atom, tactic_identity,
                        validate_tree)
from .session import ProofSession
from .terms import (Atom, Node, Placeholder, TermError, parse_sequent,
                    parse_term, render, sort_of, substructures)

__version__ = "0.1.0"

__all__ = [
    "Abbreviation", "ActionStructure", "Atom", "ByMacro", "ByRule",
    "CalculusError", "CalculusSpec", "ConnectiveDef", "CutFormula",
    "Diagnostic", "Empty", "Macro", "MissingLocaleError", "Node",
    "NotationTemplate", "Open", "Placeholder", "ProofSession", "Prooftree",
    "RuleDef", "TermError", "applicable_rules", "apply_macro_at",
    "apply_rule_at", "check_condition", "der", "edit_tree", "export_latex",
    "load_calculus", "load_calculus_file", "load_script", "lookup_rule",
    "match", "open_goal", "parse_sequent", "parse_term", "render", "replace",
    "rule_usage", "save_script", "search", "sort_of", "substructures",
    "tactic_atom", "tactic_identity", "validate_spec", "validate_tree",
]
