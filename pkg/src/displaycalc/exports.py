"""Serialization: LaTeX proof-tree output and the lossless .proof format.

Proof scripts are UTF-8 JSON with sequents stored as ascii surface strings,
so files stay human-diffable and survive internal representation changes.
The calculus is identified by name and content hash; loading against a
different description is an error rather than a silent reinterpretation.
"""

from __future__ import annotations

import json

from . import engine, prooftree, terms
from .prooftree import ByMacro, ByRule, Macro, Open, Prooftree
from .session import ProofSession

SCRIPT_FORMAT = 1


class ExportError(Exception):
    pass


# ---------------------------------------------------------------------------
# LaTeX


_INFERENCE = {0: "\\AX", 1: "\\UI", 2: "\\BI", 3: "\\TI"}


def export_latex(spec, tree, abbreviations=None):
    """Postorder inference-macro lines, one per node, then \\DisplayProof."""
    lines = []

    def render(seq):
        t = seq
        if abbreviations:
            t = prooftree.fold_abbreviations(spec, t, abbreviations)
        return terms.render(spec, t, "latex")

    def emit(node):
        for child in node.children:
            emit(child)
        n = len(node.children)
        j = node.justification
        if isinstance(j, Open):
            lines.append("\\AX$%s$" % render(node.sequent))
            return
        if n not in _INFERENCE:
            raise ExportError("no inference macro takes %d premises" % n)
        if isinstance(j, ByRule):
            label = spec.rules[j.rule_id].latex_name
        elif isinstance(j, ByMacro):
            label = "\\mathit{%s}" % j.macro_name
        else:
            raise ExportError("cannot export %r" % (j,))
        lines.append("\\RightLabel{$%s$} %s$%s$"
                     % (label, _INFERENCE[n], render(node.sequent)))

    emit(tree)
    lines.append("\\DisplayProof")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# proof scripts


def _tree_to_doc(spec, tree, locale_table, locale_index):
    seq = terms.render(spec, tree.sequent)
    j = tree.justification
    doc = {"sequent": seq}
    if isinstance(j, Open):
        doc["rule"] = "open"
    elif isinstance(j, ByRule):
        doc["rule"] = j.rule_id
        refs = []
        for loc in j.locales:
            key = json.dumps(engine.locales_to_document(spec, [loc]),
                             sort_keys=True)
            if key not in locale_index:
                locale_index[key] = len(locale_table)
                locale_table.append(loc)
            refs.append(locale_index[key])
        if refs:
            doc["locales"] = refs
    elif isinstance(j, ByMacro):
        doc["rule"] = {"macro": j.macro_name}
        doc["expansion"] = _tree_to_doc(spec, j.expansion,
                                        locale_table, locale_index)
    else:
        raise ExportError("cannot serialize %r" % (j,))
    kids = [_tree_to_doc(spec, c, locale_table, locale_index)
            for c in tree.children]
    if kids:
        doc["children"] = kids
    return doc


def _tree_from_doc(spec, doc, locale_table, allow_placeholders=False):
    seq = terms.parse_term(spec, doc["sequent"], terms.SEQUENT,
                           allow_placeholders=allow_placeholders)
    rule = doc.get("rule", "open")
    kids = tuple(_tree_from_doc(spec, c, locale_table, allow_placeholders)
                 for c in doc.get("children", ()))
    if rule == "open":
        if kids:
            raise ExportError("open node with children")
        return Prooftree(seq, Open(), ())
    if isinstance(rule, dict) and "macro" in rule:
        expansion = _tree_from_doc(spec, doc["expansion"], locale_table,
                                   allow_placeholders)
        return Prooftree(seq, ByMacro(rule["macro"], expansion), kids)
    if rule not in spec.rules:
        raise ExportError("script references unknown rule %r" % rule)
    locs = tuple(locale_table[i] for i in doc.get("locales", ()))
    return Prooftree(seq, ByRule(rule, locs), kids)


def tree_from_doc(spec, doc, locale_table=(), allow_placeholders=False):
    """Rebuild a tree from its script-format document."""
    try:
        return _tree_from_doc(spec, doc, list(locale_table),
                              allow_placeholders)
    except (KeyError, IndexError, TypeError) as e:
        raise ExportError("malformed tree document: %s" % e)


def save_script(session):
    """Serialize a session; save then load is the identity."""
    spec = session.spec
    locale_table = list(session.locales)
    locale_index = {
        json.dumps(engine.locales_to_document(spec, [loc]), sort_keys=True): i
        for i, loc in enumerate(locale_table)}
    tree_doc = _tree_to_doc(spec, session.tree, locale_table, locale_index)
    macros = {}
    for name, macro in session.macros.items():
        macros[name] = _tree_to_doc(spec, macro.schema, locale_table,
                                    locale_index)
    doc = {
        "format": SCRIPT_FORMAT,
        "calculus": {"name": spec.name, "hash": spec.content_hash},
        "session_locales": len(session.locales),
        "locales": engine.locales_to_document(spec, locale_table),
        "abbreviations": {n: terms.render(spec, a.body)
                          for n, a in session.abbreviations.items()},
        "macros": macros,
        "tree": tree_doc,
    }
    return (json.dumps(doc, indent=1) + "\n").encode("utf-8")


def load_script(data, spec):
    """Rebuild a session from script bytes; the calculus hash must match."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except (ValueError, UnicodeDecodeError) as e:
        raise ExportError("unreadable proof script: %s" % e)
    if doc.get("format") != SCRIPT_FORMAT:
        raise ExportError("unsupported script format %r" % doc.get("format"))
    calc = doc.get("calculus", {})
    if calc.get("hash") != spec.content_hash:
        raise ExportError(
            "script was recorded against calculus %r (hash mismatch)"
            % calc.get("name"))
    locale_table = engine.locales_from_document(spec, doc.get("locales", ()))
    tree = _tree_from_doc(spec, doc["tree"], locale_table)
    n = doc.get("session_locales", 0)
    session = ProofSession(spec, tree, locale_table[:n])
    for name, src in doc.get("abbreviations", {}).items():
        session.abbreviations[name] = prooftree.Abbreviation(
            name, terms.parse_term(spec, src, terms.FORMULA,
                                   allow_placeholders=False))
    for name, tdoc in doc.get("macros", {}).items():
        schema = _tree_from_doc(spec, tdoc, locale_table,
                                allow_placeholders=True)
        session.macros[name] = Macro(name, schema)
    return session
