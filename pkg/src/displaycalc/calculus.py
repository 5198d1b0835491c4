"""Loading, validating and indexing calculus description files.

A calculus description is a JSON document with three principal blocks:
`calc_structure` declares the connectives (result sort, argument sorts and
notation templates with precedences), `calc_structure_rules` carries rule
metadata (display names, side conditions, locale requirements, rule class),
and `rules` holds the patterns themselves, conclusion first.  The loaded
`CalculusSpec` is immutable and safe to share between threads.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field

from . import terms
from .terms import AGENT, ACTION, SEQUENT, TermError

# condition ids implemented by the rule engine
KNOWN_CONDITIONS = ("atom", "atprop", "literal")

# locale requirements implemented by the rule engine, with the placeholder
# names each one supplies to rule premises
KNOWN_LOCALES = {
    "CutFormula f": {("ph", "f")},
    "ActionStructure": {("ph", "pre"), ("label", "beta")},
}

RULE_CLASSES = ("operational", "display", "structural", "cut")


class CalculusError(Exception):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("; ".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Diagnostic:
    severity: str  # "error" | "warning"
    path: str      # slash-separated path into the document
    message: str

    def __str__(self):
        return "%s at %s: %s" % (self.severity, self.path, self.message)


@dataclass(frozen=True)
class NotationTemplate:
    template: str
    precedence: tuple


@dataclass(frozen=True)
class ConnectiveDef:
    id: str
    result_sort: str
    argument_sorts: tuple
    notations: tuple  # ((surface, NotationTemplate), ...)

    def notation(self, surface):
        for name, tmpl in self.notations:
            if name == surface:
                return tmpl
        raise TermError("connective %r has no %r notation" % (self.id, surface))

    @property
    def ascii(self):
        return self.notation("ascii")

    @property
    def arity(self):
        return len(self.argument_sorts)


@dataclass(frozen=True)
class RuleDef:
    id: str
    conclusion: object            # Term pattern
    premises: tuple               # Term patterns
    klass: str                    # operational | display | structural | cut
    condition: str | None = None
    locale_kind: str | None = None
    inverse: str | None = None    # registered inverse for display rules
    ascii_name: str = ""
    latex_name: str = ""
    relation_mode: str = "image"  # how `beta` ranges over the agent relation
    spec: object = field(default=None, compare=False, repr=False)
    premise_vars: tuple = field(default=(), compare=False, repr=False)


def _dup_guard(pairs):
    seen = {}
    for key, value in pairs:
        if key in seen:
            raise ValueError("duplicate key %r" % key)
        seen[key] = value
    return seen


class CalculusSpec:
    """Parsed calculus description; single source of truth for the engine."""

    def __init__(self, document):
        self.document = document
        self.name = document.get("name", "")
        ph = document.get("placeholders", {})
        self.placeholder_generic = ph.get("generic", "?")
        self.placeholder_formula = ph.get("formula_only", "F?")
        self.sorts = tuple(document.get("sorts", ()))
        labels = document.get("labels", {})
        self.labels = {
            AGENT: tuple(labels.get(AGENT, ())),
            ACTION: tuple(labels.get(ACTION, ())),
        }
        co = document.get("coercions", {})
        self.coercion_atprop = co.get("atprop_to_formula", "Fa")
        self.coercion_formula = co.get("formula_to_structure", "Fs")
        self.coercions = {self.coercion_atprop, self.coercion_formula}
        self.negation = document.get("negation")
        self.connectives = {}
        self.rules = {}
        self.display_pairs = ()
        self.syntax = None

    # -- equality and hashing over semantic content --------------------------

    def __eq__(self, other):
        return (isinstance(other, CalculusSpec)
                and self.name == other.name
                and self.labels == other.labels
                and self.sorts == other.sorts
                and self.connectives == other.connectives
                and self.rules == other.rules)

    def __ne__(self, other):
        return not self.__eq__(other)

    @property
    def content_hash(self):
        data = json.dumps(self.document, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(data.encode("utf-8")).hexdigest()

    def to_document(self):
        return self.document

    def sequent_connective(self):
        for cid, cdef in self.connectives.items():
            if cdef.result_sort == SEQUENT:
                return cid
        raise TermError("calculus declares no sequent connective")


def _build(document):
    """Construct a spec from a parsed document, collecting diagnostics."""
    diags = []
    spec = CalculusSpec(document)

    structure = document.get("calc_structure", {})
    for cid, entry in structure.items():
        path = "calc_structure/" + cid
        args = tuple(entry.get("type", ()))
        result = entry.get("sort")
        if result is None:
            diags.append(Diagnostic("error", path, "missing result sort"))
            continue
        prec = entry.get("precedence", [0] * (len(args) + 1))
        notations = []
        for surface in ("ascii", "latex"):
            tmpl = entry.get(surface)
            if tmpl is None:
                if surface == "ascii":
                    diags.append(Diagnostic("error", path, "missing ascii template"))
                    tmpl = "_"
                else:
                    tmpl = entry["ascii"]
            notations.append((surface, NotationTemplate(tmpl, tuple(prec))))
        spec.connectives[cid] = ConnectiveDef(cid, result, args, tuple(notations))

    # notation invariants
    for cid, cdef in spec.connectives.items():
        path = "calc_structure/" + cid
        for surface, tmpl in cdef.notations:
            holes = tmpl.template.count("_")
            if holes != cdef.arity:
                diags.append(Diagnostic(
                    "error", path + "/" + surface,
                    "template %r has %d holes for arity %d"
                    % (tmpl.template, holes, cdef.arity)))
            if len(tmpl.precedence) != cdef.arity + 1:
                diags.append(Diagnostic(
                    "error", path + "/precedence",
                    "expected %d entries, found %d"
                    % (cdef.arity + 1, len(tmpl.precedence))))
            if any(p < 0 for p in tmpl.precedence):
                diags.append(Diagnostic("error", path + "/precedence",
                                        "negative precedence"))

    overlap = set(spec.labels[AGENT]) & set(spec.labels[ACTION])
    if overlap:
        diags.append(Diagnostic("error", "labels",
                                "labels declared as both agent and action: %s"
                                % ", ".join(sorted(overlap))))

    if any(d.severity == "error" for d in diags):
        return spec, diags

    spec.syntax = terms.SurfaceSyntax(spec)

    meta = document.get("calc_structure_rules", {})
    patterns = document.get("rules", {})
    for rid in patterns:
        if rid not in meta:
            diags.append(Diagnostic("error", "rules/" + rid,
                                    "no calc_structure_rules entry"))
    for rid, m in meta.items():
        path = "calc_structure_rules/" + rid
        pats = patterns.get(rid)
        if pats is None:
            diags.append(Diagnostic("error", path, "no pattern list in rules"))
            continue
        if not pats:
            diags.append(Diagnostic("error", "rules/" + rid, "empty pattern list"))
            continue
        try:
            conclusion = spec.syntax.parse(pats[0], SEQUENT, allow_placeholders=True)
            premises = tuple(
                spec.syntax.parse(p, SEQUENT, allow_placeholders=True)
                for p in pats[1:] if p != "")
        except TermError as e:
            diags.append(Diagnostic("error", "rules/" + rid, str(e)))
            continue
        condition = m.get("condition")
        locale = m.get("locale")
        klass = m.get("class", "structural")
        spec.rules[rid] = RuleDef(
            id=rid, conclusion=conclusion, premises=premises, klass=klass,
            condition=condition, locale_kind=locale,
            inverse=m.get("inverse"),
            ascii_name=m.get("ascii", rid), latex_name=m.get("latex", rid),
            relation_mode=m.get("relation", "image"),
            spec=spec,
            premise_vars=tuple(frozenset(pattern_variables(p)) for p in premises))

    pairs = []
    for rid, rule in spec.rules.items():
        if rule.klass == "display" and rule.inverse is not None and rid < rule.inverse:
            pairs.append((rid, rule.inverse))
    spec.display_pairs = tuple(pairs)
    return spec, diags


def pattern_variables(term):
    """Placeholders and schematic agent/action labels of a pattern."""
    out = set()
    for _, t in terms.walk(term):
        if isinstance(t, terms.Placeholder):
            out.add(("ph", t.name))
        elif isinstance(t, terms.Atom) and t.sort in (AGENT, ACTION):
            out.add(("label", t.name))
    return out


def validate_spec(spec):
    """Re-check every CalculusSpec/RuleDef invariant; empty list iff all hold."""
    diags = []
    for cid, cdef in spec.connectives.items():
        path = "calc_structure/" + cid
        for surface, tmpl in cdef.notations:
            if tmpl.template.count("_") != cdef.arity:
                diags.append(Diagnostic("error", path + "/" + surface,
                                        "hole count differs from arity"))
            if len(tmpl.precedence) != cdef.arity + 1:
                diags.append(Diagnostic("error", path + "/precedence",
                                        "expected arity+1 precedences"))
            if any(p < 0 for p in tmpl.precedence):
                diags.append(Diagnostic("error", path + "/precedence",
                                        "negative precedence"))
    for rid, rule in spec.rules.items():
        path = "rules/" + rid
        if rule.klass not in RULE_CLASSES:
            diags.append(Diagnostic("error", path, "unknown rule class %r" % rule.klass))
        if rule.condition is not None and rule.condition not in KNOWN_CONDITIONS:
            diags.append(Diagnostic("error", path,
                                    "unknown condition id %r" % rule.condition))
        if rule.locale_kind is not None and rule.locale_kind not in KNOWN_LOCALES:
            diags.append(Diagnostic("error", path,
                                    "unknown locale kind %r" % rule.locale_kind))
        supplied = KNOWN_LOCALES.get(rule.locale_kind, set())
        bound = pattern_variables(rule.conclusion) | supplied
        for i, prem in enumerate(rule.premises):
            free = pattern_variables(prem) - bound
            if free:
                names = ", ".join(sorted(n for _, n in free))
                diags.append(Diagnostic(
                    "error", "%s/premise[%d]" % (path, i),
                    "unbound premise placeholder: %s" % names))
        if rule.klass == "display":
            if len(rule.premises) != 1:
                diags.append(Diagnostic("error", path,
                                        "display rule must have exactly one premise"))
            inv = spec.rules.get(rule.inverse) if rule.inverse else None
            if inv is None:
                diags.append(Diagnostic("error", path,
                                        "display rule lacks a registered inverse"))
            elif inv.inverse != rid:
                diags.append(Diagnostic("error", path,
                                        "inverse registration is not symmetric"))
        for pattern in (rule.conclusion,) + rule.premises:
            for _, t in terms.walk(pattern):
                if isinstance(t, terms.Node) and t.conn not in spec.connectives:
                    diags.append(Diagnostic(
                        "error", path, "undeclared connective %r" % t.conn))
    return diags


def load_calculus(text):
    """Parse and validate a calculus description document.

    Pure and deterministic: identical text yields an identical spec.  Raises
    `CalculusError` carrying the full diagnostic list when the document is
    malformed or violates an invariant.
    """
    try:
        document = json.loads(text, object_pairs_hook=_dup_guard)
    except ValueError as e:
        raise CalculusError([Diagnostic("error", "/", "parse error: %s" % e)])
    spec, diags = _build(document)
    if not any(d.severity == "error" for d in diags):
        diags = diags + validate_spec(spec)
    errors = [d for d in diags if d.severity == "error"]
    if errors:
        raise CalculusError(errors)
    return spec


def load_calculus_file(path):
    with open(path, "r", encoding="utf-8") as fh:
        return load_calculus(fh.read())


def lookup_rule(spec, rule_id):
    """Constant-time rule lookup by id."""
    try:
        return spec.rules[rule_id]
    except KeyError:
        raise CalculusError([Diagnostic("error", "rules/" + rule_id,
                                        "unknown rule id %r" % rule_id)])
