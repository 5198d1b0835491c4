"""Pattern matching, substitution, side conditions and backward inference.

`match` and `replace` are the two halves of rule application: matching a rule
conclusion against a goal yields the unique substitution (structures are
trees, so there is never more than one), and replacing through the premise
patterns yields the subgoals.  `der` strings these together and adds the
locale machinery: cut formulas and action structures supply the bindings a
premise needs but the conclusion cannot determine.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import terms
from .terms import ACTION, AGENT, ATPROP, STRUCTURE, Atom, Node, Placeholder

# substitution keys: placeholder names use the bare name, schematic
# agent/action labels are namespaced with '@' so that rules may use both
_LABEL = "@"


class EngineError(Exception):
    pass


class MissingLocaleError(EngineError):
    """The rule matches but its locale requirement is unsatisfied.

    Kept distinct from a plain mismatch so interactive clients can prompt the
    user (e.g. for a cut formula) instead of reporting failure.
    """

    def __init__(self, rule_id, locale_kind):
        self.rule_id = rule_id
        self.locale_kind = locale_kind
        super().__init__("rule %s needs locale %r" % (rule_id, locale_kind))


@dataclass(frozen=True)
class CutFormula:
    formula: object  # Formula-sorted, placeholder-free term


@dataclass(frozen=True)
class ActionStructure:
    """Actions with agent-labelled relations and per-action preconditions.

    `relation` maps (action, agent) pairs to tuples of related actions; pairs
    that are absent default to the identity relation, which is all the public
    announcement actions of the muddy children setting need.
    """

    name: str
    actions: tuple
    pre: tuple       # ((action, formula term), ...)
    relation: tuple = ()  # (((action, agent), (action, ...)), ...)

    def precondition(self, action):
        for act, f in self.pre:
            if act == action:
                return f
        raise EngineError("action %r has no precondition" % action)

    def related(self, action, agent):
        for (act, ag), outs in self.relation:
            if act == action and ag == agent:
                return tuple(outs)
        return (action,)

    def related_to(self, action, agent):
        """Preimage of `action` under the agent relation."""
        return tuple(c for c in self.actions if action in self.related(c, agent))


@dataclass(frozen=True)
class Empty:
    pass


def match(pattern, target, bindings=None):
    """The unique substitution sending `pattern` to `target`, or None.

    Formula-only placeholders bind Formula-sorted terms (unwrapping the
    formula-to-structure coercion); generic placeholders bind structures;
    schematic agent/action labels in the pattern bind labels of the same
    sort.  Inconsistent rebinding fails the match.
    """
    sigma = {} if bindings is None else dict(bindings)
    if _match(pattern, target, sigma):
        return sigma
    return None


def _match(pattern, target, sigma):
    if isinstance(pattern, Placeholder):
        # bare formula placeholders occur at Formula positions, generic ones
        # at Structure positions; well-sortedness of both sides makes the
        # direct binding safe either way
        return _bind(sigma, pattern.name, target)
    if isinstance(pattern, Node):
        if len(pattern.children) == 1:
            inner = pattern.children[0]
            if isinstance(inner, Placeholder) and inner.formula_only:
                # coerced formula placeholder: unwrap one level
                if not isinstance(target, Node) or target.conn != pattern.conn:
                    return False
                return _bind(sigma, inner.name, target.children[0])
        if not isinstance(target, Node) or target.conn != pattern.conn:
            return False
        return all(_match(p, t, sigma)
                   for p, t in zip(pattern.children, target.children))
    if isinstance(pattern, Atom):
        if pattern.sort in (AGENT, ACTION):
            if not isinstance(target, Atom) or target.sort != pattern.sort:
                return False
            return _bind(sigma, _LABEL + pattern.name, target)
        return pattern == target
    return False


def _bind(sigma, key, value):
    if key in sigma:
        return sigma[key] == value
    sigma[key] = value
    return True


def replace(pattern, sigma):
    """Homomorphic substitution; every placeholder must be bound."""
    if isinstance(pattern, Placeholder):
        try:
            return sigma[pattern.name]
        except KeyError:
            raise EngineError("unbound placeholder %r" % pattern.name)
    if isinstance(pattern, Atom):
        if pattern.sort in (AGENT, ACTION):
            return sigma.get(_LABEL + pattern.name, pattern)
        return pattern
    if isinstance(pattern, Node):
        if len(pattern.children) == 1:
            inner = pattern.children[0]
            if isinstance(inner, Placeholder) and inner.formula_only:
                try:
                    return Node(pattern.conn, (sigma[inner.name],))
                except KeyError:
                    raise EngineError("unbound placeholder %r" % inner.name)
        return Node(pattern.conn,
                    tuple(replace(c, sigma) for c in pattern.children))
    raise EngineError("cannot substitute into %r" % (pattern,))


# ---------------------------------------------------------------------------
# side conditions


def _action_structural_conns(spec):
    cached = getattr(spec, "_action_struct_conns", None)
    if cached is None:
        cached = frozenset(
            cid for cid, cdef in spec.connectives.items()
            if cdef.result_sort == STRUCTURE and len(cdef.argument_sorts) == 2
            and cdef.argument_sorts[0] == ACTION)
        spec._action_struct_conns = cached
    return cached


def _strip_action_modalities(spec, structure):
    """Peel structural action modalities; None unless an atom remains."""
    action_conns = _action_structural_conns(spec)
    t = structure
    while isinstance(t, Node) and t.conn in action_conns:
        t = t.children[1]
    return _as_atprop(spec, t)


def _as_atprop(spec, t):
    while isinstance(t, Node) and t.conn in spec.coercions:
        t = t.children[0]
    if isinstance(t, Atom) and t.sort == ATPROP:
        return t
    return None


def _cond_atom(spec, goal, sigma):
    left = _strip_action_modalities(spec, goal.children[0])
    right = _strip_action_modalities(spec, goal.children[1])
    return left is not None and left == right


def _cond_atprop(spec, goal, sigma):
    a = sigma.get("A")
    return a is not None and _as_atprop(spec, a) is not None


def _cond_literal(spec, goal, sigma):
    """The bound A is an atom or a negated atom (announcement persistence)."""
    a = sigma.get("A")
    if a is None:
        return False
    if _as_atprop(spec, a) is not None:
        return True
    neg = spec.negation or {}
    if isinstance(a, Node) and a.conn == neg.get("imp") and len(a.children) == 2:
        body, bot = a.children
        return (_as_atprop(spec, body) is not None
                and isinstance(bot, Node) and bot.conn == neg.get("bot"))
    return False


CONDITIONS = {
    "atom": _cond_atom,
    "atprop": _cond_atprop,
    "literal": _cond_literal,
}


def check_condition(spec, condition_id, goal, sigma):
    """Pure side-condition predicate; never mutates its inputs."""
    try:
        fn = CONDITIONS[condition_id]
    except KeyError:
        raise EngineError("unknown condition id %r" % condition_id)
    return fn(spec, goal, sigma)


# ---------------------------------------------------------------------------
# backward inference


def _find_cut_formula(locales):
    for loc in locales:
        if isinstance(loc, CutFormula):
            return loc
    return None


def _find_action_structure(locales, action_name):
    for loc in locales:
        if isinstance(loc, ActionStructure) and action_name in loc.actions:
            return loc
    return None


def der(locales, rule, goal):
    """Premises required to prove `goal` via `rule`, or None on mismatch.

    Returns (rule_id, [premise sequents]) when the rule applies, with the
    premises in description-file order.  Raises MissingLocaleError when the
    conclusion matches but the rule's locale requirement is not met.
    """
    spec = rule.spec
    sigma = match(rule.conclusion, goal)
    if sigma is None:
        return None

    expand_over = None  # actions substituted for the `beta` label variable
    if rule.locale_kind == "CutFormula f":
        cut = _find_cut_formula(locales)
        if cut is None:
            raise MissingLocaleError(rule.id, rule.locale_kind)
        sigma["f"] = cut.formula
    elif rule.locale_kind == "ActionStructure":
        alpha = sigma.get(_LABEL + "alpha")
        if alpha is None:
            raise EngineError("rule %s has an ActionStructure locale but "
                              "binds no alpha label" % rule.id)
        struct = _find_action_structure(locales, alpha.name)
        if struct is None:
            raise MissingLocaleError(rule.id, rule.locale_kind)
        if any(("ph", "pre") in vs for vs in rule.premise_vars):
            sigma["pre"] = struct.precondition(alpha.name)
        if any(("label", "beta") in vs for vs in rule.premise_vars):
            agent = sigma.get(_LABEL + "a")
            if agent is None:
                raise EngineError("rule %s expands over beta but binds no "
                                  "agent label" % rule.id)
            if rule.relation_mode == "preimage":
                expand_over = struct.related_to(alpha.name, agent.name)
            else:
                expand_over = struct.related(alpha.name, agent.name)
    elif rule.locale_kind is not None:
        raise EngineError("unknown locale kind %r" % rule.locale_kind)

    if rule.condition is not None:
        if not check_condition(spec, rule.condition, goal, sigma):
            return None

    premises = []
    for prem, pv in zip(rule.premises, rule.premise_vars):
        if expand_over is not None and ("label", "beta") in pv:
            for beta in expand_over:
                s = dict(sigma)
                s[_LABEL + "beta"] = Atom(beta, ACTION)
                premises.append(replace(prem, s))
        else:
            premises.append(replace(prem, sigma))
    return rule.id, premises


def applicable_rules(spec, locales, goal):
    """All rules applicable to `goal`, in stable spec order.

    Returns (applicable, needs_locale): the first lists (rule_id, premises)
    for every rule der accepts; the second lists (rule_id, locale_kind) for
    rules failing only for want of a locale.
    """
    applicable = []
    needs_locale = []
    for rid, rule in spec.rules.items():
        try:
            res = der(locales, rule, goal)
        except MissingLocaleError as e:
            needs_locale.append((rid, e.locale_kind))
            continue
        if res is not None:
            applicable.append(res)
    return applicable, needs_locale


def locales_from_document(spec, entries):
    """Deserialize a locale table (the proof-script wire format)."""
    out = []
    for entry in entries:
        kind = entry.get("kind")
        if kind == "CutFormula":
            f = terms.parse_term(spec, entry["formula"], terms.FORMULA,
                                 allow_placeholders=False)
            out.append(CutFormula(f))
        elif kind == "ActionStructure":
            pre = tuple(
                (act, terms.parse_term(spec, src, terms.FORMULA,
                                       allow_placeholders=False))
                for act, src in entry.get("pre", []))
            relation = tuple(
                ((rel["action"], rel["agent"]), tuple(rel["related"]))
                for rel in entry.get("relation", []))
            out.append(ActionStructure(
                name=entry.get("name", ""),
                actions=tuple(entry.get("actions", ())),
                pre=pre, relation=relation))
        elif kind == "Empty":
            out.append(Empty())
        else:
            raise EngineError("unknown locale kind %r" % kind)
    return out


def locales_to_document(spec, locales):
    out = []
    for loc in locales:
        if isinstance(loc, CutFormula):
            out.append({"kind": "CutFormula",
                        "formula": terms.render(spec, loc.formula)})
        elif isinstance(loc, ActionStructure):
            out.append({
                "kind": "ActionStructure",
                "name": loc.name,
                "actions": list(loc.actions),
                "pre": [[act, terms.render(spec, f)] for act, f in loc.pre],
                "relation": [{"action": act, "agent": ag, "related": list(outs)}
                             for (act, ag), outs in loc.relation],
            })
        elif isinstance(loc, Empty):
            out.append({"kind": "Empty"})
        else:
            raise EngineError("cannot serialize locale %r" % (loc,))
    return out
