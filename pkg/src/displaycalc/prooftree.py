"""Proof trees: validation, interactive editing, bounded search and tactics.

A proof tree node carries a sequent, a justification (open, by rule, or by
macro) and its subtrees.  Trees are immutable: every edit returns a new tree
sharing unchanged subtrees.  Validity is defined through the backward
inference function: a ByRule node is correct exactly when `der` on its
sequent reproduces its children's sequents in order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from . import calculus, engine, terms
from .engine import MissingLocaleError, der
from .terms import FORMULA, Atom, Node, Placeholder


class ProofError(Exception):
    pass


class BadPathError(ProofError):
    pass


@dataclass(frozen=True)
class Open:
    pass


@dataclass(frozen=True)
class ByRule:
    rule_id: str
    locales: tuple = ()


@dataclass(frozen=True)
class ByMacro:
    macro_name: str
    expansion: object  # a Prooftree standing in for the derived rule


@dataclass(frozen=True)
class Prooftree:
    sequent: object
    justification: object
    children: tuple = ()

    def node_at(self, path):
        node = self
        for i in path:
            if i >= len(node.children):
                raise BadPathError("no node at path %s" % (path,))
            node = node.children[i]
        return node

    def replace_node(self, path, new):
        if not path:
            return new
        if path[0] >= len(self.children):
            raise BadPathError("no node at path %s" % (path,))
        kids = list(self.children)
        kids[path[0]] = kids[path[0]].replace_node(path[1:], new)
        return Prooftree(self.sequent, self.justification, tuple(kids))

    def nodes(self):
        """Preorder (path, node) traversal."""
        stack = [((), self)]
        while stack:
            path, node = stack.pop()
            yield path, node
            for i in range(len(node.children) - 1, -1, -1):
                stack.append((path + (i,), node.children[i]))

    def open_leaves(self):
        return [(p, n) for p, n in self.nodes()
                if isinstance(n.justification, Open)]

    def size(self):
        return sum(1 for _ in self.nodes())

    def height(self):
        if not self.children:
            return 0
        return 1 + max(c.height() for c in self.children)


def open_goal(sequent):
    return Prooftree(sequent, Open(), ())


@dataclass(frozen=True)
class Macro:
    """A derived rule: a reusable schema whose open leaves are its premises."""

    name: str
    schema: Prooftree


@dataclass(frozen=True)
class Abbreviation:
    name: str
    body: object  # Formula-sorted term, fully expanded at definition time


# ---------------------------------------------------------------------------
# validation


def validate_tree(spec, tree, allow_open=False):
    """Check every node's justification; (True, []) iff the tree is a proof.

    With `allow_open` the open leaves of a partial proof are tolerated, which
    is the invariant interactive sessions maintain.
    """
    diags = []
    for path, node in tree.nodes():
        j = node.justification
        if isinstance(j, Open):
            if node.children:
                diags.append((path, "open node has children"))
            elif not allow_open:
                diags.append((path, "open leaf"))
        elif isinstance(j, ByRule):
            rule = spec.rules.get(j.rule_id)
            if rule is None:
                diags.append((path, "unknown rule %r" % j.rule_id))
                continue
            try:
                res = der(list(j.locales), rule, node.sequent)
            except MissingLocaleError:
                res = None
            if res is None:
                diags.append((path, "rule %s does not apply" % j.rule_id))
                continue
            _, premises = res
            got = [c.sequent for c in node.children]
            if premises != got:
                diags.append((path, "premises of %s differ from children "
                              "(or are out of order)" % j.rule_id))
        elif isinstance(j, ByMacro):
            exp = j.expansion
            if exp.sequent != node.sequent:
                diags.append((path, "macro expansion root differs"))
            leaves = exp.open_leaves()
            if [n.sequent for _, n in leaves] != [c.sequent for c in node.children]:
                diags.append((path, "macro premises differ from children"))
            ok, sub = validate_tree(spec, exp, allow_open=True)
            if not ok:
                diags.extend(((path + ("macro",) + p), m) for p, m in sub)
        else:
            diags.append((path, "unknown justification %r" % (j,)))
    return (not diags, diags)


# ---------------------------------------------------------------------------
# editing


def apply_rule_at(spec, tree, path, rule_id, locales=()):
    """Close an open leaf with a rule; its premises become fresh open leaves."""
    node = tree.node_at(path)
    if not isinstance(node.justification, Open):
        raise BadPathError("path %s does not address an open leaf" % (path,))
    rule = calculus.lookup_rule(spec, rule_id)
    res = der(list(locales), rule, node.sequent)
    if res is None:
        raise ProofError("rule %s does not apply to %s"
                         % (rule_id, terms.render(spec, node.sequent)))
    _, premises = res
    used = tuple(locales) if rule.locale_kind else ()
    new = Prooftree(node.sequent, ByRule(rule_id, used),
                    tuple(open_goal(p) for p in premises))
    return tree.replace_node(path, new)


def graft_at(spec, tree, path, subtree):
    node = tree.node_at(path)
    if not isinstance(node.justification, Open):
        raise BadPathError("graft target %s is not an open leaf" % (path,))
    if subtree.sequent != node.sequent:
        raise ProofError("grafted root %s does not match the open goal %s"
                         % (terms.render(spec, subtree.sequent),
                            terms.render(spec, node.sequent)))
    return tree.replace_node(path, subtree)


def delete_at(spec, tree, path):
    if not path:
        raise BadPathError("cannot delete the root")
    node = tree.node_at(path)
    return tree.replace_node(path, open_goal(node.sequent))


def edit_tree(spec, tree, op, path, subtree=None):
    if op == "graft":
        return graft_at(spec, tree, path, subtree)
    if op == "delete":
        return delete_at(spec, tree, path)
    raise ProofError("unknown edit %r" % op)


# ---------------------------------------------------------------------------
# bounded proof search


def _head(side):
    if isinstance(side, Node):
        return side.conn
    return "#atom"


def _pattern_head(side):
    if isinstance(side, Placeholder):
        return None
    if isinstance(side, Node):
        return side.conn
    return "#atom"


def search(spec, locales, goal, depth=5):
    """Depth-first bounded search; rules in spec order, premises in order.

    Height is counted in rule applications: a zero-premise rule instance has
    height 0, so depth 0 demands the goal close immediately.  Deterministic;
    locale-requiring rules participate only when `locales` satisfies them.
    """
    if depth < 0:
        raise ProofError("depth must be nonnegative")
    indexed = []
    for rid, rule in spec.rules.items():
        lh = _pattern_head(rule.conclusion.children[0])
        rh = _pattern_head(rule.conclusion.children[1])
        indexed.append((rule, lh, rh))
    found = {}   # sequent -> (tree, height)
    failed = {}  # sequent -> largest depth exhaustively searched

    def go(g, d):
        hit = found.get(g)
        if hit is not None and hit[1] <= d:
            return hit[0]
        if failed.get(g, -1) >= d:
            return None
        gl, gr = _head(g.children[0]), _head(g.children[1])
        for rule, lh, rh in indexed:
            if (lh is not None and lh != gl) or (rh is not None and rh != gr):
                continue
            try:
                res = der(list(locales), rule, g)
            except MissingLocaleError:
                continue
            if res is None:
                continue
            _, premises = res
            used = tuple(locales) if rule.locale_kind else ()
            if not premises:
                tree = Prooftree(g, ByRule(rule.id, used), ())
                found[g] = (tree, 0)
                return tree
            if d == 0:
                continue
            kids = []
            for p in premises:
                sub = go(p, d - 1)
                if sub is None:
                    break
                kids.append(sub)
            else:
                tree = Prooftree(g, ByRule(rule.id, used), tuple(kids))
                h = 1 + max(found[k.sequent][1] for k in kids)
                found[g] = (tree, h)
                return tree
        failed[g] = max(failed.get(g, -1), d)
        return None

    return go(goal, depth)


# ---------------------------------------------------------------------------
# tactics


# per-connective rule programs deriving A |- A; the last rule's premises are
# the identity subgoals for the argument formulas
_GENID_PROGRAMS = {
    "Top": ("Top_L", "Top_R"),
    "Bot": ("Bot_R", "Bot_L"),
    "And": ("And_L", "And_R"),
    "Or": ("Or_R", "Or_L"),
    "Imp": ("Imp_R", "Imp_L"),
    "BoxK": ("BoxK_R", "BoxK_L"),
    "DiaK": ("DiaK_L", "DiaK_R"),
    "BoxKb": ("BoxKb_R", "BoxKb_L"),
    "DiaKb": ("DiaKb_L", "DiaKb_R"),
    "BoxA": ("BoxA_R", "E_L", "W_L", "BoxA_L"),
    "DiaA": ("DiaA_L", "E_L", "W_L", "DiaA_R"),
    "BoxAb": ("BoxAb_R", "BoxAb_L"),
    "DiaAb": ("DiaAb_L", "DiaAb_R"),
    "One": ("One_L", "Phi_Id"),
}


def sequent_of(spec, left, right):
    """Build a sequent, silently coercing formulas into structures."""
    seq = spec.sequent_connective()

    def lift(t):
        sort = terms.sort_of(spec, t)
        if sort == terms.ATPROP:
            t = Node(spec.coercion_atprop, (t,))
            sort = FORMULA
        if sort == FORMULA:
            t = Node(spec.coercion_formula, (t,))
        return t

    return Node(seq, (lift(left), lift(right)))


def tactic_identity(spec, formula):
    """A valid tree with root A |- A, by recursion on A."""
    goal = sequent_of(spec, formula, formula)
    head = formula
    while isinstance(head, Node) and head.conn in spec.coercions:
        head = head.children[0]
    if isinstance(head, Atom):
        return _apply_chain(spec, goal, ("Id",), ())
    program = _GENID_PROGRAMS.get(head.conn)
    if program is None:
        raise ProofError("no identity recipe for connective %r" % head.conn)
    subformulas = [c for c in head.children
                   if terms.sort_of(spec, c) == FORMULA]
    subtrees = tuple(tactic_identity(spec, f) for f in subformulas)
    return _apply_chain(spec, goal, program, subtrees)


def _apply_chain(spec, goal, rule_ids, subtrees):
    """Apply single-premise rules down a chain; the last takes `subtrees`."""
    rid = rule_ids[0]
    rule = calculus.lookup_rule(spec, rid)
    res = der([], rule, goal)
    if res is None:
        raise ProofError("tactic step %s does not apply to %s"
                         % (rid, terms.render(spec, goal)))
    _, premises = res
    if len(rule_ids) > 1:
        if len(premises) != 1:
            raise ProofError("tactic step %s is not single-premise" % rid)
        child = _apply_chain(spec, premises[0], rule_ids[1:], subtrees)
        return Prooftree(goal, ByRule(rid), (child,))
    if len(premises) != len(subtrees):
        raise ProofError("tactic arity mismatch at %s" % rid)
    for prem, sub in zip(premises, subtrees):
        if prem != sub.sequent:
            raise ProofError("tactic subgoal mismatch at %s" % rid)
    return Prooftree(goal, ByRule(rid), tuple(subtrees))


def tactic_atom(spec, goal):
    """Close a goal of shape (action modalities) p |- (action modalities) p."""
    rule = calculus.lookup_rule(spec, "Atom")
    res = der([], rule, goal)
    if res is None:
        raise ProofError("atom tactic does not apply to %s"
                         % terms.render(spec, goal))
    return Prooftree(goal, ByRule("Atom"), ())


# ---------------------------------------------------------------------------
# reporting and macros


def rule_usage(tree, exclude_path=None):
    """Multiset of rule ids over ByRule nodes, macros expanded.

    `exclude_path` restricts the count to nodes outside that subtree (the
    path-scoped variant used by the intuitionism scan).
    """
    counts = Counter()
    for path, node in tree.nodes():
        if exclude_path is not None:
            k = len(exclude_path)
            if len(path) >= k and path[:k] == tuple(exclude_path):
                continue
        j = node.justification
        if isinstance(j, ByRule):
            counts[j.rule_id] += 1
        elif isinstance(j, ByMacro):
            for _, inner in j.expansion.nodes():
                if isinstance(inner.justification, ByRule):
                    counts[inner.justification.rule_id] += 1
    return dict(counts)


def instantiate_schema(spec, schema, sigma):
    """Substitute through every sequent of a macro schema."""
    seq = engine.replace(schema.sequent, sigma)
    kids = tuple(instantiate_schema(spec, c, sigma) for c in schema.children)
    j = schema.justification
    if isinstance(j, ByMacro):
        j = ByMacro(j.macro_name, instantiate_schema(spec, j.expansion, sigma))
    return Prooftree(seq, j, kids)


def apply_macro_at(spec, tree, path, macro, sigma):
    """Apply a derived rule at an open leaf.

    The substitution must instantiate every schema placeholder and send the
    schema root to the leaf's sequent; side conditions inside the expansion
    are re-checked at this instantiation (validation will reject otherwise).
    """
    node = tree.node_at(path)
    if not isinstance(node.justification, Open):
        raise BadPathError("path %s does not address an open leaf" % (path,))
    try:
        root = engine.replace(macro.schema.sequent, sigma)
        if root != node.sequent:
            raise ProofError("macro %s root %s does not match the goal %s"
                             % (macro.name, terms.render(spec, root),
                                terms.render(spec, node.sequent)))
        expansion = instantiate_schema(spec, macro.schema, sigma)
    except engine.EngineError as e:
        raise ProofError("macro %s: %s" % (macro.name, e))
    ok, diags = validate_tree(spec, expansion, allow_open=True)
    if not ok:
        raise ProofError("macro %s does not instantiate soundly: %s"
                         % (macro.name, diags[:3]))
    children = tuple(open_goal(n.sequent) for _, n in expansion.open_leaves())
    new = Prooftree(node.sequent, ByMacro(macro.name, expansion), children)
    return tree.replace_node(path, new)


def expand_abbreviations(spec, term, table):
    """Replace abbreviation atoms by their bodies (parse-side only)."""
    if isinstance(term, Node):
        if (term.conn == spec.coercion_atprop and
                isinstance(term.children[0], Atom) and
                term.children[0].name in table):
            return table[term.children[0].name].body
        return Node(term.conn, tuple(expand_abbreviations(spec, c, table)
                                     for c in term.children))
    return term


def fold_abbreviations(spec, term, table):
    """Collapse exact matches of abbreviation bodies back to their names."""
    if isinstance(term, Node):
        for name, abbr in table.items():
            if term == abbr.body:
                return Node(spec.coercion_atprop, (Atom(name, terms.ATPROP),))
        return Node(term.conn, tuple(fold_abbreviations(spec, c, table)
                                     for c in term.children))
    return term
