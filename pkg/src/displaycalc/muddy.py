"""The muddy children case study: generators, goals and recorded proofs.

Children are the agents 1..n; D_i is the atomic proposition "child i is
dirty" and clean is not-dirty (negation is implication into falsum).  The
two epistemic actions are public announcements: `father` announces that at
least one child is dirty, `no` announces that no child knows its own state.
Both have identity agent relations, so each is its own sole related action.
"""

from __future__ import annotations

import importlib.resources
from dataclasses import dataclass

from . import exports, prooftree, terms
from .calculus import load_calculus
from .engine import ActionStructure
from .terms import ACTION, AGENT, ATPROP, Atom, Node


class MuddyError(Exception):
    pass


def load_deak():
    data = importlib.resources.files("displaycalc").joinpath("assets/deak.json")
    return load_calculus(data.read_text(encoding="utf-8"))


def _atom(name):
    return Node("Fa", (Atom(name, ATPROP),))


def dirty_atom(i):
    return _atom("D_%d" % i)


def neg(f):
    return Node("Imp", (f, Node("Bot", ())))


def conj(formulas):
    if not formulas:
        return Node("Top", ())
    out = formulas[-1]
    for f in reversed(formulas[:-1]):
        out = Node("And", (f, out))
    return out


def disj(formulas):
    if not formulas:
        return Node("Bot", ())
    out = formulas[-1]
    for f in reversed(formulas[:-1]):
        out = Node("Or", (f, out))
    return out


def knows(i, f):
    return Node("BoxK", (Atom(str(i), AGENT), f))


def after(action, f):
    return Node("BoxA", (Atom(action, ACTION), f))


def dirty(n, J):
    """Exactly the children in J are dirty: one conjunct per child."""
    J = set(J)
    if not J <= set(range(1, n + 1)):
        raise MuddyError("J must be a subset of 1..%d" % n)
    out = []
    for j in range(1, n + 1):
        out.append(dirty_atom(j) if j in J else neg(dirty_atom(j)))
    return conj(out)


def vision(n):
    """Each child knows whether any of the other children is dirty."""
    if n < 1:
        raise MuddyError("n must be positive")
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            out.append(Node("Imp", (dirty_atom(j), knows(i, dirty_atom(j)))))
            out.append(Node("Imp", (neg(dirty_atom(j)),
                                    knows(i, neg(dirty_atom(j))))))
    return conj(out)


def everyone(n, f):
    return conj([knows(a, f) for a in range(1, n + 1)])


def everyone_iter(n, k, f):
    """k-fold iteration of "every one of the n children knows"."""
    if k < 0:
        raise MuddyError("k must be nonnegative")
    if n < 1:
        raise MuddyError("n must be positive")
    for _ in range(k):
        f = everyone(n, f)
    return f


@dataclass(frozen=True)
class MCParams:
    n: int
    k: int
    J: frozenset
    j: int

    def __post_init__(self):
        if self.n <= 0:
            raise MuddyError("n must be positive")
        if not (0 < self.k <= self.n):
            raise MuddyError("k must satisfy 0 < k <= n")
        J = frozenset(self.J)
        object.__setattr__(self, "J", J)
        if len(J) != self.k or not J <= set(range(1, self.n + 1)):
            raise MuddyError("J must be a k-subset of 1..n")
        if self.j not in J:
            raise MuddyError("j must be a dirty child")


def father_pre(n):
    return disj([dirty_atom(i) for i in range(1, n + 1)])


def no_pre(n):
    return conj([neg(knows(i, dirty_atom(i))) for i in range(1, n + 1)])


def mc_actions(n):
    """The father and no announcements for n children."""
    father = ActionStructure("father", ("father",),
                             (("father", father_pre(n)),))
    no = ActionStructure("no", ("no",), (("no", no_pre(n)),))
    return father, no


def mc_goal(params):
    """The instance sequent together with its action-structure locales."""
    spec = shared_spec()
    antecedent = Node("Semi", (
        _lift(dirty(params.n, params.J)),
        _lift(everyone_iter(params.n, params.k, vision(params.n)))))
    succ = knows(params.j, dirty_atom(params.j))
    for _ in range(params.k - 1):
        succ = after("no", succ)
    succ = after("father", succ)
    sequent = Node(spec.sequent_connective(), (antecedent, _lift(succ)))
    return sequent, list(mc_actions(params.n))


def _lift(f):
    return Node("Fs", (f,))


_SPEC_CACHE = {}


def shared_spec():
    """The shipped calculus, loaded once per process."""
    if "deak" not in _SPEC_CACHE:
        _SPEC_CACHE["deak"] = load_deak()
    return _SPEC_CACHE["deak"]


SHIPPED_SCRIPTS = {
    "mc_1_1": MCParams(1, 1, frozenset({1}), 1),
    "mc_2_1": MCParams(2, 1, frozenset({1}), 1),
    "mc_2_2": MCParams(2, 2, frozenset({1, 2}), 1),
    "genid_or": None,
    "genid_boxk": None,
}


def script_bytes(name):
    if name not in SHIPPED_SCRIPTS:
        raise MuddyError("no shipped script named %r" % name)
    res = importlib.resources.files("displaycalc").joinpath(
        "assets/scripts/%s.proof" % name)
    try:
        return res.read_bytes()
    except FileNotFoundError:
        raise MuddyError("shipped script %r is missing" % name)


def replay_script(name):
    """Load a shipped proof script, validate it, and check its root goal."""
    spec = shared_spec()
    session = exports.load_script(script_bytes(name), spec)
    tree = session.tree
    ok, diags = prooftree.validate_tree(spec, tree)
    if not ok:
        raise MuddyError("shipped script %s fails validation: %s"
                         % (name, diags[:3]))
    params = SHIPPED_SCRIPTS[name]
    if params is not None:
        expected, _ = mc_goal(params)
        if tree.sequent != expected:
            raise MuddyError(
                "script %s proves %s, expected %s"
                % (name, terms.render(spec, tree.sequent),
                   terms.render(spec, expected)))
    return tree


def classical_subtree_path(spec, tree):
    """Path of the designated not-not-dirty subtree of the (2,2) proof.

    The proof applies the cut rule on a double negation of a dirty atom; the
    classical content lives entirely in the second premise of that cut.
    """
    for path, node in tree.nodes():
        j = node.justification
        if not isinstance(j, prooftree.ByRule) or j.rule_id != "SingleCut":
            continue
        for loc in j.locales:
            f = getattr(loc, "formula", None)
            if f is None:
                continue
            if (isinstance(f, Node) and f.conn == "Imp"
                    and isinstance(f.children[0], Node)
                    and f.children[0].conn == "Imp"
                    and f.children[1] == Node("Bot", ())
                    and f.children[0].children[1] == Node("Bot", ())):
                return path + (1,)
    raise MuddyError("no double-negation cut found")
