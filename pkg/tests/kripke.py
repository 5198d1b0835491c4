"""A finite-model evaluator used as an independent semantic oracle.

States are (world, stack) pairs: the base worlds of an epistemic model plus
the virtual worlds reached by executing actions (a stack records the actions
run so far, and a state exists only when every prefix satisfied its action's
precondition at execution time). Knowledge modalities walk agent relations
lifted through the stack; action modalities push and their adjoints pop.
Structures get their classical antecedent/succedent readings, so a sequent
holds at a state when the antecedent reading implies the succedent one.
"""

from displaycalc.terms import Atom, Node


class Model:
    def __init__(self, worlds, val, agent_rel, structures):
        self.worlds = list(worlds)
        self.val = val                  # (atom name, world) -> bool
        self.agent_rel = agent_rel      # agent name -> set of (w, v)
        self.structures = list(structures)
        self._succ_cache = {}
        self._pred_cache = {}
        self._states_cache = {}

    def pre(self, action):
        for s in self.structures:
            if action in s.actions:
                return s.precondition(action)
        raise KeyError(action)

    def related(self, action, agent):
        for s in self.structures:
            if action in s.actions:
                return s.related(action, agent)
        return (action,)

    def action_names(self):
        out = []
        for s in self.structures:
            out.extend(s.actions)
        return out

    # -- state space --------------------------------------------------------

    def state_exists(self, world, stack):
        st = (world, ())
        for act in stack:
            if not holds(self, st, self.pre(act)):
                return False
            st = (world, st[1] + (act,))
        return True

    def states(self, length):
        key = length
        if key not in self._states_cache:
            if length == 0:
                out = [(w, ()) for w in self.worlds]
            else:
                out = []
                for (w, stack) in self.states(length - 1):
                    for act in self.action_names():
                        if holds(self, (w, stack), self.pre(act)):
                            out.append((w, stack + (act,)))
            self._states_cache[key] = out
        return self._states_cache[key]

    def succ(self, state, agent):
        key = (state, agent)
        if key in self._succ_cache:
            return self._succ_cache[key]
        w, stack = state
        if not stack:
            out = [(v, ()) for v in self.worlds
                   if (w, v) in self.agent_rel.get(agent, set())]
        else:
            alpha = stack[-1]
            out = []
            for (v, tau) in self.succ((w, stack[:-1]), agent):
                for beta in self.related(alpha, agent):
                    if holds(self, (v, tau), self.pre(beta)):
                        out.append((v, tau + (beta,)))
        self._succ_cache[key] = out
        return out

    def pred(self, state, agent):
        key = (state, agent)
        if key in self._pred_cache:
            return self._pred_cache[key]
        depth = len(state[1])
        out = [u for u in self.states(depth) if state in self.succ(u, agent)]
        self._pred_cache[key] = out
        return out


def holds(model, state, formula):
    w, stack = state
    if isinstance(formula, Atom):
        return bool(model.val.get((formula.name, w), False))
    conn = formula.conn
    kids = formula.children
    if conn == "Fa":
        return holds(model, state, kids[0])
    if conn == "Top":
        return True
    if conn == "Bot":
        return False
    if conn == "And":
        return holds(model, state, kids[0]) and holds(model, state, kids[1])
    if conn == "Or":
        return holds(model, state, kids[0]) or holds(model, state, kids[1])
    if conn == "Imp":
        return (not holds(model, state, kids[0])) or holds(model, state, kids[1])
    if conn == "BoxK":
        return all(holds(model, v, kids[1])
                   for v in model.succ(state, kids[0].name))
    if conn == "DiaK":
        return any(holds(model, v, kids[1])
                   for v in model.succ(state, kids[0].name))
    if conn == "BoxKb":
        return all(holds(model, v, kids[1])
                   for v in model.pred(state, kids[0].name))
    if conn == "DiaKb":
        return any(holds(model, v, kids[1])
                   for v in model.pred(state, kids[0].name))
    if conn == "BoxA":
        act = kids[0].name
        if not holds(model, state, model.pre(act)):
            return True
        return holds(model, (w, stack + (act,)), kids[1])
    if conn == "DiaA":
        act = kids[0].name
        return (holds(model, state, model.pre(act))
                and holds(model, (w, stack + (act,)), kids[1]))
    if conn == "BoxAb":
        act = kids[0].name
        if stack and stack[-1] == act:
            return holds(model, (w, stack[:-1]), kids[1])
        return True
    if conn == "DiaAb":
        act = kids[0].name
        return (bool(stack) and stack[-1] == act
                and holds(model, (w, stack[:-1]), kids[1]))
    if conn == "One":
        return holds(model, state, model.pre(kids[0].name))
    raise ValueError("no formula semantics for %r" % conn)


def ant(model, state, structure):
    return _ant(model, state, structure)


def suc(model, state, structure):
    return _suc(model, state, structure)


def _ant(model, state, s):
    w, stack = state
    if isinstance(s, Node):
        conn, kids = s.conn, s.children
        if conn == "Fs":
            return holds(model, state, kids[0])
        if conn == "I":
            return True
        if conn == "Semi":
            return _ant(model, state, kids[0]) and _ant(model, state, kids[1])
        if conn == "Gt":
            return ((not _suc(model, state, kids[0]))
                    and _ant(model, state, kids[1]))
        if conn == "Lt":
            return (_ant(model, state, kids[0])
                    and not _suc(model, state, kids[1]))
        if conn == "SK":
            return any(_ant(model, v, kids[1])
                       for v in model.succ(state, kids[0].name))
        if conn == "SKb":
            return any(_ant(model, v, kids[1])
                       for v in model.pred(state, kids[0].name))
        if conn == "SA":
            act = kids[0].name
            return (holds(model, state, model.pre(act))
                    and _ant(model, (w, stack + (act,)), kids[1]))
        if conn == "SAb":
            act = kids[0].name
            return (bool(stack) and stack[-1] == act
                    and _ant(model, (w, stack[:-1]), kids[1]))
        if conn == "Phi":
            return holds(model, state, model.pre(kids[0].name))
    raise ValueError("no antecedent semantics for %r" % (s,))


def _suc(model, state, s):
    w, stack = state
    if isinstance(s, Node):
        conn, kids = s.conn, s.children
        if conn == "Fs":
            return holds(model, state, kids[0])
        if conn == "I":
            return False
        if conn == "Semi":
            return _suc(model, state, kids[0]) or _suc(model, state, kids[1])
        if conn == "Gt":
            return ((not _ant(model, state, kids[0]))
                    or _suc(model, state, kids[1]))
        if conn == "Lt":
            return ((not _ant(model, state, kids[1]))
                    or _suc(model, state, kids[0]))
        if conn == "SK":
            return all(_suc(model, v, kids[1])
                       for v in model.succ(state, kids[0].name))
        if conn == "SKb":
            return all(_suc(model, v, kids[1])
                       for v in model.pred(state, kids[0].name))
        if conn == "SA":
            act = kids[0].name
            if not holds(model, state, model.pre(act)):
                return True
            return _suc(model, (w, stack + (act,)), kids[1])
        if conn == "SAb":
            act = kids[0].name
            if stack and stack[-1] == act:
                return _suc(model, (w, stack[:-1]), kids[1])
            return True
        if conn == "Phi":
            return holds(model, state, model.pre(kids[0].name))
    raise ValueError("no succedent semantics for %r" % (s,))


def sequent_holds(model, state, sequent):
    return (not _ant(model, state, sequent.children[0])
            or _suc(model, state, sequent.children[1]))


def sequent_valid(model, sequent, depth=0):
    """True when the sequent holds at every state with stack length <= depth."""
    for length in range(depth + 1):
        for state in model.states(length):
            if not sequent_holds(model, state, sequent):
                return False
    return True
