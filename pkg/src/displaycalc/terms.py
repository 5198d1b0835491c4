"""Sorted terms of a display calculus and their ascii/latex surfaces.

Terms come in three flavours: atoms (atomic propositions and agent/action
labels), connective nodes, and placeholders (pattern variables that appear in
rule schemas only).  Parsing and printing are driven entirely by the notation
templates of the active calculus, so the module knows nothing about D.EAK
specifically.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

ATPROP = "Atprop"
FORMULA = "Formula"
STRUCTURE = "Structure"
SEQUENT = "Sequent"
AGENT = "Agent"
ACTION = "Action"

# sort -> sort reachable through silent coercion connectives
COERCIONS = {(ATPROP, FORMULA), (FORMULA, STRUCTURE), (ATPROP, STRUCTURE)}

_IDENT_RE = re.compile(r"[A-Za-z0-9][A-Za-z0-9_]*")

_MAX_PREC = 10**6


class TermError(Exception):
    """Lexical, parse or sort error while building a term."""


@dataclass(frozen=True)
class Atom:
    name: str
    sort: str  # ATPROP, AGENT or ACTION


@dataclass(frozen=True)
class Node:
    conn: str
    children: tuple

    def __post_init__(self):
        if not isinstance(self.children, tuple):
            object.__setattr__(self, "children", tuple(self.children))


@dataclass(frozen=True)
class Placeholder:
    name: str
    formula_only: bool = False


def walk(term):
    """Preorder traversal yielding (path, subterm)."""
    stack = [((), term)]
    while stack:
        path, t = stack.pop()
        yield path, t
        if isinstance(t, Node):
            for i in range(len(t.children) - 1, -1, -1):
                stack.append((path + (i,), t.children[i]))


# ---------------------------------------------------------------------------
# template machinery


@dataclass(frozen=True)
class TemplateItem:
    """Either a literal token or a hole (literal is None for holes)."""

    literal: str | None
    hole: int | None


def split_template(template):
    """Break a notation template into literal tokens and `_` holes.

    Literal runs are kept as single tokens (`|-`, `/\\`), except that brackets
    and the prime sit each in their own token so `[_]'` works out.
    """
    items = []
    hole = 0
    for chunk in template.split():
        i = 0
        while i < len(chunk):
            c = chunk[i]
            if c == "_":
                items.append(TemplateItem(None, hole))
                hole += 1
                i += 1
            elif c in "[]{}()'":
                items.append(TemplateItem(c, None))
                i += 1
            else:
                j = i
                while j < len(chunk) and chunk[j] not in "_[]{}()'":
                    j += 1
                items.append(TemplateItem(chunk[i:j], None))
                i = j
    return items


# raw (sort-unresolved) parse nodes


@dataclass(frozen=True)
class RawAtom:
    name: str


@dataclass(frozen=True)
class RawNode:
    op: str
    children: tuple


@dataclass(frozen=True)
class RawPrefix:
    labels: tuple
    arg: object
    variants: tuple


class _Cursor:
    __slots__ = ("toks", "pos")

    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else (None, None)

    def next(self):
        t = self.peek()
        self.pos += 1
        return t


class SurfaceSyntax:
    """Parser/printer pair compiled from a calculus description.

    The grammar is a single precedence-climbing expression grammar whose
    prefix and infix entries are read off the ascii templates.  Sorts are
    resolved after parsing; silent coercion connectives are inserted wherever
    an Atprop sits in Formula position or a Formula in Structure position.
    """

    def __init__(self, spec):
        self.spec = spec
        self.generic_marker = spec.placeholder_generic
        self.formula_marker = spec.placeholder_formula
        self.constants = {}   # literal -> conn id     (e.g. "I", "top")
        self.prefix = {}      # opening literal -> list of (items, conn)
        self.infix = {}       # operator literal -> list of conn ids
        self.literals = set()
        for cid, cdef in spec.connectives.items():
            if cid in spec.coercions:
                continue
            items = split_template(cdef.ascii.template)
            for it in items:
                if it.literal is not None:
                    self.literals.add(it.literal)
            if all(it.literal is not None for it in items):
                self.constants[items[0].literal] = cid
            elif items[0].literal is None:
                lits = [it.literal for it in items if it.literal is not None]
                if len(items) != 3 or len(lits) != 1 or len(cdef.argument_sorts) != 2:
                    raise TermError("unsupported template shape: %r" % cdef.ascii.template)
                self.infix.setdefault(lits[0], []).append(cid)
            else:
                self.prefix.setdefault(items[0].literal, []).append((items, cid))
        if spec.negation:
            self.literals.add(spec.negation["ascii"])
        sym = sorted((l for l in self.literals if not _IDENT_RE.fullmatch(l)),
                     key=len, reverse=True)
        self.word_literals = {l for l in self.literals if _IDENT_RE.fullmatch(l)}
        self._sym_tokens = sym

    # -- lexing -------------------------------------------------------------

    def tokenize(self, text):
        toks = []
        i, n = 0, len(text)
        fm, gm = self.formula_marker, self.generic_marker
        while i < n:
            c = text[i]
            if c.isspace():
                i += 1
                continue
            if text.startswith(fm, i):
                m = _IDENT_RE.match(text, i + len(fm))
                if m:
                    toks.append(("fph", m.group()))
                    i = m.end()
                    continue
            if text.startswith(gm, i):
                m = _IDENT_RE.match(text, i + len(gm))
                if m:
                    toks.append(("gph", m.group()))
                    i = m.end()
                    continue
            if c == "(":
                toks.append(("lpar", c)); i += 1; continue
            if c == ")":
                toks.append(("rpar", c)); i += 1; continue
            matched = False
            for s in self._sym_tokens:
                if text.startswith(s, i):
                    toks.append(("lit", s))
                    i += len(s)
                    matched = True
                    break
            if matched:
                continue
            m = _IDENT_RE.match(text, i)
            if m:
                w = m.group()
                toks.append(("lit", w) if w in self.word_literals else ("ident", w))
                i = m.end()
            else:
                raise TermError("unexpected character %r at offset %d" % (c, i))
        return toks

    # -- parsing ------------------------------------------------------------

    def parse(self, text, expected_sort, allow_placeholders=True):
        cur = _Cursor(self.tokenize(text))
        term, _ = self._expr(cur, 0, allow_placeholders)
        if cur.pos != len(cur.toks):
            raise TermError("trailing input %r in %r" % (cur.toks[cur.pos:], text))
        return self._resolve(term, expected_sort)

    def _expr(self, cur, min_prec, allow_ph):
        left, lprec = self._primary(cur, allow_ph)
        while True:
            kind, val = cur.peek()
            if kind != "lit" or val not in self.infix:
                break
            cid = self.infix[val][0]
            prec = self.spec.connectives[cid].ascii.precedence
            lmin, rmin, own = prec[0], prec[1], prec[-1]
            if own < min_prec:
                break
            if lprec < lmin:
                raise TermError(
                    "operator %r cannot take its left operand without parentheses" % val)
            cur.next()
            right, _ = self._expr(cur, rmin, allow_ph)
            left = RawNode(val, (left, right))
            lprec = own
        return left, lprec

    def _primary(self, cur, allow_ph):
        kind, val = cur.next()
        if kind == "lpar":
            t, _ = self._expr(cur, 0, allow_ph)
            k, v = cur.next()
            if k != "rpar":
                raise TermError("expected ')', found %r" % (v,))
            return t, _MAX_PREC
        if kind == "fph":
            if not allow_ph:
                raise TermError("placeholder %s%s not allowed here" % (self.formula_marker, val))
            return Placeholder(val, formula_only=True), _MAX_PREC
        if kind == "gph":
            if not allow_ph:
                raise TermError("placeholder %s%s not allowed here" % (self.generic_marker, val))
            return Placeholder(val, formula_only=False), _MAX_PREC
        if kind == "ident":
            return RawAtom(val), _MAX_PREC
        if kind == "lit":
            neg = self.spec.negation
            if neg and val == neg["ascii"]:
                arg, _ = self._expr(cur, neg["precedence"], allow_ph)
                return RawNode("!neg", (arg,)), neg["precedence"]
            if val in self.constants:
                cid = self.constants[val]
                return Node(cid, ()), self.spec.connectives[cid].ascii.precedence[-1]
            if val in self.prefix:
                return self._prefix_form(cur, val, allow_ph)
        raise TermError("unexpected token %r" % (val,))

    def _prefix_form(self, cur, first, allow_ph):
        """Parse a leading-literal template such as `[_] _`, `{_}' _`, `One _`.

        Primed and unprimed bracket variants share their shape up to the
        optional prime, so one skeleton (prime stripped) drives the walk and
        a trailing prime selects among the variants afterwards.
        """
        forms = self.prefix[first]
        skeleton = [it for it in forms[0][0] if it.literal != "'"]
        labels = []
        for idx in range(1, len(skeleton) - 1):
            it = skeleton[idx]
            if it.literal is None:
                kind, val = cur.next()
                if kind != "ident":
                    raise TermError("expected a label after %r, found %r" % (first, val))
                labels.append(RawAtom(val))
            else:
                kind, val = cur.next()
                if kind != "lit" or val != it.literal:
                    raise TermError("expected %r, found %r" % (it.literal, val))
        primed = False
        if any(any(i.literal == "'" for i in its) for its, _ in forms):
            kind, val = cur.peek()
            if kind == "lit" and val == "'":
                cur.next()
                primed = True
        variants = tuple(cid for its, cid in forms
                         if any(i.literal == "'" for i in its) == primed)
        if not variants:
            raise TermError("no %r form %s a prime" % (first, "with" if primed else "without"))
        prec = self.spec.connectives[variants[0]].ascii.precedence
        arg, _ = self._expr(cur, prec[-2], allow_ph)
        return RawPrefix(tuple(labels), arg, variants), prec[-1]

    # -- sort resolution ----------------------------------------------------

    def _atom_sort(self, name):
        if name in self.spec.labels[AGENT]:
            return AGENT
        if name in self.spec.labels[ACTION]:
            return ACTION
        return ATPROP

    def _coerce(self, term, actual, expected):
        if actual == expected:
            return term
        if (actual, expected) not in COERCIONS:
            raise TermError("expected a %s, found a %s" % (expected, actual))
        if actual == ATPROP:
            term = Node(self.spec.coercion_atprop, (term,))
            actual = FORMULA
        if expected == STRUCTURE and actual == FORMULA:
            term = Node(self.spec.coercion_formula, (term,))
        return term

    def _resolve(self, raw, expected):
        spec = self.spec
        if isinstance(raw, RawAtom):
            sort = self._atom_sort(raw.name)
            return self._coerce(Atom(raw.name, sort), sort, expected)
        if isinstance(raw, Placeholder):
            if raw.formula_only:
                return self._coerce(raw, FORMULA, expected)
            if expected != STRUCTURE:
                raise TermError("generic placeholder %s%s used at %s position"
                                % (self.generic_marker, raw.name, expected))
            return raw
        if isinstance(raw, Node) and not raw.children:  # constants
            cdef = spec.connectives[raw.conn]
            return self._coerce(raw, cdef.result_sort, expected)
        if isinstance(raw, RawNode):
            if raw.op == "!neg":
                neg = spec.negation
                inner = self._resolve(raw.children[0], FORMULA)
                bottom = Node(neg["bot"], ())
                return self._coerce(Node(neg["imp"], (inner, bottom)), FORMULA, expected)
            last = None
            for cid in self.infix[raw.op]:
                cdef = spec.connectives[cid]
                try:
                    kids = tuple(self._resolve(c, s)
                                 for c, s in zip(raw.children, cdef.argument_sorts))
                    return self._coerce(Node(cid, kids), cdef.result_sort, expected)
                except TermError as e:
                    last = e
            raise last
        if isinstance(raw, RawPrefix):
            last = None
            for cid in raw.variants:
                cdef = spec.connectives[cid]
                try:
                    kids = tuple(self._resolve(c, s)
                                 for c, s in zip(raw.labels + (raw.arg,), cdef.argument_sorts))
                    return self._coerce(Node(cid, kids), cdef.result_sort, expected)
                except TermError as e:
                    last = e
            raise last or TermError("cannot resolve %r" % (raw,))
        raise TermError("cannot resolve %r" % (raw,))

    # -- printing -----------------------------------------------------------

    def render(self, term, surface="ascii"):
        out, _ = self._render(term, surface)
        return out

    def _render(self, term, surface):
        """Fill notation templates bottom-up; templates are spliced verbatim."""
        spec = self.spec
        if isinstance(term, Atom):
            return term.name, _MAX_PREC
        if isinstance(term, Placeholder):
            marker = self.formula_marker if term.formula_only else self.generic_marker
            return marker + term.name, _MAX_PREC
        if term.conn in spec.coercions:
            return self._render(term.children[0], surface)
        cdef = spec.connectives.get(term.conn)
        if cdef is None:
            raise TermError("unknown connective %r" % term.conn)
        tmpl = cdef.notation(surface)
        pieces = tmpl.template.split("_")
        prec = tmpl.precedence
        out = [pieces[0]]
        for i, piece in enumerate(pieces[1:]):
            sub, sub_prec = self._render(term.children[i], surface)
            if sub_prec < prec[i]:
                sub = "(" + sub + ")"
            out.append(sub)
            out.append(piece)
        return "".join(out), prec[-1]


# ---------------------------------------------------------------------------
# public helpers (thin wrappers so callers do not touch SurfaceSyntax)


def parse_term(spec, text, expected_sort, allow_placeholders=True):
    return spec.syntax.parse(text, expected_sort, allow_placeholders)


def parse_sequent(spec, text, allow_placeholders=False):
    return spec.syntax.parse(text, SEQUENT, allow_placeholders)


def render(spec, term, surface="ascii"):
    return spec.syntax.render(term, surface)


def sort_of(spec, term):
    if isinstance(term, Atom):
        return term.sort
    if isinstance(term, Placeholder):
        return FORMULA if term.formula_only else STRUCTURE
    cdef = spec.connectives.get(term.conn)
    if cdef is None:
        raise TermError("unknown connective %r" % term.conn)
    return cdef.result_sort


def substructures(spec, sequent):
    """All Structure-sorted subterms of a sequent with their paths, preorder."""
    if sort_of(spec, sequent) != SEQUENT:
        raise TermError("substructures expects a sequent")
    out = []
    stack = [((1,), sequent.children[1]), ((0,), sequent.children[0])]
    while stack:
        path, t = stack.pop()
        if sort_of(spec, t) == STRUCTURE:
            out.append((path, t))
            if isinstance(t, Node) and t.conn not in spec.coercions:
                for i in range(len(t.children) - 1, -1, -1):
                    stack.append((path + (i,), t.children[i]))
    return out
