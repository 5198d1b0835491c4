"""Mutable proof-editing state: one tree plus its tables and an undo stack."""

from __future__ import annotations

from . import prooftree, terms
from .prooftree import ProofError

UNDO_DEPTH = 100


class ProofSession:
    """A proof tree under construction with macros, abbreviations, locales.

    Every mutation goes through `commit`, which snapshots the prior state;
    `undo` restores it exactly.  The tree always validates with open leaves
    allowed; mutations that would break that are rejected.
    """

    def __init__(self, spec, tree, locales=None):
        self.spec = spec
        self.tree = tree
        self.locales = list(locales or [])
        self.macros = {}
        self.abbreviations = {}
        self._undo = []

    def __eq__(self, other):
        return (isinstance(other, ProofSession)
                and self.spec == other.spec
                and self.tree == other.tree
                and self.locales == other.locales
                and self.macros == other.macros
                and self.abbreviations == other.abbreviations)

    def snapshot(self):
        return (self.tree, list(self.locales), dict(self.macros),
                dict(self.abbreviations))

    def commit(self, tree):
        ok, diags = prooftree.validate_tree(self.spec, tree, allow_open=True)
        if not ok:
            raise ProofError("mutation would break the tree: %s" % diags[:3])
        self._undo.append(self.snapshot())
        del self._undo[:-UNDO_DEPTH]
        self.tree = tree

    def undo(self):
        if not self._undo:
            raise ProofError("nothing to undo")
        self.tree, self.locales, self.macros, self.abbreviations = self._undo.pop()

    def add_locale(self, locale):
        self._undo.append(self.snapshot())
        del self._undo[:-UNDO_DEPTH]
        self.locales = self.locales + [locale]

    def define_macro(self, macro):
        self._undo.append(self.snapshot())
        del self._undo[:-UNDO_DEPTH]
        self.macros = dict(self.macros)
        self.macros[macro.name] = macro

    def define_abbreviation(self, name, text):
        body = terms.parse_term(self.spec, text, terms.FORMULA,
                                allow_placeholders=False)
        body = prooftree.expand_abbreviations(self.spec, body, self.abbreviations)
        self._undo.append(self.snapshot())
        del self._undo[:-UNDO_DEPTH]
        self.abbreviations = dict(self.abbreviations)
        self.abbreviations[name] = prooftree.Abbreviation(name, body)
