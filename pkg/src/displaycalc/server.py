"""Stateful HTTP session API under /api/v1, driven by the browser UI.

Sessions live in memory; mutations on one session are serialized by a
per-session lock and every mutating response returns the full updated tree
with stable child-index paths.  Engine diagnostics are passed through
verbatim: 409 for rule mismatches (including missing locales), 422 for
malformed sequents or locale payloads, 404 for unknown sessions and paths.
"""

from __future__ import annotations

import itertools
import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Query
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import FileResponse, HTMLResponse
from fastapi.staticfiles import StaticFiles
from pydantic import BaseModel

from . import engine, exports, prooftree, terms
from .calculus import CalculusError
from .engine import CutFormula, MissingLocaleError
from .prooftree import BadPathError, ByMacro, ByRule, Open, ProofError
from .session import ProofSession
from .terms import Placeholder


class CreateSession(BaseModel):
    goal: str
    locales: list | None = None


class ApplyRule(BaseModel):
    path: list[int]
    rule: str
    locale: dict | None = None  # {"cut_formula": "<ascii>"}


class Edit(BaseModel):
    op: str  # "graft" | "delete"
    path: list[int]
    subtree: dict | None = None


class SearchAt(BaseModel):
    path: list[int]
    depth: int = 5


class DefineMacro(BaseModel):
    name: str
    path: list[int] | None = None  # record the subtree at this path
    schema_doc: dict | None = None


class ApplyMacro(BaseModel):
    path: list[int]
    macro: str
    bindings: dict[str, str] = {}


class DefineAbbreviation(BaseModel):
    name: str
    body: str


def tree_doc(spec, tree, path=()):
    j = tree.justification
    if isinstance(j, Open):
        rule, label = "open", ""
    elif isinstance(j, ByRule):
        rule, label = j.rule_id, spec.rules[j.rule_id].latex_name
    elif isinstance(j, ByMacro):
        rule, label = {"macro": j.macro_name}, j.macro_name
    else:  # pragma: no cover
        rule, label = "?", "?"
    return {
        "sequent": terms.render(spec, tree.sequent),
        "latex": terms.render(spec, tree.sequent, "latex"),
        "rule": rule,
        "label": label,
        "open": isinstance(j, Open),
        "path": list(path),
        "children": [tree_doc(spec, c, path + (i,))
                     for i, c in enumerate(tree.children)],
    }


def create_app(spec, frontend_dir=None):
    app = FastAPI(title="displaycalc", docs_url=None, redoc_url=None)
    # single-user research tool; the UI may be served from another port
    app.add_middleware(CORSMiddleware, allow_origins=["*"],
                       allow_methods=["*"], allow_headers=["*"])
    sessions = {}
    locks = {}
    ids = itertools.count(1)
    registry_lock = threading.Lock()

    def get_session(sid):
        try:
            return sessions[sid], locks[sid]
        except KeyError:
            raise HTTPException(404, "unknown session %r" % sid)

    def parse_path(session, path):
        try:
            return session.tree.node_at(tuple(path))
        except BadPathError:
            raise HTTPException(404, "no node at path %s" % (path,))

    def locales_for(session, payload):
        locs = list(session.locales)
        if payload:
            if "cut_formula" in payload:
                try:
                    f = terms.parse_term(spec, payload["cut_formula"],
                                         terms.FORMULA,
                                         allow_placeholders=False)
                except terms.TermError as e:
                    raise HTTPException(422, str(e))
                f = prooftree.expand_abbreviations(spec, f,
                                                   session.abbreviations)
                locs.append(CutFormula(f))
            else:
                raise HTTPException(422, "unsupported locale payload %r"
                                    % (payload,))
        return locs

    def state(session):
        return {"tree": tree_doc(spec, session.tree),
                "open_paths": [list(p) for p, _ in session.tree.open_leaves()],
                "locales": engine.locales_to_document(spec, session.locales),
                "macros": sorted(session.macros),
                "abbreviations": {n: terms.render(spec, a.body)
                                  for n, a in session.abbreviations.items()}}

    def commit(session, tree):
        try:
            session.commit(tree)
        except ProofError as e:
            raise HTTPException(409, str(e))

    @app.get("/api/v1/calculus")
    def calculus_info():
        return {"name": spec.name, "hash": spec.content_hash,
                "rules": [{"id": rid, "ascii": r.ascii_name,
                           "latex": r.latex_name, "class": r.klass}
                          for rid, r in spec.rules.items()]}

    @app.post("/api/v1/sessions")
    def create_session(body: CreateSession):
        try:
            goal = terms.parse_sequent(spec, body.goal)
        except terms.TermError as e:
            raise HTTPException(422, str(e))
        try:
            locales = engine.locales_from_document(spec, body.locales or [])
        except (engine.EngineError, terms.TermError, KeyError) as e:
            raise HTTPException(422, "bad locale table: %s" % e)
        session = ProofSession(spec, prooftree.open_goal(goal), locales)
        with registry_lock:
            sid = str(next(ids))
            sessions[sid] = session
            locks[sid] = threading.Lock()
        return {"session_id": sid, **state(session)}

    @app.get("/api/v1/sessions/{sid}/tree")
    def get_tree(sid: str):
        session, _ = get_session(sid)
        return state(session)

    @app.get("/api/v1/sessions/{sid}/rules")
    def rules_at(sid: str, path: str = Query("")):
        session, _ = get_session(sid)
        try:
            p = tuple(int(x) for x in path.split(".") if x != "")
        except ValueError:
            raise HTTPException(422, "path must be dot-separated indices")
        node = parse_path(session, p)
        applicable, needs = engine.applicable_rules(
            spec, session.locales, node.sequent)
        return {
            "applicable": [
                {"rule": rid,
                 "latex": spec.rules[rid].latex_name,
                 "premises": [terms.render(spec, s) for s in prems]}
                for rid, prems in applicable],
            "needs_locale": [{"rule": rid, "locale": kind}
                             for rid, kind in needs],
        }

    @app.post("/api/v1/sessions/{sid}/apply")
    def apply_rule(sid: str, body: ApplyRule):
        session, lock = get_session(sid)
        with lock:
            parse_path(session, tuple(body.path))
            locs = locales_for(session, body.locale)
            try:
                tree = prooftree.apply_rule_at(
                    spec, session.tree, tuple(body.path), body.rule, locs)
            except MissingLocaleError as e:
                raise HTTPException(409, {"error": str(e),
                                          "needs_locale": e.locale_kind})
            except (ProofError, CalculusError, engine.EngineError) as e:
                raise HTTPException(409, str(e))
            commit(session, tree)
            return state(session)

    @app.post("/api/v1/sessions/{sid}/edit")
    def edit(sid: str, body: Edit):
        session, lock = get_session(sid)
        with lock:
            subtree = None
            if body.op == "graft":
                if body.subtree is None:
                    raise HTTPException(422, "graft needs a subtree")
                try:
                    subtree = exports.tree_from_doc(spec, body.subtree)
                except (exports.ExportError, terms.TermError) as e:
                    raise HTTPException(422, "bad subtree: %s" % e)
            parse_path(session, tuple(body.path))
            try:
                tree = prooftree.edit_tree(spec, session.tree, body.op,
                                           tuple(body.path), subtree)
            except BadPathError as e:
                raise HTTPException(404, str(e))
            except ProofError as e:
                raise HTTPException(409, str(e))
            commit(session, tree)
            return state(session)

    @app.post("/api/v1/sessions/{sid}/search")
    def search_at(sid: str, body: SearchAt):
        session, lock = get_session(sid)
        with lock:
            node = parse_path(session, tuple(body.path))
            if not isinstance(node.justification, Open):
                raise HTTPException(409, "node is not an open leaf")
            found = prooftree.search(spec, session.locales, node.sequent,
                                     depth=body.depth)
            if found is None:
                raise HTTPException(409, "no derivation within depth %d"
                                    % body.depth)
            tree = prooftree.graft_at(spec, session.tree, tuple(body.path),
                                      found)
            commit(session, tree)
            return state(session)

    @app.post("/api/v1/sessions/{sid}/macros")
    def define_macro(sid: str, body: DefineMacro):
        session, lock = get_session(sid)
        with lock:
            if body.path is not None:
                schema = parse_path(session, tuple(body.path))
            elif body.schema_doc is not None:
                try:
                    schema = exports.tree_from_doc(spec, body.schema_doc,
                                                   allow_placeholders=True)
                except (exports.ExportError, terms.TermError) as e:
                    raise HTTPException(422, "bad schema: %s" % e)
            else:
                raise HTTPException(422, "macro needs a path or a schema")
            session.define_macro(prooftree.Macro(body.name, schema))
            return state(session)

    @app.post("/api/v1/sessions/{sid}/apply_macro")
    def apply_macro(sid: str, body: ApplyMacro):
        session, lock = get_session(sid)
        with lock:
            macro = session.macros.get(body.macro)
            if macro is None:
                raise HTTPException(404, "unknown macro %r" % body.macro)
            kinds = {}
            for _, node in macro.schema.nodes():
                for _, t in terms.walk(node.sequent):
                    if isinstance(t, Placeholder):
                        kinds[t.name] = (terms.FORMULA if t.formula_only
                                         else terms.STRUCTURE)
            sigma = {}
            for name, text in body.bindings.items():
                sort = kinds.get(name, terms.STRUCTURE)
                try:
                    sigma[name] = terms.parse_term(
                        spec, text, sort, allow_placeholders=False)
                except terms.TermError as e:
                    raise HTTPException(422, "binding %s: %s" % (name, e))
            parse_path(session, tuple(body.path))
            try:
                tree = prooftree.apply_macro_at(
                    spec, session.tree, tuple(body.path), macro, sigma)
            except (ProofError, engine.EngineError) as e:
                raise HTTPException(409, str(e))
            commit(session, tree)
            return state(session)

    @app.post("/api/v1/sessions/{sid}/abbreviations")
    def define_abbreviation(sid: str, body: DefineAbbreviation):
        session, lock = get_session(sid)
        with lock:
            try:
                session.define_abbreviation(body.name, body.body)
            except terms.TermError as e:
                raise HTTPException(422, str(e))
            return state(session)

    @app.get("/api/v1/sessions/{sid}/export")
    def export(sid: str, format: str = Query("latex")):
        session, _ = get_session(sid)
        if format == "latex":
            try:
                text = exports.export_latex(spec, session.tree,
                                            session.abbreviations or None)
            except exports.ExportError as e:
                raise HTTPException(409, str(e))
            return HTMLResponse(text, media_type="application/x-tex")
        if format == "script":
            return HTMLResponse(exports.save_script(session).decode("utf-8"),
                                media_type="application/json")
        raise HTTPException(422, "unknown export format %r" % format)

    @app.post("/api/v1/sessions/{sid}/undo")
    def undo(sid: str):
        session, lock = get_session(sid)
        with lock:
            try:
                session.undo()
            except ProofError as e:
                raise HTTPException(409, str(e))
            return state(session)

    static = Path(frontend_dir) if frontend_dir else _default_frontend()
    if static is not None and static.is_dir():
        @app.get("/")
        def index():
            return FileResponse(static / "index.html")

        app.mount("/", StaticFiles(directory=str(static)), name="static")
    else:
        @app.get("/")
        def placeholder():
            return HTMLResponse(
                "<html><body><h1>displaycalc</h1>"
                "<p>The API lives under /api/v1; no UI bundle is "
                "installed.</p></body></html>")

    return app


def _default_frontend():
    here = Path(__file__).resolve().parent
    for candidate in (here / "static",
                      here.parent.parent / "frontend" / "dist"):
        if candidate.is_dir():
            return candidate
    return None
