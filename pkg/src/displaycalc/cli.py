"""Command-line entry points.

Exit codes: 0 success, 1 check/search failure, 2 usage errors, 3 file errors.
The `mc` and `serve` subcommands default to the shipped D.EAK description;
set DISPLAYCALC_SPEC or pass --spec to use another calculus.
"""

from __future__ import annotations

import argparse
import importlib.resources
import os
import sys

from . import exports, muddy, prooftree, terms
from .calculus import CalculusError, load_calculus
from .session import ProofSession


def _read_spec(path):
    if path in ("deak", "deak.json") and not os.path.exists(path):
        data = importlib.resources.files("displaycalc").joinpath(
            "assets/deak.json")
        return load_calculus(data.read_text(encoding="utf-8"))
    with open(path, "r", encoding="utf-8") as fh:
        return load_calculus(fh.read())


def _default_spec_path():
    return os.environ.get("DISPLAYCALC_SPEC", "deak.json")


def cmd_check(args):
    spec = _read_spec(args.spec)
    with open(args.script, "rb") as fh:
        session = exports.load_script(fh.read(), spec)
    ok, diags = prooftree.validate_tree(spec, session.tree)
    if ok:
        print("ok: %s proves %s"
              % (args.script, terms.render(spec, session.tree.sequent)))
        return 0
    for path, message in diags:
        print("invalid at %s: %s" % ("/".join(map(str, path)), message))
    return 1


def cmd_search(args):
    spec = _read_spec(args.spec)
    goal = terms.parse_sequent(spec, args.sequent)
    tree = prooftree.search(spec, [], goal, depth=args.depth)
    if tree is None:
        print("not found")
        return 1
    session = ProofSession(spec, tree, [])
    sys.stdout.write(exports.save_script(session).decode("utf-8"))
    return 0


def cmd_latex(args):
    spec = _read_spec(args.spec)
    with open(args.script, "rb") as fh:
        session = exports.load_script(fh.read(), spec)
    fragment = exports.export_latex(spec, session.tree,
                                    session.abbreviations or None)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(fragment)
    else:
        sys.stdout.write(fragment)
    return 0


def cmd_mc(args):
    params = muddy.MCParams(args.n, args.k,
                            frozenset(range(1, args.k + 1)), 1)
    if args.emit_goal:
        spec = muddy.shared_spec()
        goal, _ = muddy.mc_goal(params)
        print(terms.render(spec, goal))
        return 0
    if args.check:
        name = "mc_%d_%d" % (args.n, args.k)
        if name not in muddy.SHIPPED_SCRIPTS:
            print("no recorded derivation for n=%d k=%d "
                  "(shipped: 1_1, 2_1, 2_2)" % (args.n, args.k))
            return 1
        tree = muddy.replay_script(name)
        print("ok: %s validates, %d nodes" % (name, tree.size()))
        return 0
    print("nothing to do: pass --emit-goal or --check")
    return 2


def cmd_serve(args):
    import uvicorn

    from .server import create_app
    spec = _read_spec(args.spec)
    app = create_app(spec)
    uvicorn.run(app, host=args.host, port=args.port, log_level="warning")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="displaycalc",
        description="Build, check, search and export sequent derivations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="validate a proof script")
    p.add_argument("spec")
    p.add_argument("script")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("search", help="bounded automatic proof search")
    p.add_argument("spec")
    p.add_argument("sequent")
    p.add_argument("--depth", type=int, default=5)
    p.set_defaults(fn=cmd_search)

    p = sub.add_parser("latex", help="export a proof script to LaTeX")
    p.add_argument("spec")
    p.add_argument("script")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=cmd_latex)

    p = sub.add_parser("mc", help="muddy children instances")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--emit-goal", action="store_true")
    p.add_argument("--check", action="store_true")
    p.set_defaults(fn=cmd_mc)

    p = sub.add_parser("serve", help="run the interactive proof service")
    p.add_argument("--spec", default=_default_spec_path())
    p.add_argument("--port", type=int, default=8326)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (FileNotFoundError, IsADirectoryError, PermissionError) as e:
        print("file error: %s" % e, file=sys.stderr)
        return 3
    except (CalculusError, exports.ExportError, muddy.MuddyError,
            prooftree.ProofError, terms.TermError) as e:
        print("error: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
