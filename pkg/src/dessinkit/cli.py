"""Command-line front end.

Every subcommand reads and writes the JSON document format of
:mod:`dessinkit.io`.  Exit codes: 0 for success / positive verdicts, 1 for
negative or inconclusive verdicts, 2 for input errors.  All output is
deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .blocks import enumerate_blocks
from .core_map import MapError, apply_rewrite, canonical_code
from .correspondence import dessin_from_skeleton, skeleton_of
from .dessin import DESSIN_MOVES, dessin_equivalent, real_part_code
from .export import export as render
from .io import Document, SchemaError, load, serialize
from .skeleton import (
    SKELETON_MOVES,
    admissible_orientation,
    all_admissible_orientations,
    inversion_reachability,
    skeleton_equivalent,
)
from .weak import weakly_equivalent

OK, NEGATIVE, BAD_INPUT = 0, 1, 2


def _default_max_steps() -> int:
    return int(os.environ.get("DESSIN_MAX_STEPS", "4"))


def _load(path, kinds):
    doc = load(path)
    if doc.kind not in kinds:
        raise SchemaError(f"{path}: expected {'/'.join(kinds)}, got {doc.kind}")
    return doc


def _emit(doc: Document) -> None:
    sys.stdout.write(serialize(doc))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_validate(args) -> int:
    doc = load(args.file)  # parsing runs the owning module's validators
    print(f"ok: {doc.kind}")
    return OK


def _cmd_skeleton(args) -> int:
    doc = _load(args.file, ("dessin",))
    sk, _ = skeleton_of(doc.payload)
    _emit(Document("skeleton", sk))
    return OK


def _cmd_extend(args) -> int:
    doc = _load(args.file, ("skeleton",))
    orient = None
    if args.orientation:
        with open(args.orientation, encoding="utf-8") as fh:
            orient = json.load(fh)
    _emit(Document("dessin", dessin_from_skeleton(doc.payload, orient)))
    return OK


def _cmd_enumerate_blocks(args) -> int:
    kind = None if args.type == "all" else args.type
    blocks = enumerate_blocks(args.degree, kind)
    print(f"{len(blocks)} classes")
    for sk in blocks:
        print(real_part_code(dessin_from_skeleton(sk)))
    return OK


def _cmd_orient(args) -> int:
    doc = _load(args.file, ("skeleton",))
    sk = doc.payload
    if args.all:
        for orient in all_admissible_orientations(sk):
            print(json.dumps(orient, sort_keys=True))
    else:
        print(json.dumps(admissible_orientation(sk), sort_keys=True))
    if args.inversion_graph:
        cert = inversion_reachability(sk)
        print(f"orientations: {cert.count} connected: {cert.connected}")
    return OK


def _cmd_equiv(args) -> int:
    kinds = ("skeleton",) if args.calculus == "skeleton" else ("dessin",)
    a = _load(args.a, kinds).payload
    b = _load(args.b, kinds).payload
    if args.calculus == "weak":
        v = weakly_equivalent(a, b, bound=max(args.max_steps, 1) * 500)
        if v.status == "equivalent":
            _emit(Document("script", v.script.entries))
            return OK
        print(f"unknown: {v.hint}")
        return NEGATIVE
    search = skeleton_equivalent if args.calculus == "skeleton" else dessin_equivalent
    r = search(a, b, bound=args.max_steps)
    if r.verdict == "equivalent":
        _emit(Document("script", r.script))
        return OK
    print(f"unknown: {r.hint}")
    return NEGATIVE


def _cmd_move(args) -> int:
    if args.action != "apply":
        raise SchemaError(f"unknown move action {args.action!r}")
    doc = _load(args.file, ("dessin", "skeleton"))
    table = DESSIN_MOVES if doc.kind == "dessin" else SKELETON_MOVES
    if args.rule not in table:
        raise SchemaError(f"unknown rule {args.rule!r} for a {doc.kind}")
    site = json.loads(args.site)
    if isinstance(site, list):
        site = tuple(site)
    out = apply_rewrite(doc.payload, table[args.rule], site)
    _emit(Document(doc.kind, out))
    return OK


def _cmd_real_part(args) -> int:
    doc = _load(args.file, ("dessin",))
    print(" ".join(real_part_code(doc.payload)))
    return OK


def _cmd_glue(args) -> int:
    doc = _load(args.plan, ("glue-plan",))
    from .blocks import assemble

    glued, code = assemble(doc.payload)
    print(" ".join(code))
    _emit(Document("dessin", glued))
    return OK


def _cmd_export(args) -> int:
    doc = _load(args.file, ("dessin", "skeleton"))
    sys.stdout.buffer.write(render(doc.payload, args.format, doc.kind))
    return OK


# ---------------------------------------------------------------------------
# wiring


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="dessinkit", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="parse and validate a document")
    s.add_argument("file")
    s.set_defaults(run=_cmd_validate)

    s = sub.add_parser("skeleton", help="contract a dessin to its skeleton")
    s.add_argument("file")
    s.set_defaults(run=_cmd_skeleton)

    s = sub.add_parser("extend", help="blow a skeleton up into a dessin")
    s.add_argument("file")
    s.add_argument("--orientation", help="JSON file mapping edge to head dart")
    s.set_defaults(run=_cmd_extend)

    s = sub.add_parser("enumerate-blocks", help="list block classes")
    s.add_argument("--degree", type=int, required=True)
    s.add_argument("--type", choices=("I", "II", "all"), default="all")
    s.set_defaults(run=_cmd_enumerate_blocks)

    s = sub.add_parser("orient", help="admissible orientations of a skeleton")
    s.add_argument("file")
    s.add_argument("--all", action="store_true")
    s.add_argument("--inversion-graph", action="store_true")
    s.set_defaults(run=_cmd_orient)

    s = sub.add_parser("equiv", help="search for an equivalence script")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--calculus", choices=("dessin", "skeleton", "weak"),
                   required=True)
    s.add_argument("--max-steps", type=int, default=_default_max_steps())
    s.set_defaults(run=_cmd_equiv)

    s = sub.add_parser("move", help="apply one rewriting rule")
    s.add_argument("action", choices=("apply",))
    s.add_argument("file")
    s.add_argument("--rule", required=True)
    s.add_argument("--site", required=True,
                   help="JSON-encoded site anchor, e.g. '[\"i1.0\", \"i2.0\"]'")
    s.set_defaults(run=_cmd_move)

    s = sub.add_parser("real-part", help="print the boundary shape word")
    s.add_argument("file")
    s.set_defaults(run=_cmd_real_part)

    s = sub.add_parser("glue", help="assemble blocks per a glue plan")
    s.add_argument("--plan", required=True)
    s.set_defaults(run=_cmd_glue)

    s = sub.add_parser("export", help="render a document")
    s.add_argument("file")
    s.add_argument("--format", choices=("dot", "svg", "json"), required=True)
    s.set_defaults(run=_cmd_export)

    return p


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.run(args)
    except (MapError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
