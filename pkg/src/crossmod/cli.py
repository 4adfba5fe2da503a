"""Command-line front end.

Documents are JSON (one object or an array of objects per file), each with
"schema": 1, a "kind", and a "name"; see docs/formats.md.  Objects are
validated eagerly at load; the first failure aborts with a witness.  Reports
are deterministic: the JSON format contains no timing, so identical inputs
give byte-identical output.

Exit codes: 0 ok; 1 a mathematical check failed (witness in the report);
2 usage, parse, reference, or size-guard errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional

from .errors import CheckError, SizeGuardExceeded
from . import fgroup
from .fgroup import FiniteGroup, Homomorphism, RightAction, make_hom, validate_action
from .xmod import CrossedModule, homotopy_invariants, xmod_validate
from .butterfly import Butterfly, analyze, butterfly_validate, compose
from . import cocycle as coc_mod
from .cocycle import Cocycle1, cocycle_validate, enumerate_h1, lift_along_butterfly, wbar_check
from .braiding import BraidedCrossedModule, braiding_analyze, braiding_butterfly, h1_product
from .extension import DedeckerExtension, baer_sum, classify_ext, ext_validate

USAGE_CODES = {"DomainMismatch", "SizeGuardExceeded", "ParseError",
               "UnresolvedReference", "UnknownCommand", "Duplicate", "Usage"}

KINDS = ("group", "hom", "action", "xmod", "butterfly", "cocycle", "extension",
         "braiding")


@dataclass
class Workspace:
    groups: dict[str, FiniteGroup] = field(default_factory=dict)
    homs: dict[str, Homomorphism] = field(default_factory=dict)
    actions: dict[str, RightAction] = field(default_factory=dict)
    xmods: dict[str, CrossedModule] = field(default_factory=dict)
    butterflies: dict[str, Butterfly] = field(default_factory=dict)
    cocycles: dict[str, Cocycle1] = field(default_factory=dict)
    extensions: dict[str, DedeckerExtension] = field(default_factory=dict)
    braidings: dict[str, BraidedCrossedModule] = field(default_factory=dict)
    provenance: dict[tuple[str, str], str] = field(default_factory=dict)

    def registry(self, kind: str) -> dict:
        return {
            "group": self.groups, "hom": self.homs, "action": self.actions,
            "xmod": self.xmods, "butterfly": self.butterflies,
            "cocycle": self.cocycles, "extension": self.extensions,
            "braiding": self.braidings,
        }[kind]

    def count(self) -> int:
        return sum(len(self.registry(k)) for k in KINDS)

    def need(self, kind: str, name: str):
        reg = self.registry(kind)
        if name not in reg:
            raise CheckError("UnresolvedReference", (kind, name))
        return reg[name]


@dataclass
class Report:
    command: list[str]
    status: str
    findings: dict[str, Any]
    elapsed_s: float = 0.0

    def to_json(self) -> str:
        # timing is excluded: byte-determinism for identical inputs
        payload = {
            "schema": 1,
            "command": self.command,
            "status": self.status,
            "findings": self.findings,
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [f"command: {' '.join(self.command)}", f"status: {self.status}"]
        for key in sorted(self.findings):
            lines.append(f"{key}: {json.dumps(self.findings[key], sort_keys=True)}")
        lines.append(f"elapsed: {self.elapsed_s:.3f}s")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# document parsing


def _label_map(doc_map: dict, src: FiniteGroup, dst: FiniteGroup, where: str) -> list[int]:
    out = []
    for lab in src.elements:
        if lab not in doc_map:
            raise CheckError("ParseError", (where, lab), "missing map entry")
        out.append(dst.index(str(doc_map[lab])))
    return out


def _parse_group(doc: dict, where: str) -> FiniteGroup:
    labels = [str(x) for x in doc["elements"]]
    pos = {lab: i for i, lab in enumerate(labels)}
    table = []
    for i, row in enumerate(doc["table"]):
        if len(row) != len(labels):
            raise CheckError("ParseError", (where, labels[i]), "ragged table row")
        out_row = []
        for v in row:
            if str(v) not in pos:
                raise CheckError("ParseError", (where, str(v)), "unknown label in table")
            out_row.append(pos[str(v)])
        table.append(out_row)
    return fgroup.validate_group(labels, table, doc["name"])


def _parse_action(doc_act: dict, group: FiniteGroup, space: FiniteGroup, where: str) -> RightAction:
    table = []
    for s in space.elements:
        if s not in doc_act:
            raise CheckError("ParseError", (where, s), "missing action row")
        row_doc = doc_act[s]
        row = []
        for x in group.elements:
            if x not in row_doc:
                raise CheckError("ParseError", (where, s, x), "missing action entry")
            row.append(space.index(str(row_doc[x])))
        table.append(row)
    return validate_action(group, space, table)


def _parse_nested_g(doc_g: dict, gamma: FiniteGroup, g1: FiniteGroup, where: str):
    rows = []
    for a in gamma.elements:
        row_doc = doc_g.get(a, {})
        row = []
        for b in gamma.elements:
            row.append(g1.index(str(row_doc[b])) if b in row_doc else g1.identity)
        rows.append(tuple(row))
    return tuple(rows)


def load(paths: list[str]) -> Workspace:
    """Parse and eagerly validate all documents; first failure aborts."""
    docs: list[tuple[str, dict]] = []
    for p in paths:
        path = Path(p)
        files = sorted(path.glob("*.json")) if path.is_dir() else [path]
        if not files:
            raise CheckError("ParseError", (str(path),), "no documents found")
        for f in files:
            try:
                raw = json.loads(f.read_text())
            except (OSError, json.JSONDecodeError) as exc:
                raise CheckError("ParseError", (str(f),), str(exc))
            items = raw if isinstance(raw, list) else [raw]
            for doc in items:
                if not isinstance(doc, dict) or "kind" not in doc or "name" not in doc:
                    raise CheckError("ParseError", (str(f),), "document needs kind and name")
                if doc.get("schema") != 1:
                    raise CheckError("ParseError", (str(f), doc.get("name", "?")), "unsupported schema")
                docs.append((str(f), doc))

    ws = Workspace()

    def put(kind: str, name: str, value, where: str) -> None:
        reg = ws.registry(kind)
        if name in reg:
            raise CheckError("Duplicate", (kind, name))
        reg[name] = value
        ws.provenance[(kind, name)] = where

    for order_kind in KINDS:
        for where, doc in docs:
            if doc["kind"] != order_kind:
                continue
            name = str(doc["name"])
            try:
                if order_kind == "group":
                    put("group", name, _parse_group(doc, where), where)
                elif order_kind == "hom":
                    src = ws.need("group", doc["source"])
                    dst = ws.need("group", doc["target"])
                    put("hom", name, make_hom(src, dst, _label_map(doc["map"], src, dst, where)), where)
                elif order_kind == "action":
                    grp = ws.need("group", doc["group"])
                    spc = ws.need("group", doc["space"])
                    put("action", name, _parse_action(doc["act"], grp, spc, where), where)
                elif order_kind == "xmod":
                    g1 = ws.need("group", doc["g1"])
                    g0 = ws.need("group", doc["g0"])
                    delta = make_hom(g1, g0, _label_map(doc["delta"], g1, g0, where))
                    action = _parse_action(doc["action"], g0, g1, where)
                    put("xmod", name, xmod_validate(g1, g0, delta, action, name), where)
                elif order_kind == "butterfly":
                    dom = ws.need("xmod", doc["domain"])
                    cod = ws.need("xmod", doc["codomain"])
                    e = ws.need("group", doc["e"])
                    kappa = make_hom(dom.g1, e, _label_map(doc["kappa"], dom.g1, e, where))
                    iota = make_hom(cod.g1, e, _label_map(doc["iota"], cod.g1, e, where))
                    pi = make_hom(e, dom.g0, _label_map(doc["pi"], e, dom.g0, where))
                    jay = make_hom(e, cod.g0, _label_map(doc["jay"], e, cod.g0, where))
                    put("butterfly", name,
                        butterfly_validate(dom, cod, e, kappa, iota, pi, jay, name), where)
                elif order_kind == "cocycle":
                    gam = ws.need("group", doc["gamma"])
                    xm = ws.need("xmod", doc["target"])
                    x = tuple(_label_map(doc["x"], gam, xm.g0, where))
                    g = _parse_nested_g(doc.get("g", {}), gam, xm.g1, where)
                    put("cocycle", name, cocycle_validate(Cocycle1(gam, xm, x, g)), where)
                elif order_kind == "extension":
                    gam = ws.need("group", doc["gamma"])
                    xm = ws.need("xmod", doc["target"])
                    e = ws.need("group", doc["e"])
                    iota = make_hom(xm.g1, e, _label_map(doc["iota"], xm.g1, e, where))
                    pi = make_hom(e, gam, _label_map(doc["pi"], e, gam, where))
                    jay = make_hom(e, xm.g0, _label_map(doc["jay"], e, xm.g0, where))
                    put("extension", name, ext_validate(gam, xm, e, iota, pi, jay, name), where)
                elif order_kind == "braiding":
                    xm = ws.need("xmod", doc["base"])
                    c = []
                    for xl in xm.g0.elements:
                        row_doc = doc["c"].get(xl, {})
                        c.append(tuple(
                            xm.g1.index(str(row_doc[yl])) if yl in row_doc else xm.g1.identity
                            for yl in xm.g0.elements
                        ))
                    braid = BraidedCrossedModule(xm, tuple(c), name)
                    for x in xm.g0.indices():
                        if (braid.c[x][xm.g0.identity] != xm.g1.identity
                                or braid.c[xm.g0.identity][x] != xm.g1.identity):
                            raise CheckError("BraidingInvalid", (xm.g0.label(x),), "c not normalized")
                    put("braiding", name, braid, where)
            except KeyError as exc:
                raise CheckError("ParseError", (where, name), f"missing field {exc}")
    return ws


# ---------------------------------------------------------------------------
# commands


def _cocycle_doc(c: Cocycle1) -> dict:
    gam = c.gamma
    return {
        "x": {gam.label(a): c.target.g0.label(c.x[a]) for a in gam.indices()},
        "g": {
            gam.label(a): {
                gam.label(b): c.target.g1.label(c.g[a][b]) for b in gam.indices()
            }
            for a in gam.indices()
        },
    }


def run(ws: Workspace, command: list[str], max_group: int, max_search: int) -> Report:
    """Dispatch one command against the workspace; returns the report."""
    t0 = time.monotonic()
    if not command:
        raise CheckError("UnknownCommand", (), "empty command")
    op, *args = command

    def done(findings: dict, status: str = "ok") -> Report:
        return Report(command, status, findings, time.monotonic() - t0)

    if op == "validate":
        (name,) = _args(args, 1)
        hits = [k for k in KINDS if name in ws.registry(k)]
        if not hits:
            raise CheckError("UnresolvedReference", ("any", name))
        return done({"name": name, "kinds": hits, "valid": True})

    if op == "pi":
        (name,) = _args(args, 1)
        xm = ws.need("xmod", name)
        inv = homotopy_invariants(xm)
        return done({
            "pi0_order": inv.pi0.order,
            "pi0_elements": list(inv.pi0.elements),
            "pi1_order": inv.pi1.order,
            "pi1_elements": list(inv.pi1.elements),
            "pi1_abelian": inv.pi1.is_abelian(),
        })

    if op == "compose":
        n1, n2 = _args(args, 2)
        b = compose(ws.need("butterfly", n1), ws.need("butterfly", n2))
        return done({"e_order": b.e.order, "e_elements": list(b.e.elements), "valid": True})

    if op == "analyze":
        (name,) = _args(args, 1)
        b = ws.need("butterfly", name)
        an = analyze(b, max_h0=max_group)
        findings = {"flippable": an.flippable, "split": an.split is not None}
        if an.split is not None:
            findings["section"] = {
                b.domain.g0.label(i): b.e.label(v) for i, v in enumerate(an.split.map)
            }
        return done(findings)

    if op == "lift":
        cn, bn = _args(args, 2)
        c = ws.need("cocycle", cn)
        b = ws.need("butterfly", bn)
        res = lift_along_butterfly(c, b)
        return done({"result": _cocycle_doc(res.result), "middle_valid": True,
                     "left_leg_quasi_iso": res.diagonal.left_is_quasi_iso})

    if op == "h1":
        gn, xn = _args(args, 2)
        r = enumerate_h1(ws.need("group", gn), ws.need("xmod", xn), max_space=max_search)
        return done({
            "classes": r.class_count,
            "cocycles": r.cocycle_count,
            "representatives": [_cocycle_doc(c) for c in r.representatives],
        })

    if op == "classify-ext":
        gn, xn = _args(args, 2)
        cl = classify_ext(ws.need("group", gn), ws.need("xmod", xn), max_space=max_search)
        return done({
            "classes": cl.count,
            "extensions": [
                {"e_order": ext.e.order, "abelian": ext.e.is_abelian()}
                for ext in cl.extensions
            ],
        })

    if op == "baer":
        n1, n2, nb = _args(args, 3)
        s = baer_sum(ws.need("extension", n1), ws.need("extension", n2), ws.need("braiding", nb))
        return done({"e_order": s.e.order, "abelian": s.e.is_abelian(), "valid": True})

    if op == "braid-check":
        (name,) = _args(args, 1)
        braid = ws.need("braiding", name)
        b = braiding_butterfly(braid)
        an = braiding_analyze(braid)
        return done({"valid": True, "p_order": b.e.order,
                     "symmetric": an.symmetric, "picard": an.picard})

    if op == "product-h1":
        c1n, c2n, bn = _args(args, 3)
        out = h1_product(ws.need("cocycle", c1n), ws.need("cocycle", c2n), ws.need("braiding", bn))
        return done({"result": _cocycle_doc(out)})

    if op == "wbar":
        (name,) = _args(args, 1)
        rep = wbar_check(ws.need("cocycle", name))
        findings = {"ok": rep.ok, "failures": [repr(f) for f in rep.failures]}
        return done(findings, "ok" if rep.ok else "fail")

    raise CheckError("UnknownCommand", (op,))


def _args(args: list[str], n: int) -> list[str]:
    if len(args) != n:
        raise CheckError("Usage", tuple(args), f"expected {n} argument(s)")
    return args


def main(argv: Optional[list[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="crossmod",
        description="Finite crossed modules, butterflies, and non-abelian H^1.",
    )
    parser.add_argument("--load", action="append", default=[], metavar="PATH",
                        help="JSON document file or directory (repeatable)")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--max-group", type=int, default=fgroup.MAX_AUT_ORDER,
                        help="size guard for automorphism/section searches")
    parser.add_argument("--max-search", type=int, default=coc_mod.MAX_ENUM_SPACE,
                        help="size guard for cocycle enumeration")
    parser.add_argument("--threads", type=int, default=1,
                        help="accepted for compatibility; execution is sequential")
    parser.add_argument("command", nargs="+",
                        help="validate|pi|compose|analyze|lift|h1|classify-ext|"
                             "baer|braid-check|product-h1|wbar plus arguments")
    ns = parser.parse_args(argv)
    if ns.threads < 1:
        print("error: --threads must be >= 1", file=sys.stderr)
        return 2

    try:
        ws = load(ns.load)
        report = run(ws, ns.command, ns.max_group, ns.max_search)
    except SizeGuardExceeded as exc:
        report = Report(ns.command, "fail", {"error": exc.code, "witness": list(exc.witness)})
        print(report.to_json() if ns.format == "json" else report.to_text(), end="")
        return 2
    except CheckError as exc:
        report = Report(ns.command, "fail",
                        {"error": exc.code, "witness": [str(w) for w in exc.witness]})
        print(report.to_json() if ns.format == "json" else report.to_text(), end="")
        return 2 if exc.code in USAGE_CODES else 1

    out = report.to_json() if ns.format == "json" else report.to_text()
    print(out, end="")
    return 0 if report.status == "ok" else 1


if __name__ == "__main__":
    sys.exit(main())
