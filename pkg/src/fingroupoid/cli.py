"""Command-line front end.

    fingroupoid validate FILE
    fingroupoid morita A B
    fingroupoid compose P Q
    fingroupoid gerbe-check FILE
    fingroupoid extension-induce FILE
    fingroupoid pullback FILE
    fingroupoid descent-check FILE
    fingroupoid split FILE

Exit status: 0 when the property holds (or the input is valid), 1 when it
fails, 2 for unreadable input or an exceeded size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

from . import io as gio
from .bibundle import (bibundle_of_functor, bibundle_violations, compose_bibundles,
                       is_morita_morphism, morita_equivalent, pullback_groupoid, verify_witness)
from .core import functor_violations
from .descent import BGPresheaf, ConstantPresheaf, Cover, GloballyConstantPresheaf, SetMap, check_stack_condition
from .errors import CapExceeded, DomainMismatch, IsotropyTooLarge, NotFull, NotSurjective, ValidationError
from .extension import check_gerbe_conditions, induced_extension, pullback_extension, validate_extension
from .groups import ISO_CAP
from .linrep import BundleSES, find_equivariant_splitting, ses_violations, vector_bundle_violations

DEFAULT_SEED = 0
VERBS = ("validate", "morita", "compose", "gerbe-check", "extension-induce", "pullback", "descent-check", "split")


@dataclass
class Command:
    verb: str
    inputs: list
    seed: int = DEFAULT_SEED
    cap: int | None = None
    fmt: str = "text"
    output: str | None = None


@dataclass
class Report:
    status: int
    lines: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    document: object = None   # written to --output when given


def _w(x):
    return gio._plain(x)


# ------------------------------------------------------------------ verbs

def _kind_of(doc):
    if isinstance(doc, dict):
        if "carrier" in doc:
            return "bibundle"
        if "arrow_map" in doc:
            return "functor"
    return "groupoid"


def _load_functor_or_bibundle(path):
    doc = gio.load_json(path)
    r = gio.Reader(path)
    if _kind_of(doc) == "bibundle":
        B = r.bibundle(doc)
        bad = bibundle_violations(B.left, B.right)
        if bad:
            raise ValidationError(f"bibundle in {path}", bad)
        return B
    F = r.functor(doc)
    bad = functor_violations(F)
    if bad:
        raise ValidationError(f"functor in {path}", bad)
    return bibundle_of_functor(F)


def _functor(path):
    F = gio.Reader(path).functor(gio.load_json(path))
    bad = functor_violations(F)
    if bad:
        raise ValidationError(f"functor in {path}", bad)
    return F


def do_validate(cmd):
    path = cmd.inputs[0]
    doc = gio.load_json(path)
    r = gio.Reader(path)
    kind = _kind_of(doc)
    try:
        if kind == "groupoid":
            G = r.groupoid(doc)
            summary = {"objects": len(G.objects), "morphisms": len(G.morphisms), "components": len(G.components())}
        elif kind == "functor":
            F = r.functor(doc)
            bad = functor_violations(F)
            if bad:
                raise ValidationError("functor", bad)
            summary = {"source_morphisms": len(F.source.morphisms), "target_morphisms": len(F.target.morphisms)}
        else:
            B = r.bibundle(doc)
            bad = bibundle_violations(B.left, B.right)
            if bad:
                raise ValidationError("bibundle", bad)
            summary = {"carrier": len(B.carrier)}
    except ValidationError as e:
        vs = [{"kind": v.kind, "witness": _w(v.witness), "detail": v.detail} for v in e.violations]
        lines = [f"invalid {kind}: {len(vs)} violation(s)"] + [f"  {v}" for v in e.violations[:20]]
        return Report(1, lines, {"kind": kind, "valid": False, "violations": vs})
    return Report(0, [f"valid {kind}: {summary}"], {"kind": kind, "valid": True, **summary})


def do_morita(cmd):
    G = gio.Reader(cmd.inputs[0]).groupoid(gio.load_json(cmd.inputs[0]))
    H = gio.Reader(cmd.inputs[1]).groupoid(gio.load_json(cmd.inputs[1]))
    res = morita_equivalent(G, H, cmd.cap or ISO_CAP)
    if not res.equivalent:
        return Report(1, [f"not Morita equivalent: {res.detail}"],
                      {"equivalent": False, "report": res.detail, "witness": _w(res.witness)})
    w = res.witness
    ok = verify_witness(w)
    lines = [f"Morita equivalent; span apex has {len(w.apex.objects)} objects, {len(w.apex.morphisms)} arrows",
             f"witness verified: {bool(ok)}"]
    return Report(0 if ok else 1, lines,
                  {"equivalent": True, "witness_kind": w.kind, "witness_verified": bool(ok),
                   "apex_objects": len(w.apex.objects), "apex_morphisms": len(w.apex.morphisms)},
                  gio.dump_witness(w))


def do_compose(cmd):
    P = _load_functor_or_bibundle(cmd.inputs[0])
    Q = _load_functor_or_bibundle(cmd.inputs[1])
    R = compose_bibundles(P, Q)
    bad = bibundle_violations(R.left, R.right)
    status = 1 if bad else 0
    lines = [f"composite carrier has {len(R.carrier)} elements", f"valid bibundle: {not bad}"]
    return Report(status, lines, {"carrier": len(R.carrier), "valid": not bad,
                                  "violations": [str(v) for v in bad]}, gio.dump_bibundle(R))


def do_gerbe(cmd):
    F = _functor(cmd.inputs[0])
    rep = check_gerbe_conditions(F)
    lines = [f"objects_lift={rep.objects_lift} arrows_lift={rep.arrows_lift} gerbe={rep.gerbe}"]
    if rep.object_witness is not None:
        lines.append(f"object {rep.object_witness!r} is not isomorphic to any image")
    if rep.arrow_witness is not None:
        a, b, p = rep.arrow_witness
        lines.append(f"arrow {p!r}: F({a!r}) -> F({b!r}) has no lift {a!r} -> {b!r}")
    data = dict(rep.verdict(), object_witness=_w(rep.object_witness), arrow_witness=_w(rep.arrow_witness))
    return Report(0 if rep.gerbe else 1, lines, data)


def do_induce(cmd):
    F = _functor(cmd.inputs[0])
    try:
        ext = induced_extension(F)
    except (NotFull, NotSurjective) as e:
        kind = type(e).__name__
        return Report(1, [f"{kind}: {e}"], {"induced": False, "error": kind, "witness": _w(e.witness)})
    lines = [f"induced extension: {len(ext.G.morphisms)} -> {len(ext.H.morphisms)} arrows over "
             f"{len(ext.base)} objects"]
    return Report(0, lines, {"induced": True, "G_morphisms": len(ext.G.morphisms),
                             "H_morphisms": len(ext.H.morphisms)}, gio.dump_functor(ext.functor))


def do_pullback(cmd):
    path = cmd.inputs[0]
    doc = gio.load_json(path)
    r = gio.Reader(path)
    r.fields(doc, "$", ("map",), ("groupoid", "extension"))
    if ("groupoid" in doc) == ("extension" in doc):
        r.fail("$", "give exactly one of 'groupoid' or 'extension'")
    fmap = doc["map"]
    if not isinstance(fmap, dict):
        r.fail("$.map", "expected an object")
    domain = list(fmap)
    if "groupoid" in doc:
        G = r.groupoid(doc["groupoid"], "$.groupoid")
        for p, x in fmap.items():
            if not G.has_object(x):
                r.fail(f"$.map.{p}", f"unknown object {x!r}")
        try:
            W, proj = pullback_groupoid(G, fmap, domain)
        except NotSurjective as e:
            return Report(1, [f"map is not surjective: object {e.witness!r} missed"],
                          {"surjective": False, "witness": _w(e.witness)})
        v = is_morita_morphism(proj)
        lines = [f"pull-back groupoid: {len(W.objects)} objects, {len(W.morphisms)} arrows",
                 f"projection is a Morita morphism: {bool(v)}"]
        return Report(0 if v else 1, lines, {"surjective": True, "objects": len(W.objects),
                                             "morphisms": len(W.morphisms), "morita_morphism": bool(v)},
                      gio.dump_groupoid(W))
    F = r.functor(doc["extension"], "$.extension")
    ext = validate_extension(F.source, F.target, F)
    try:
        new, (psi_G, psi_H) = pullback_extension(ext, fmap, domain)
    except NotSurjective as e:
        return Report(1, [f"map is not surjective: object {e.witness!r} missed"],
                      {"surjective": False, "witness": _w(e.witness)})
    ok = bool(is_morita_morphism(psi_G)) and bool(is_morita_morphism(psi_H))
    lines = [f"pulled-back extension: {len(new.G.morphisms)} -> {len(new.H.morphisms)} arrows",
             f"projections are Morita morphisms: {ok}"]
    return Report(0 if ok else 1, lines, {"surjective": True, "G_morphisms": len(new.G.morphisms),
                                          "H_morphisms": len(new.H.morphisms), "morita_morphism": ok},
                  gio.dump_functor(new.functor))


def _presheaf(r, doc, cap):
    r.fields(doc, "$.presheaf", ("kind",), ("groupoid", "values"))
    kind = doc["kind"]
    if kind == "bg":
        return BGPresheaf(r.groupoid(doc.get("groupoid"), "$.presheaf.groupoid"), cap or 4)
    if kind == "constant":
        return ConstantPresheaf(r.groupoid(doc.get("groupoid"), "$.presheaf.groupoid"))
    if kind == "globally-constant":
        return GloballyConstantPresheaf(r.strings(doc.get("values"), "$.presheaf.values"))
    r.fail("$.presheaf.kind", f"unknown presheaf kind {kind!r}")


def _cover(r, doc, U):
    maps = []
    for k, part in enumerate(doc):
        where = f"$.cover[{k}]"
        if isinstance(part, list):
            if any(x not in U for x in part):
                r.fail(where, "subset is not inside the base")
            maps.append(SetMap.inclusion(tuple(part), tuple(U)))
        else:
            r.fields(part, where, ("domain", "images"))
            if len(part["domain"]) != len(part["images"]) or any(x not in U for x in part["images"]):
                r.fail(where, "images must be base elements, one per domain element")
            maps.append(SetMap(tuple(part["domain"]), tuple(U), tuple(part["images"])))
    return Cover(maps, tuple(U))


def do_descent(cmd):
    path = cmd.inputs[0]
    doc = gio.load_json(path)
    r = gio.Reader(path)
    r.fields(doc, "$", ("presheaf", "base", "cover"), ("method",))
    U = r.strings(doc["base"], "$.base")
    P = _presheaf(r, doc["presheaf"], cmd.cap)
    if not isinstance(doc["cover"], list):
        r.fail("$.cover", "expected a list")
    cover = _cover(r, doc["cover"], U)
    rep = check_stack_condition(P, cover, doc.get("method", "auto"))
    lines = [f"full: {rep.full}", f"faithful: {rep.faithful}", f"essentially surjective: {rep.ess_surjective}"]
    if rep.witness is not None:
        lines.append(f"witness: {rep.witness!r}")
    data = dict(rep.verdict(), witness=_w(rep.witness), method=rep.method)
    return Report(0 if rep.holds else 1, lines, data)


def do_split(cmd):
    path = cmd.inputs[0]
    doc = gio.load_json(path)
    r = gio.Reader(path)
    r.fields(doc, "$", ("groupoid", "A", "B", "C", "j", "q"))
    G = r.groupoid(doc["groupoid"], "$.groupoid")
    bundles = {}
    for name in "ABC":
        V = r.vector_bundle(doc[name], G, f"$.{name}")
        bad = vector_bundle_violations(G, V.dim, V.mat)
        if bad:
            raise ValidationError(f"bundle {name}", bad)
        bundles[name] = V
    j = {a: r.matrix(M, f"$.j.{a}") for a, M in r.mapping(doc["j"], "$.j", G.objects).items()}
    q = {a: r.matrix(M, f"$.q.{a}") for a, M in r.mapping(doc["q"], "$.q", G.objects).items()}
    bad = ses_violations(bundles["A"], bundles["B"], bundles["C"], j, q)
    if bad:
        raise ValidationError("short exact sequence", bad)
    split = find_equivariant_splitting(BundleSES(bundles["A"], bundles["B"], bundles["C"], j, q))
    if split is None:
        return Report(1, ["INFEASIBLE"], {"splitting": "INFEASIBLE"}, "INFEASIBLE")
    out = {a: gio.dump_matrix(M) for a, M in split.items()}
    lines = [f"r[{a}] = {json.dumps(M)}" for a, M in out.items()]
    return Report(0, lines, {"splitting": out}, out)


HANDLERS = {
    "validate": (do_validate, 1), "morita": (do_morita, 2), "compose": (do_compose, 2),
    "gerbe-check": (do_gerbe, 1), "extension-induce": (do_induce, 1), "pullback": (do_pullback, 1),
    "descent-check": (do_descent, 1), "split": (do_split, 1),
}


def run(cmd):
    """Dispatch ``cmd``; never raises for bad input."""
    handler, arity = HANDLERS[cmd.verb]
    if len(cmd.inputs) != arity:
        return Report(2, [f"{cmd.verb} takes {arity} input file(s)"], {"error": "Usage"})
    try:
        return handler(cmd)
    except gio.ParseError as e:
        return Report(2, [f"ParseError: {e}"], {"error": "ParseError", "path": e.path, "location": e.location})
    except (CapExceeded, IsotropyTooLarge) as e:
        return Report(2, [f"CapExceeded: {e}"], {"error": "CapExceeded", "message": str(e)})
    except DomainMismatch as e:
        return Report(2, [f"input error: {e}"], {"error": "DomainMismatch", "message": str(e)})
    except ValidationError as e:
        return Report(2, [f"input error: {e}"], {"error": "InvalidInput", "message": str(e),
                                                 "violations": [str(v) for v in e.violations[:20]]})


def build_parser():
    ap = argparse.ArgumentParser(prog="fingroupoid", description="Finite groupoid toolkit")
    ap.add_argument("verb", choices=VERBS)
    ap.add_argument("inputs", nargs="+")
    ap.add_argument("--format", dest="fmt", choices=("text", "structured"), default="text")
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED)
    ap.add_argument("--cap", type=int, default=None)
    ap.add_argument("--output", default=None)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    cmd = Command(args.verb, args.inputs, args.seed, args.cap, args.fmt, args.output)
    rep = run(cmd)
    if cmd.fmt == "structured":
        body = {"verb": cmd.verb, "status": rep.status, "seed": cmd.seed, "result": rep.data}
        print(json.dumps(body, sort_keys=True, ensure_ascii=False))
    else:
        for line in rep.lines:
            print(line)
    if cmd.output and rep.document is not None:
        with open(cmd.output, "w") as fh:
            fh.write(gio.canonical(rep.document) + "\n")
    return rep.status


if __name__ == "__main__":
    sys.exit(main())
