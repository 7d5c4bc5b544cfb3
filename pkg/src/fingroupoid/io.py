"""JSON interchange for groupoids, functors, bibundles, covers and sequences.

Every reader rejects unknown fields.  Writers emit canonical documents
(sorted keys, labels as strings) so that ``dump(load(dump(x))) == dump(x)``.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .actions import LEFT, RIGHT, GroupoidAction
from .bibundle import Bibundle, bibundle_violations
from .core import FiniteGroupoid, GroupoidFunctor, category_violations, groupoid_violations, FiniteCategory
from .errors import ValidationError
from .linrep import GroupoidVectorBundle, format_fraction


class ParseError(ValueError):
    def __init__(self, path, location, message):
        self.path, self.location = path, location
        super().__init__(f"{path}: at {location}: {message}")


# ------------------------------------------------------------------ labels

def labeller(items):
    """Injective map from labels to strings; strings stay as they are."""
    items = list(items)
    out = {x: (x if isinstance(x, str) else json.dumps(_plain(x), separators=(",", ":"))) for x in items}
    if len(set(out.values())) < len(out):
        out = {x: repr(x) for x in items}
    if len(set(out.values())) < len(out):
        out = {x: f"{i}:{x!r}" for i, x in enumerate(items)}
    return out


def _plain(x):
    if isinstance(x, tuple):
        return [_plain(y) for y in x]
    if isinstance(x, frozenset):
        return sorted(_plain(y) for y in x)
    if isinstance(x, Fraction):
        return format_fraction(x)
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return repr(x)


# ----------------------------------------------------------------- reading

class Reader:
    def __init__(self, path):
        self.path = path

    def fail(self, where, msg):
        raise ParseError(self.path, where, msg)

    def fields(self, doc, where, required, optional=()):
        if not isinstance(doc, dict):
            self.fail(where, "expected an object")
        unknown = set(doc) - set(required) - set(optional)
        if unknown:
            self.fail(where, f"unknown field(s) {sorted(unknown)}")
        missing = [k for k in required if k not in doc]
        if missing:
            self.fail(where, f"missing field(s) {missing}")
        return doc

    def strings(self, xs, where):
        if not isinstance(xs, list) or not all(isinstance(x, str) for x in xs):
            self.fail(where, "expected a list of strings")
        if len(set(xs)) != len(xs):
            self.fail(where, "duplicate ids")
        return xs

    def groupoid_tables(self, doc, where="$"):
        self.fields(doc, where, ("objects", "morphisms", "identity", "inverse"), ("compose",))
        objects = self.strings(doc["objects"], f"{where}.objects")
        mors, src, tgt = [], {}, {}
        if not isinstance(doc["morphisms"], list):
            self.fail(f"{where}.morphisms", "expected a list")
        for k, m in enumerate(doc["morphisms"]):
            w = f"{where}.morphisms[{k}]"
            self.fields(m, w, ("id", "src", "tgt"))
            if m["id"] in src:
                self.fail(w, f"duplicate morphism id {m['id']!r}")
            mors.append(m["id"])
            src[m["id"]], tgt[m["id"]] = m["src"], m["tgt"]
        comp = {}
        for k, row in enumerate(doc.get("compose", [])):
            if not (isinstance(row, list) and len(row) == 3):
                self.fail(f"{where}.compose[{k}]", "expected [f, g, g∘f]")
            comp[row[0], row[1]] = row[2]
        ident, inv = doc["identity"], doc["inverse"]
        if not isinstance(ident, dict) or not isinstance(inv, dict):
            self.fail(where, "identity and inverse must be objects")
        return objects, mors, src, tgt, comp, ident, inv

    def groupoid(self, doc, where="$"):
        objects, mors, src, tgt, comp, ident, inv = self.groupoid_tables(doc, where)
        found = category_violations(objects, mors, src, tgt, comp, ident)
        if not found:
            found = groupoid_violations(FiniteCategory(objects, mors, src, tgt, comp, ident), inv)
        if found:
            raise ValidationError(f"groupoid at {where}", found)
        return FiniteGroupoid(objects, mors, src, tgt, comp, ident, inv)

    def functor(self, doc, where="$"):
        self.fields(doc, where, ("source", "target", "arrow_map"), ("object_map",))
        G = self.groupoid(doc["source"], f"{where}.source")
        H = self.groupoid(doc["target"], f"{where}.target")
        f0 = self.mapping(doc.get("object_map", {a: a for a in G.objects}), f"{where}.object_map", G.objects)
        f1 = self.mapping(doc["arrow_map"], f"{where}.arrow_map", G.morphisms)
        for a, b in f0.items():
            if not H.has_object(b):
                self.fail(f"{where}.object_map.{a}", f"unknown target object {b!r}")
        for g, h in f1.items():
            if not H.has_morphism(h):
                self.fail(f"{where}.arrow_map.{g}", f"unknown target arrow {h!r}")
        return GroupoidFunctor(G, H, f0, f1)

    def action(self, doc, G, carrier, side, where):
        self.fields(doc, where, ("anchor", "act"))
        table = {}
        for k, row in enumerate(doc["act"]):
            if not (isinstance(row, list) and len(row) == 3):
                self.fail(f"{where}.act[{k}]", "expected a triple")
            table[row[0], row[1]] = row[2]
        return GroupoidAction(G, carrier, doc["anchor"], table, side)

    def bibundle(self, doc, where="$"):
        self.fields(doc, where, ("left", "right", "carrier", "left_action", "right_action"))
        G = self.groupoid(doc["left"], f"{where}.left")
        H = self.groupoid(doc["right"], f"{where}.right")
        carrier = self.strings(doc["carrier"], f"{where}.carrier")
        left = self.action(doc["left_action"], G, carrier, LEFT, f"{where}.left_action")
        right = self.action(doc["right_action"], H, carrier, RIGHT, f"{where}.right_action")
        return Bibundle(left, right)

    def fraction(self, x, where):
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            self.fail(where, f"expected an integer or a rational string, got {x!r}")
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            self.fail(where, f"bad rational {x!r}")

    def mapping(self, doc, where, keys=None):
        """A JSON object; with ``keys``, exactly those keys."""
        if not isinstance(doc, dict):
            self.fail(where, "expected an object")
        if keys is not None:
            extra = [k for k in doc if k not in keys]
            if extra:
                self.fail(where, f"unknown key(s) {sorted(extra)}")
            missing = [k for k in keys if k not in doc]
            if missing:
                self.fail(where, f"no entry for {missing[0]!r}")
        return doc

    def matrix(self, rows, where):
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            self.fail(where, "expected a list of rows")
        return tuple(tuple(self.fraction(x, f"{where}[{i}][{k}]") for k, x in enumerate(r)) for i, r in enumerate(rows))

    def vector_bundle(self, doc, G, where):
        self.fields(doc, where, ("dim", "mat"))
        dim = self.mapping(doc["dim"], f"{where}.dim", G.objects)
        for a, d in dim.items():
            if isinstance(d, bool) or not isinstance(d, int) or d < 0:
                self.fail(f"{where}.dim.{a}", "expected a non-negative integer")
        mats = self.mapping(doc["mat"], f"{where}.mat", G.morphisms)
        mat = {g: self.matrix(M, f"{where}.mat.{g}") for g, M in mats.items()}
        return GroupoidVectorBundle(G, dict(dim), mat)


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise ParseError(path, f"line {e.lineno} column {e.colno}", e.msg) from None
    except OSError as e:
        raise ParseError(path, "-", str(e)) from None


# ----------------------------------------------------------------- writing

def dump_groupoid(G, labels=None):
    ol = labeller(G.objects)
    ml = labeller(G.morphisms)
    if labels is not None:
        labels["objects"], labels["morphisms"] = ol, ml
    return {
        "objects": [ol[a] for a in G.objects],
        "morphisms": [{"id": ml[f], "src": ol[G.source(f)], "tgt": ol[G.target(f)]} for f in G.morphisms],
        "compose": [[ml[f], ml[g], ml[G.compose(f, g)]] for f in G.morphisms for g in G.out_arrows(G.target(f))],
        "identity": {ol[a]: ml[G.identity(a)] for a in G.objects},
        "inverse": {ml[f]: ml[G.inverse(f)] for f in G.morphisms},
    }


def dump_functor(F):
    ls, lt = {}, {}
    doc = {"source": dump_groupoid(F.source, ls), "target": dump_groupoid(F.target, lt)}
    doc["object_map"] = {ls["objects"][a]: lt["objects"][F.obj(a)] for a in F.source.objects}
    doc["arrow_map"] = {ls["morphisms"][g]: lt["morphisms"][F.arr(g)] for g in F.source.morphisms}
    return doc


def dump_bibundle(B):
    lg, lh = {}, {}
    doc = {"left": dump_groupoid(B.G, lg), "right": dump_groupoid(B.H, lh)}
    pl = labeller(B.carrier)
    doc["carrier"] = [pl[p] for p in B.carrier]
    doc["left_action"] = {
        "anchor": {pl[p]: lg["objects"][B.left_anchor[p]] for p in B.carrier},
        "act": [[lg["morphisms"][g], pl[p], pl[q]] for (g, p), q in B.left.table.items()],
    }
    doc["right_action"] = {
        "anchor": {pl[p]: lh["objects"][B.right_anchor[p]] for p in B.carrier},
        "act": [[pl[p], lh["morphisms"][h], pl[q]] for (p, h), q in B.right.table.items()],
    }
    return doc


def dump_matrix(M):
    return [[format_fraction(x) for x in row] for row in M]


def dump_witness(w):
    doc = {"kind": w.kind, "functor": dump_functor(w.functor), "inverse": dump_functor(w.inverse)}
    if w.kind == "span":
        doc["apex"] = dump_groupoid(w.apex)
        doc["left"] = dump_functor(w.left)
        doc["right"] = dump_functor(w.right)
    return doc


def canonical(doc):
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False)


def bibundle_valid(B):
    return not bibundle_violations(B.left, B.right)


__all__ = [
    "ParseError", "Reader", "labeller", "load_json", "dump_groupoid", "dump_functor",
    "dump_bibundle", "dump_matrix", "dump_witness", "canonical",
]
