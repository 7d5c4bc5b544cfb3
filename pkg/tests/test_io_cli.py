import json
import subprocess
import sys

import pytest
from hypothesis import given, settings

from fingroupoid import cyclic, discrete_groupoid, group_groupoid, pair_groupoid, trivial_group
from fingroupoid.bibundle import bibundle_of_functor
from fingroupoid.cli import main
from fingroupoid.corpus import homomorphism_functor, regular_z2_ses
from fingroupoid.io import Reader, canonical, dump_bibundle, dump_functor, dump_groupoid, dump_matrix
from strategies import functors, groupoids


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(p)


def structured(capsys, *argv):
    status = main([*argv, "--format", "structured"])
    body = json.loads(capsys.readouterr().out)
    assert body["status"] == status
    return status, body["result"]


def z4_onto_z2():
    return homomorphism_functor(cyclic(4), cyclic(2), {x: x % 2 for x in range(4)})


def z2_into_z4():
    return homomorphism_functor(cyclic(2), cyclic(4), {0: 0, 1: 2})


# ----------------------------------------------------------------- validate

def test_validate_z2(tmp_path, capsys):
    path = write(tmp_path, "z2.grpd", dump_groupoid(group_groupoid(cyclic(2))))
    status, res = structured(capsys, "validate", path)
    assert status == 0 and res["valid"] and res["morphisms"] == 2


def test_validate_reports_broken_tables_with_witnesses(tmp_path, capsys):
    doc = dump_groupoid(group_groupoid(cyclic(2)))
    doc["compose"] = [row if row[:2] != ["1", "1"] else ["1", "1", "1"] for row in doc["compose"]]
    status, res = structured(capsys, "validate", write(tmp_path, "bad.grpd", doc))
    assert status == 1 and not res["valid"]
    assert any("1" in v["witness"] for v in res["violations"])


def test_validate_flags_a_broken_functor(tmp_path, capsys):
    doc = dump_functor(z4_onto_z2())
    doc["arrow_map"]["1"] = "0"
    status, res = structured(capsys, "validate", write(tmp_path, "f.json", doc))
    assert status == 1 and not res["valid"]
    assert res["violations"][0]["kind"]


def test_validate_bibundle(tmp_path, capsys):
    B = bibundle_of_functor(z4_onto_z2())
    status, res = structured(capsys, "validate", write(tmp_path, "b.json", dump_bibundle(B)))
    assert status == 0 and res["carrier"] == 2


@pytest.mark.parametrize("mutate", [
    lambda d: d.update(colour="red"),
    lambda d: d["morphisms"][0].update(weight=1),
    lambda d: d.pop("identity"),
], ids=["top-level", "nested", "missing"])
def test_unknown_or_missing_fields_are_input_errors(tmp_path, capsys, mutate):
    doc = dump_groupoid(pair_groupoid(["a", "b"]))
    mutate(doc)
    status, res = structured(capsys, "validate", write(tmp_path, "g.grpd", doc))
    assert status == 2 and res["error"] == "ParseError"


def test_unreadable_input(tmp_path, capsys):
    status, res = structured(capsys, "validate", write(tmp_path, "g.grpd", "{not json"))
    assert status == 2 and res["location"].startswith("line 1")
    status, _ = structured(capsys, "validate", str(tmp_path / "missing.grpd"))
    assert status == 2


def test_functor_with_extra_arrow_images_is_rejected(tmp_path, capsys):
    doc = dump_functor(z4_onto_z2())
    doc["arrow_map"]["9"] = "0"
    status, res = structured(capsys, "gerbe-check", write(tmp_path, "f.json", doc))
    assert status == 2 and res["error"] == "ParseError"


def test_wrong_arity_is_a_usage_error(tmp_path, capsys):
    path = write(tmp_path, "z2.grpd", dump_groupoid(group_groupoid(cyclic(2))))
    status, res = structured(capsys, "morita", path)
    assert status == 2 and res["error"] == "Usage"


# ------------------------------------------------------------------- morita

def test_three_points_are_not_a_point(tmp_path, capsys):
    a = write(tmp_path, "a.grpd", dump_groupoid(discrete_groupoid(["x", "y", "z"])))
    b = write(tmp_path, "b.grpd", dump_groupoid(group_groupoid(trivial_group())))
    assert main(["morita", a, b]) == 1
    assert "component count 3 ≠ 1" in capsys.readouterr().out
    status, res = structured(capsys, "morita", a, b)
    assert status == 1 and res["report"] == "component count 3 ≠ 1"


def test_pair_groupoid_is_a_point_with_a_witness_file(tmp_path, capsys):
    a = write(tmp_path, "a.grpd", dump_groupoid(pair_groupoid(["x", "y", "z"])))
    b = write(tmp_path, "b.grpd", dump_groupoid(group_groupoid(trivial_group())))
    out = tmp_path / "w.json"
    status, res = structured(capsys, "morita", a, b, "--output", str(out))
    assert status == 0 and res["witness_verified"]
    w = json.loads(out.read_text())
    assert w["kind"] == "span" and set(w) >= {"apex", "left", "right"}
    # the legs written out are themselves functors the reader accepts
    Reader("w.left").functor(w["left"])


def test_isotropy_cap_is_an_input_error(tmp_path, capsys):
    a = write(tmp_path, "a.grpd", dump_groupoid(group_groupoid(cyclic(4))))
    status, res = structured(capsys, "morita", a, a, "--cap", "2")
    assert status == 2 and res["error"] == "CapExceeded"


# ------------------------------------------------------------------ compose

def test_compose_two_functors(tmp_path, capsys):
    p = write(tmp_path, "p.json", dump_functor(homomorphism_functor(cyclic(8), cyclic(4), {x: x % 4 for x in range(8)})))
    q = write(tmp_path, "q.json", dump_functor(z4_onto_z2()))
    status, res = structured(capsys, "compose", p, q)
    assert status == 0 and res["carrier"] == 2 and res["valid"]


def test_compose_with_mismatched_middle(tmp_path, capsys):
    p = write(tmp_path, "p.json", dump_functor(z4_onto_z2()))
    status, res = structured(capsys, "compose", p, p)
    assert status == 2 and res["error"] == "DomainMismatch"


# -------------------------------------------------------------- extensions

def test_gerbe_check_on_z4_over_z2(tmp_path, capsys):
    path = write(tmp_path, "ext.grpd", dump_functor(z4_onto_z2()))
    status, res = structured(capsys, "gerbe-check", path)
    assert status == 0
    assert res["gerbe"] is True and res["objects_lift"] and res["arrows_lift"]


def test_gerbe_check_names_the_unlifted_arrow(tmp_path, capsys):
    path = write(tmp_path, "inc.json", dump_functor(z2_into_z4()))
    status, res = structured(capsys, "gerbe-check", path)
    assert status == 1 and not res["arrows_lift"]
    assert res["arrow_witness"][2] in ("1", "3")


def test_extension_induce(tmp_path, capsys):
    path = write(tmp_path, "ext.json", dump_functor(z4_onto_z2()))
    out = tmp_path / "induced.json"
    status, res = structured(capsys, "extension-induce", path, "--output", str(out))
    assert status == 0 and res["G_morphisms"] == 4 and res["H_morphisms"] == 2
    Reader("induced").functor(json.loads(out.read_text()))
    status, res = structured(capsys, "extension-induce", write(tmp_path, "inc.json", dump_functor(z2_into_z4())))
    assert status == 1 and res["error"] == "NotFull"


def test_pullback_of_a_groupoid(tmp_path, capsys):
    G = dump_groupoid(pair_groupoid(["a", "b"]))
    ok = write(tmp_path, "ok.json", {"groupoid": G, "map": {"0": "a", "1": "b", "2": "b"}})
    status, res = structured(capsys, "pullback", ok)
    assert status == 0 and res["objects"] == 3 and res["morphisms"] == 9 and res["morita_morphism"]
    short = write(tmp_path, "short.json", {"groupoid": G, "map": {"0": "a"}})
    status, res = structured(capsys, "pullback", short)
    assert status == 1 and res["witness"] == "b"
    stray = write(tmp_path, "stray.json", {"groupoid": G, "map": {"0": "c"}})
    assert structured(capsys, "pullback", stray)[0] == 2


def test_pullback_of_an_extension(tmp_path, capsys):
    doc = {"extension": dump_functor(z4_onto_z2()), "map": {"0": "*", "1": "*"}}
    status, res = structured(capsys, "pullback", write(tmp_path, "e.json", doc))
    assert status == 0 and res["G_morphisms"] == 16 and res["H_morphisms"] == 8


# ------------------------------------------------------------------ descent

def test_descent_check_for_bz2(tmp_path, capsys):
    doc = {"presheaf": {"kind": "bg", "groupoid": dump_groupoid(group_groupoid(cyclic(2)))},
           "base": ["u", "v"], "cover": [["u"], ["v"]]}
    status, res = structured(capsys, "descent-check", write(tmp_path, "d.json", doc))
    assert status == 0 and res["full"] and res["faithful"] and res["ess_surjective"]


def test_descent_check_reports_each_verdict(tmp_path, capsys):
    doc = {"presheaf": {"kind": "globally-constant", "values": ["p", "q"]},
           "base": ["u", "v"], "cover": [["u"], {"domain": ["w"], "images": ["v"]}]}
    path = write(tmp_path, "d.json", doc)
    assert main(["descent-check", path]) == 1
    text = capsys.readouterr().out
    assert "full: True" in text and "essentially surjective: False" in text
    doc["cover"] = [["u", "z"]]
    assert structured(capsys, "descent-check", write(tmp_path, "bad.json", doc))[0] == 2


# -------------------------------------------------------------------- split

def split_doc(ses):
    labels = {}
    G = dump_groupoid(ses.B.groupoid, labels)
    ol, ml = labels["objects"], labels["morphisms"]

    def bundle(V):
        return {"dim": {ol[a]: V.dim[a] for a in V.groupoid.objects},
                "mat": {ml[g]: dump_matrix(M) for g, M in V.mat.items()}}

    return {"groupoid": G, "A": bundle(ses.A), "B": bundle(ses.B), "C": bundle(ses.C),
            "j": {ol[a]: dump_matrix(M) for a, M in ses.j.items()},
            "q": {ol[a]: dump_matrix(M) for a, M in ses.q.items()}}


def test_split_regular_z2(tmp_path, capsys):
    path = write(tmp_path, "s.json", split_doc(regular_z2_ses()))
    status, res = structured(capsys, "split", path)
    assert status == 0 and res["splitting"] == {"*": [["1/2"], ["-1/2"]]}


def test_split_rejects_non_sequences(tmp_path, capsys):
    doc = split_doc(regular_z2_ses())
    doc["q"]["*"] = [["1", "1"]]
    assert structured(capsys, "split", write(tmp_path, "s.json", doc))[0] == 2
    doc["q"]["*"] = [["1", "x"]]
    status, res = structured(capsys, "split", write(tmp_path, "t.json", doc))
    assert status == 2 and res["error"] == "ParseError"


# --------------------------------------------------------------- round trips

@settings(max_examples=60, deadline=None)
@given(groupoids(max_objects=3, max_morphisms=24))
def test_groupoid_documents_round_trip(G):
    doc = dump_groupoid(G)
    again = dump_groupoid(Reader("mem").groupoid(json.loads(canonical(doc))))
    assert canonical(again) == canonical(doc)


@settings(max_examples=40, deadline=None)
@given(functors(max_morphisms=12))
def test_functor_and_bibundle_documents_round_trip(F):
    doc = dump_functor(F)
    assert canonical(dump_functor(Reader("mem").functor(json.loads(canonical(doc))))) == canonical(doc)
    bdoc = dump_bibundle(bibundle_of_functor(F))
    assert canonical(dump_bibundle(Reader("mem").bibundle(json.loads(canonical(bdoc))))) == canonical(bdoc)


def test_structured_output_is_stable(tmp_path, capsys):
    a = write(tmp_path, "a.grpd", dump_groupoid(pair_groupoid(["x", "y"])))
    b = write(tmp_path, "b.grpd", dump_groupoid(group_groupoid(trivial_group())))
    outs = []
    for _ in range(2):
        main(["morita", a, b, "--format", "structured", "--seed", "7"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_module_entry_point(tmp_path):
    path = write(tmp_path, "z2.grpd", dump_groupoid(group_groupoid(cyclic(2))))
    done = subprocess.run([sys.executable, "-m", "fingroupoid.cli", "validate", path], capture_output=True, text=True)
    assert done.returncode == 0 and done.stdout.startswith("valid groupoid")
