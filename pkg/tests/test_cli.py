import io
import json
import subprocess
import sys

import pytest

from rectperm.cli import genrect_from_json, genrect_to_json, main
from rectperm.enumeration import brute_count_k_clumped
from rectperm.errors import InvalidGenRect
from rectperm.genrect import gamma
from rectperm.perm import Permutation

EXAMPLE = "8,13,7,5,11,2,14,6,15,9,10,3,1,4,12"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--engine", "2clumped", "--n", "12")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,count" and lines[-1] == "12,89346128"
    _, out, _ = run(capsys, "enumerate", "--engine", "baxter-formula", "--n", "4")
    assert out.splitlines()[-1] == "4,22"
    _, out, _ = run(capsys, "enumerate", "--engine", "1clumped", "--n", "6", "--emit", "json")
    assert json.loads(out)[-1] == {"n": 6, "count": "422"}


def test_enumerate_brute(capsys):
    code, out, _ = run(capsys, "enumerate", "--engine", "brute", "--k", "3", "--n", "7")
    assert code == 0
    assert out.splitlines()[-1] == f"7,{brute_count_k_clumped(7, 3)}"


def test_enumerate_guards(capsys):
    code, _, err = run(capsys, "enumerate", "--engine", "brute", "--k", "2", "--n", "11")
    assert code == 2 and "10" in err
    code, _, _ = run(capsys, "enumerate", "--engine", "brute", "--n", "4")
    assert code == 2
    code, _, err = run(capsys, "enumerate", "--n", "9", "--mem-cap", "10")
    assert code == 2 and "cap" in err


def test_enumerate_threads_identical(capsys):
    outs = {run(capsys, "enumerate", "--n", "10", "--threads", t)[1] for t in ("1", "2", "8")}
    assert len(outs) == 1


def test_map_json(capsys):
    code, out, _ = run(capsys, "map", EXAMPLE)
    assert code == 0
    doc = json.loads(out)
    assert genrect_from_json(doc) == gamma(Permutation.parse(EXAMPLE))
    shuffles = {tuple(w["shuffle"]) for w in doc["walls"]}
    assert {(13, 7, 11, 6), (2, 6, 9, 10, 3)} <= shuffles
    _, out, _ = run(capsys, "map", "1")
    assert json.loads(out)["walls"] == []


def test_map_svg(capsys):
    _, out, _ = run(capsys, "map", "1,2,3", "--emit", "svg")
    assert out.count("<rect ") == 3


def test_inverse(capsys, monkeypatch, tmp_path):
    doc = json.dumps(genrect_to_json(gamma(Permutation.parse("1,2,3"))))
    code, out, _ = run(capsys, "inverse", "-", stdin=doc, monkeypatch=monkeypatch)
    assert (code, out) == (0, "1,2,3\n")
    path = tmp_path / "g.json"
    path.write_text(json.dumps(genrect_to_json(gamma(Permutation.parse("35124")))))
    assert run(capsys, "inverse", str(path))[1] == "3,1,5,2,4\n"


def _example_doc():
    return genrect_to_json(gamma(Permutation.parse(EXAMPLE)))


def _bad_shuffle(doc):
    wall = next(w for w in doc["walls"] if w["shuffle"] == [13, 7, 11, 6])
    wall["shuffle"] = [6, 7, 13, 11]


@pytest.mark.parametrize(
    "mutate, invariant",
    [
        (_bad_shuffle, "shuffle-interleaving"),
        (lambda d: d["walls"].pop(), "walls"),
        (lambda d: d["rects"].pop(), "rect-ids"),
        (lambda d: d["rects"][0].update(x1=d["rects"][0]["x1"] + 1), "diagonal-rectangulation"),
        (lambda d: d.pop("n"), "schema"),
        (lambda d: d.update(n="15"), "schema"),
    ],
)
def test_invalid_documents(mutate, invariant):
    doc = _example_doc()
    mutate(doc)
    with pytest.raises(InvalidGenRect) as err:
        genrect_from_json(doc)
    assert err.value.invariant == invariant


def test_inverse_rejects_illegal_shuffle(capsys, monkeypatch):
    doc = _example_doc()
    _bad_shuffle(doc)
    code, out, err = run(capsys, "inverse", "-", stdin=json.dumps(doc), monkeypatch=monkeypatch)
    assert code == 2 and out == "" and "shuffle-interleaving" in err
    code, _, err = run(capsys, "inverse", "-", stdin="{not json", monkeypatch=monkeypatch)
    assert code == 2


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "bijection", "--n", "6")
    rep = json.loads(out)
    assert code == 0 and rep["pass"]
    assert {c["name"] for c in rep["checks"]} >= {"image-size", "one-2-clumped-per-fiber"}
    for suite in ("congruence", "statistics", "roundtrip"):
        code, out, _ = run(capsys, "verify", suite, "--n", "5")
        assert code == 0 and json.loads(out)["pass"], suite
    code, _, _ = run(capsys, "verify", "congruence", "--n", "8")
    assert code == 2


def test_stats(capsys):
    code, out, _ = run(capsys, "stats", "distribution", "--n", "3")
    assert code == 0 and out == "right_descents,count\n0,1\n1,4\n2,1\n"
    code, out, _ = run(capsys, "stats", "conjecture", "--d", "1", "--n", "7")
    assert code == 0 and out.count("true") == 7
    code, out, _ = run(capsys, "stats", "conjecture", "--d", "2", "--n", "5")
    assert code == 1 and "false" in out
    assert run(capsys, "stats", "conjecture", "--n", "5")[0] == 2


def test_render(capsys, monkeypatch, tmp_path):
    _, a, _ = run(capsys, "render", EXAMPLE, "--diagonal")
    assert a.count("<rect ") == 15 and "<line " in a
    _, b, _ = run(capsys, "render", "-", stdin=json.dumps(_example_doc()), monkeypatch=monkeypatch)
    _, c, _ = run(capsys, "render", "-", stdin=EXAMPLE, monkeypatch=monkeypatch)
    assert b == c
    out = tmp_path / "x.svg"
    assert run(capsys, "render", "1,2", "--out", str(out), "--no-labels")[0] == 0
    assert "<text" not in out.read_text()


def test_console_script_entry():
    res = subprocess.run([sys.executable, "-m", "rectperm.cli", "map", "2,1"], capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout)["n"] == 2
