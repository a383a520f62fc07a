import json

import pytest
from click.testing import CliRunner

import pdgn.cli as cli
from pdgn.atlas import reference_table
from pdgn.flows import plabic_weight_vector
from pdgn.plabic import kw_graph
from pdgn.polygon import Triangulation, palm_triangulation

OCTAGON = {"n": 8, "diagonals": [[1, 3], [3, 5], [3, 6], [1, 6], [1, 7]]}


def run(args, env=None):
    env = {"PDGN_JOBS": "1"} if env is None else {"PDGN_JOBS": None, **env}
    return CliRunner().invoke(cli.main, args, env=env)


def write(path, data):
    path.write_text(json.dumps(data) if not isinstance(data, str) else data)
    return str(path)


def strip_timings(report):
    return {k: v for k, v in report.items() if k != "timings"}


# -- triangulations -----------------------------------------------------------

@pytest.mark.parametrize("n,count", [(4, 2), (5, 5), (8, 132)])
def test_triangulation_lines(n, count):
    res = run(["triangulations", "--n", str(n)])
    assert res.exit_code == 0
    lines = res.output.strip().splitlines()
    assert len(lines) == count
    assert all(Triangulation.from_json(x).n == n for x in lines)


def test_triangulations_to_file(tmp_path):
    out = tmp_path / "t.jsonl"
    res = run(["triangulations", "--n", "6", "--out", str(out)])
    assert res.exit_code == 0
    assert len(out.read_text().splitlines()) == 14
    report = json.loads(res.output)
    assert report["pass"] and report["checks"][0]["name"] == "catalan_count"


@pytest.mark.parametrize("n", ["3", "13"])
def test_triangulations_range(n):
    res = run(["triangulations", "--n", n])
    assert res.exit_code == 2
    assert "4..12" in res.output


# -- gr2 verify ---------------------------------------------------------------

def test_gr2_verify_pentagon():
    res = run(["gr2", "verify", "--n", "5"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["pass"] and report["checked"] == 5 and report["counterexamples"] == []
    assert report["inputs"] == {"n": 5, "engine": "generators"}


def test_gr2_verify_buchberger(tmp_path):
    out = tmp_path / "r.json"
    res = run(["gr2", "verify", "--n", "6", "--engine", "buchberger", "--out", str(out)])
    assert res.exit_code == 0
    report = json.loads(out.read_text())
    assert report["pass"] and report["checked"] == 14


@pytest.mark.parametrize("args", [["--n", "9"], ["--n", "7", "--engine", "buchberger"],
                                  ["--n", "3"]])
def test_gr2_verify_range(args):
    assert run(["gr2", "verify", *args]).exit_code == 2


def test_gr2_verify_unknown_engine():
    assert run(["gr2", "verify", "--n", "5", "--engine", "magic"]).exit_code == 2


def test_report_is_deterministic():
    a = json.loads(run(["gr2", "verify", "--n", "6"]).output)
    b = json.loads(run(["gr2", "verify", "--n", "6"], env={"PDGN_JOBS": "2"}).output)
    assert strip_timings(a) == strip_timings(b)
    assert set(a["timings"]) == {"total_seconds"}


# -- mutate -------------------------------------------------------------------

def test_mutate_square(tmp_path):
    path = write(tmp_path / "t.json", {"n": 4, "diagonals": [[1, 3]]})
    res = run(["mutate", "--in", path, "--diagonal", "1,3"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    (change,) = report["changed"]
    assert change["quadruple"] == [1, 2, 3, 4]
    assert (change["dropped_before"], change["dropped_after"]) == ("il|jk", "ij|kl")
    assert report["flipped"]["diagonals"] == [[2, 4]]


def test_mutate_octagon(tmp_path):
    path = write(tmp_path / "t.json", OCTAGON)
    res = run(["mutate", "--in", path, "--diagonal", "3,6"])
    assert res.exit_code == 0
    report = json.loads(res.output)
    regions = report["regions"]
    for change in report["changed"]:
        q = set(change["quadruple"])
        assert all(q & set(regions[x]) for x in "ADEC")
    assert len(report["changed"]) == 12
    assert [1, 5] in report["flipped"]["diagonals"]


def test_mutate_back_and_forth(tmp_path):
    first = json.loads(run(["mutate", "--in", write(tmp_path / "a.json", OCTAGON),
                            "--diagonal", "3,6"]).output)
    back = json.loads(run(["mutate", "--in", write(tmp_path / "b.json", first["flipped"]),
                           "--diagonal", "1,5"]).output)
    assert Triangulation.from_dict(back["flipped"]) == Triangulation.from_dict(OCTAGON)
    assert {tuple(c["quadruple"]) for c in back["changed"]} == \
        {tuple(c["quadruple"]) for c in first["changed"]}


@pytest.mark.parametrize("payload,diagonal", [
    ({"n": 4, "diagonals": [[1, 3]]}, "2,4"),
    ({"n": 4, "diagonals": [[1, 3]]}, "1-3"),
    ({"n": 5, "diagonals": [[1, 3]]}, "1,3"),
    ("{broken", "1,3"),
    ({"diagonals": []}, "1,3"),
])
def test_mutate_bad_input(tmp_path, payload, diagonal):
    path = write(tmp_path / "t.json", payload)
    assert run(["mutate", "--in", path, "--diagonal", diagonal]).exit_code == 2


def test_mutate_missing_file(tmp_path):
    assert run(["mutate", "--in", str(tmp_path / "nope.json"), "--diagonal", "1,3"]).exit_code == 2


# -- tropical check -----------------------------------------------------------

def test_tropical_palm_pentagon(tmp_path):
    w = plabic_weight_vector(kw_graph(palm_triangulation(5)))
    assert w.to_dict() == {"k": 2, "n": 5, "order": "lex",
                           "weights": [0, 0, 0, 0, 0, 0, 0, 2, 1, 1]}
    res = run(["tropical", "check", "--in", write(tmp_path / "w.json", w.to_dict())])
    assert res.exit_code == 0 and json.loads(res.output)["pass"]


def test_tropical_failure_names_quadruple(tmp_path):
    path = write(tmp_path / "w.json", {"k": 2, "n": 4, "order": "lex",
                                       "weights": [2, 1, 0, 0, 1, 2]})
    res = run(["tropical", "check", "--in", path])
    assert res.exit_code == 1
    report = json.loads(res.output)
    assert not report["pass"]
    assert report["counterexamples"][0]["counterexample"]["quadruple"] == [1, 2, 3, 4]


def test_tropical_gr36_row(tmp_path):
    row = reference_table()[4]
    path = write(tmp_path / "w.json", {"k": 3, "n": 6, "order": "paper36",
                                       "weights": list(row.weight)})
    res = run(["tropical", "check", "--in", path])
    assert res.exit_code == 0
    report = json.loads(res.output)
    assert report["binomial"] and report["generators"] >= 35


def test_tropical_gr36_monomial(tmp_path):
    """A generic lex-like weight gives a monomial initial ideal."""
    weights = [2 ** r for r in range(20)]
    path = write(tmp_path / "w.json", {"k": 3, "n": 6, "order": "lex", "weights": weights})
    assert run(["tropical", "check", "--in", path]).exit_code == 1


@pytest.mark.parametrize("payload", [
    {"k": 2, "n": 4, "order": "lex", "weights": [0, 0, 0]},
    {"k": 2, "n": 4, "order": "lex", "weights": [0.5, 0, 0, 0, 0, 0]},
    {"k": 2, "n": 4, "order": "sideways", "weights": [0] * 6},
    {"k": 3, "n": 7, "order": "lex", "weights": [0] * 35},
    "not json",
])
def test_tropical_bad_input(tmp_path, payload):
    assert run(["tropical", "check", "--in", write(tmp_path / "w.json", payload)]).exit_code == 2


# -- jobs ---------------------------------------------------------------------

def test_jobs_validation():
    assert run(["triangulations", "--n", "4", "--jobs", "0"], env={}).exit_code == 2
    assert run(["triangulations", "--n", "4"], env={"PDGN_JOBS": "many"}).exit_code == 2
    assert run(["triangulations", "--n", "4", "--jobs", "0"], env={"PDGN_JOBS": "1"}).exit_code == 0


# -- gr36 table ---------------------------------------------------------------

@pytest.mark.slow
@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_gr36_table(tmp_path, monkeypatch, gr36_atlas, fmt):
    monkeypatch.setattr(cli, "atlas", lambda jobs: gr36_atlas)
    out = tmp_path / f"atlas.{fmt}"
    res = run(["gr36", "table", "--out", str(out), "--format", fmt])
    report = json.loads(res.output)
    status = {c["name"]: c["pass"] for c in report["checks"]}
    assert status == {"row_count": True, "internal_labels_match": True, "weights_match": True,
                      "classes_match": True, "monomial_free": True, "binomial": False}
    # the two GG rows have four-term quadrics in their reduced bases
    assert res.exit_code == 1
    assert len(report["counterexamples"][0]["counterexample"]) == 2
    text = out.read_text()
    if fmt == "csv":
        assert len(text.splitlines()) == 35
        assert text.splitlines()[1].endswith('"0,0,1,1,1,1,1,1,1,4,1,1,1,1,1,4,4,4,5,5",GG,49')
    else:
        assert len(json.loads(text)) == 34
