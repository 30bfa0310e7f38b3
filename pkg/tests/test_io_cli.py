import json
from pathlib import Path

import pytest

from cycpoly.cli import main
from cycpoly.errors import ParseError
from cycpoly.fixtures import MATROIDS, fano
from cycpoly.io import format_matroid, parse_matroid
from cycpoly.matroid import same_circuits

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("name", sorted(MATROIDS))
def test_matroid_round_trip(name):
    M = MATROIDS[name]()
    N = parse_matroid(format_matroid(M))
    assert N.labels == M.labels and same_circuits(M, N)


def test_circuit_layout():
    M = parse_matroid("circuits 1\nground a b c d\na b c\n")
    assert M.label_circuits() == [frozenset("abc")]


@pytest.mark.parametrize("text", ["", "binary 2 3\n101\n", "binary 1 2\n12\nlabels a b\n",
                                  "circuits 1\nground a\nb\n", "matrix\n"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matroid(text)


def test_data_files_load():
    M = parse_matroid((DATA / "fano.matroid").read_text())
    assert same_circuits(M, fano())


def test_circuits_subcommand(capsys):
    code, out, _ = run(capsys, "circuits", str(DATA / "fano.matroid"))
    assert code == 0
    res = json.loads(out)
    assert len(res["circuits"]) == 14 and res["circuits"][0] == ["2", "3", "4"]


def test_cycles_subcommand_on_graph(capsys):
    code, out, _ = run(capsys, "cycles", str(DATA / "k4.graph"))
    assert code == 0 and len(json.loads(out)["cycles"]) == 8


def test_polytope_dimension(capsys):
    code, out, _ = run(capsys, "polytope", "fano")
    assert code == 0 and json.loads(out)["dimension"] == 7


def test_mu_subcommand(capsys):
    code, out, _ = run(capsys, "mu", str(DATA / "k4.graph"))
    res = json.loads(out)
    assert code == 0 and res["mu"] == 4 and res["degree_histogram"] == {"4": 1}


def test_mu_zero_ideal(capsys):
    code, out, _ = run(capsys, "mu", "fano", "--dual", "--method", "fiber")
    res = json.loads(out)
    assert code == 0 and res["zero_ideal"] and res["mu"] is None


def test_mu_cap_exit(capsys):
    code, out, _ = run(capsys, "mu", "fano", "--method", "fiber", "--degree-cap", "3")
    res = json.loads(out)
    assert res["degree_cap_hit"]
    assert code == 0 if res["mu"] is not None else code == 2


def test_minor_subcommand(capsys):
    code, out, _ = run(capsys, "minor", "fanodual", "--target", "k4", "--kind", "g-series")
    assert code == 0 and json.loads(out)["minor_free"] is True
    code, out, _ = run(capsys, "minor", "fanodual", "--target", "k4")
    res = json.loads(out)
    assert res["minor_free"] is False and res["witness"]["steps"]


def test_retract_subcommand(capsys):
    code, out, _ = run(capsys, "retract", "fano", "--E", "4,5,3", "--Eprime", "1,2,6")
    assert code == 0 and json.loads(out)["is_retract"] is True
    code, out, _ = run(capsys, "retract", "fano", "--E", "4,5,3", "--Eprime", "1,2,7")
    res = json.loads(out)
    assert res["is_retract"] is False and res["reason"].startswith("NotACircuit")


def test_retract_unknown_label(capsys):
    code, _, err = run(capsys, "retract", "fano", "--E", "9", "--Eprime", "1")
    assert code == 1 and json.loads(err)["error"] == "ParseError"


def test_graph_emit_pipes_into_mu(capsys, tmp_path):
    code, out, _ = run(capsys, "graph", str(DATA / "k5.graph"), "--dual", "--emit", "matroid")
    assert code == 0
    path = tmp_path / "k5dual.matroid"
    path.write_text(out)
    code, out, _ = run(capsys, "circuits", str(path))
    assert code == 0 and len(json.loads(out)["labels"]) == 10


def test_missing_file(capsys):
    code, _, err = run(capsys, "circuits", "no-such-file.matroid")
    assert code == 1 and "error" in json.loads(err)


def test_text_format(capsys):
    code, out, _ = run(capsys, "circuits", "k4", "--pretty")
    assert code == 0 and out.startswith("labels:")


def test_output_is_deterministic(capsys):
    outs = {run(capsys, "mu", "fano")[1] for _ in range(3)}
    assert len(outs) == 1


def test_verify_paper_subset(capsys):
    code, out, _ = run(capsys, "verify-paper", "--only", "3,6")
    assert code == 0
    assert len(out.strip().splitlines()) == 2 and "fail" not in out
