import io
import json

import pytest

from twodd import arclist
from twodd.certificate import Certificate
from twodd.certify import verify_certificate
from twodd.cli import EXIT_CAP, EXIT_INPUT, EXIT_OK, EXIT_USAGE, main
from twodd.fixtures import odd_split_example, closed_pair_example

DATA = __import__("twodd").__path__[0] + "/data/"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == EXIT_OK
    return json.loads(out)


def test_certify_odd_split_example(capsys):
    rep = run_json(capsys, "certify", DATA + "odd_split_example.2dd")
    assert (rep["verdict"], rep["method"], rep["verified"]) == ("NonHamiltonian", "split_parity", True)
    assert rep["counts"]["acs"] == 4
    assert set(rep["timings"]) == {"certify", "verify"}


def test_certify_json_reverifies(capsys):
    rep = run_json(capsys, "certify", DATA + "closed_pair_example.2dd")
    cert = Certificate.from_dict(rep)
    assert cert.method == "closed_subset"
    assert verify_certificate(closed_pair_example(), cert)


def test_certify_brute_method(capsys):
    rep = run_json(capsys, "certify", "--method", "brute", DATA + "odd_split_example.2dd")
    assert (rep["method"], rep["witness"]["n_factors"]) == ("brute_force", 16)


def test_certify_stdin(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO(arclist.serialize(odd_split_example())))
    rep = run_json(capsys, "certify", "-")
    assert rep["method"] == "split_parity"


def test_text_output(capsys):
    code, out, _ = run(capsys, "certify", DATA + "odd_split_example.2dd")
    assert code == EXIT_OK
    assert "verdict: NonHamiltonian" in out and "method: split_parity" in out


def test_decompose_closed_pair_example(capsys):
    rep = run_json(capsys, "decompose", DATA + "closed_pair_example.2dd")
    acs = rep["acs"]
    assert [a["length"] for a in acs] == [30, 30]
    assert all(a["closed"] and not a["clean"] for a in acs)


def test_factors_odd_split_example(capsys):
    rep = run_json(capsys, "factors", DATA + "odd_split_example.2dd")
    assert len(rep["factors"]) == 16
    assert min(f["index"] for f in rep["factors"]) == 3


def test_classify_xclean(capsys):
    rep = run_json(capsys, "classify-ac", DATA + "xclean.2dd")
    (c,) = rep["classes"]
    assert (c["name"], c["open_factors"], c["open_routes"]) == ("X_clean", 2, 2)


def test_classify_graph_lists_each_ac(capsys, tmp_path):
    path = tmp_path / "two.2dd"
    path.write_text(run(capsys, "construct", "closed-splice", DATA + "xc2l.2dd", DATA + "x2s.2dd")[1])
    rep = run_json(capsys, "classify-ac", str(path))
    assert [c["name"] for c in rep["classes"]] == ["Xc_2L", "X_2S"]


def test_classify_rejects_long_acs(capsys):
    assert run(capsys, "classify-ac", DATA + "closed_pair_example.2dd")[0] == EXIT_INPUT


def test_routes(capsys):
    rep = run_json(capsys, "routes", DATA + "x2s.2dd")
    assert rep["counts"]["open_routes"] == 1


def test_quotient_closed_pair_example_empty(capsys):
    rep = run_json(capsys, "quotient", DATA + "closed_pair_example.2dd", "--k", "0")
    assert rep["counts"]["minors"] == 0


def test_enumerate_and_census(capsys):
    code, out, err = run(capsys, "enumerate", "B6_1")
    assert code == EXIT_OK and "3 graphs" in err
    rep = run_json(capsys, "census", "B6_2")
    assert rep["counts"]["total"] == 26


def test_construct_roundtrip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "closed-splice", DATA + "xc2l.2dd", DATA + "x2s.2dd")
    assert code == EXIT_OK
    path = tmp_path / "out.2dd"
    path.write_text(out)
    rep = run_json(capsys, "certify", str(path))
    assert rep["verdict"] == "NonHamiltonian" and rep["verified"]


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", DATA + "odd_split_example.2dd", "--highlight-ac", "0")
    assert code == EXIT_OK and out.startswith("digraph")


def test_missing_file_is_input_error(capsys, tmp_path):
    code, _, err = run(capsys, "certify", str(tmp_path / "nope.2dd"))
    assert code == EXIT_INPUT and "input error" in err


def test_malformed_input(capsys, tmp_path):
    path = tmp_path / "bad.2dd"
    path.write_text("0 1 2\n1 1 2\n2 1 2\n")
    assert run(capsys, "decompose", str(path))[0] == EXIT_INPUT


def test_unsaturated_certify(capsys):
    assert run(capsys, "certify", DATA + "xclean.2dd")[0] == EXIT_INPUT


def test_budget_exceeded(capsys):
    assert run(capsys, "census", "B6_3", "--budget", "50")[0] == EXIT_CAP


@pytest.mark.parametrize("argv", [
    ["certify"],
    ["bogus"],
    ["enumerate"],
    ["enumerate", "B7_2"],
    ["quotient", DATA + "closed_pair_example.2dd", "--k", "a,b"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_help_is_ok(capsys):
    assert run(capsys, "--help")[0] == EXIT_OK
