import json

import pytest

from cexkit.algebra import algebra_from_text, is_iso_witness
from cexkit.catalog import catalog_algebra
from cexkit.cli import main, matrix_from_text, matrix_to_text
from cexkit.cohomology import cocycle_from_text
from cexkit.exact import Matrix
from cexkit.extension import central_extend


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cohomology_example(capsys):
    code, out, _ = run(capsys, "cohomology", "mu0:5")
    assert code == 0
    assert out.splitlines()[0] == "dims (5, 4, 1)"


def test_catalog_round_trip_is_byte_identical(capsys, tmp_path):
    for spec in ("mu1_3:6", "mu2_2:6:alpha=-1/2", "mu0:4"):
        code, text, _ = run(capsys, "catalog", spec)
        f = tmp_path / "alg.json"
        f.write_text(text)
        assert run(capsys, "cohomology", str(f)) == run(capsys, "cohomology", spec)
        assert run(capsys, "--machine", "cohomology", str(f)) == run(capsys, "cohomology", spec, "--machine")


def test_extend_reproduces_the_next_null_filiform(capsys, tmp_path):
    _, out, _ = run(capsys, "cohomology", "mu0:3", "--machine")
    doc = json.loads(out)
    assert doc["dims"] == [3, 2, 1]
    cocycle = tmp_path / "h2gen.json"
    cocycle.write_text(json.dumps(doc["h2"]))
    target = tmp_path / "ext.json"
    assert run(capsys, "extend", "mu0:3", "--cocycle", str(cocycle), "-o", str(target))[0] == 0
    assert target.read_text() == run(capsys, "catalog", "mu0:4")[1]


def test_verify_action_example(capsys):
    code, out, _ = run(capsys, "verify-action", "mu1_1", "--n", "5")
    assert code == 0 and "pass" in out.splitlines()[0]


def test_iso_witness(capsys, tmp_path):
    m = tmp_path / "p.json"
    m.write_text(matrix_to_text(Matrix.identity(5)))
    assert run(capsys, "iso-witness", "mu1_2:5", "mu1_2:5", "--matrix", str(m))[0] == 0
    assert run(capsys, "iso-witness", "mu1_2:5", "mu1_3:5", "--matrix", str(m))[0] == 1


def test_iso_search(capsys):
    code, out, _ = run(capsys, "iso-search", "mu0:4", "mu0:4", "--field", "3", "--machine")
    assert code == 0 and json.loads(out)["witness"] is not None
    code, out, _ = run(capsys, "iso-search", "mu1_1:5", "mu1_2:5", "--field", "2")
    assert code == 1 and "evidence, not proof" in out


def test_reconstruct(capsys):
    code, out, _ = run(capsys, "--machine", "reconstruct", "mu2_5:6")
    assert code == 0
    doc = json.loads(out)
    quotient = algebra_from_text(json.dumps(doc["algebra"]))
    assert quotient.dim + len(doc["cocycle"]["components"]) == 6
    w = matrix_from_text(json.dumps(doc["witness"]))
    ext = central_extend(quotient, cocycle_from_text(json.dumps(doc["cocycle"])))
    assert is_iso_witness(catalog_algebra("mu2_5", 6), ext, w)


def test_fingerprint(capsys):
    code, out, _ = run(capsys, "fingerprint", "mu1_3:5", "--machine")
    assert code == 0 and json.loads(out)["cohom_dims"] == [6, 3, 3]
    code, out, _ = run(capsys, "fingerprint", "mu1_3:5")
    assert "cohom_dims: (6, 3, 3)" in out


def test_verify_classification(capsys):
    code, out, _ = run(capsys, "verify-classification", "mu1_4", "--n", "5", "--s", "3")
    assert code == 0 and out.startswith("T_3(μ1,4^5): pass")


@pytest.mark.parametrize("argv,needle", [
    (["catalog", "mu9:5"], "catalog error: unknown family"),
    (["cohomology", "missing.json"], "usage error"),
    (["iso-search", "mu0:6", "mu0:6", "--field", "2"], "guard violation"),
    (["iso-search", "mu0:4", "mu0:4", "--field", "7"], "guard violation"),
    (["verify-action", "mu2_1", "--n", "6"], "catalog error"),
    (["verify-classification", "mu1_4", "--n", "5", "--s", "4"], "guard violation"),
])
def test_error_diagnostics(capsys, argv, needle):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert needle in err


def test_malformed_file(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"dim": 2, "table": [[1, 1, 9, "1/1"]]}')
    code, _, err = run(capsys, "fingerprint", str(bad))
    assert code == 2 and "malformed input" in err


def test_usage_errors(capsys):
    assert main([]) == 2
    assert main(["no-such-command"]) == 2
    capsys.readouterr()


def test_worker_cap_is_validated(capsys, monkeypatch):
    monkeypatch.setenv("CEXKIT_THREADS", "zero")
    code, _, err = run(capsys, "iso-search", "mu0:4", "mu0:4", "--field", "2")
    assert code == 2 and "CEXKIT_THREADS" in err


def test_deterministic_output(capsys):
    first = run(capsys, "reconstruct", "mu3_2:7")
    assert first == run(capsys, "reconstruct", "mu3_2:7")
