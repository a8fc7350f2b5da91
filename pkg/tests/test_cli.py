import json
import subprocess
import sys

import pytest

from sperner_lattice.cli import main
from sperner_lattice.labeling import Labeling


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--k", "3", "--q", "2")
    assert code == 0
    data = json.loads(out)
    assert data["cell_count"] == 4 and data["vertex_count"] == 6
    _, out2, _ = run(capsys, "enumerate", "--k", "3", "--q", "2", "--construction", "permutations")
    assert out2 == out


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--k", "4", "--q", "2")
    assert code == 0
    assert "FAIL" not in out and out.count("PASS") == 9


def test_label_first_choice(capsys):
    code, out, _ = run(capsys, "label", "--k", "3", "--q", "2", "--j", "3")
    data = json.loads(out)
    assert code == 0
    assert data["nonmonochromatic"] == 3 and data["at_least_j"] == 1


def test_label_file_and_non_sperner(capsys, caplog, tmp_path):
    good = tmp_path / "good.json"
    good.write_text(Labeling(3, 2, (3, 2, 2, 1, 1, 1)).to_json())
    code, out, _ = run(capsys, "label", "--k", "3", "--q", "2", "--labeling", str(good))
    assert code == 0 and json.loads(out)["nonmonochromatic"] == 3
    bad = tmp_path / "bad.json"
    bad.write_text(Labeling(3, 2, (3, 2, 2, 2, 1, 1)).to_json())
    code, _, _ = run(capsys, "label", "--k", "3", "--q", "2", "--labeling", str(bad))
    assert code == 1 and "not Sperner" in caplog.text
    code, _, _ = run(capsys, "label", "--k", "3", "--q", "3", "--labeling", str(good))
    assert code == 2


def test_hypergraph(capsys, tmp_path):
    path = tmp_path / "h.json"
    code, out, _ = run(capsys, "hypergraph", "--k", "3", "--q", "2", "--out", str(path))
    summary = json.loads(out)
    assert code == 0
    assert summary["embedded_in_triangulation"] and summary["nonmonochromatic_hyperedges"] == 2
    assert json.loads(path.read_text())["kind"] == "hyperedge"


@pytest.mark.parametrize("method", ["brute", "bb"])
def test_minimize_and_check(capsys, tmp_path, method):
    cert = tmp_path / "cert.json"
    code, _, _ = run(capsys, "minimize", "--k", "4", "--q", "2", "--method", method, "--out", str(cert))
    assert code == 0
    assert json.loads(cert.read_text())["m"] == 7
    code, out, _ = run(capsys, "check-cert", str(cert))
    assert code == 0 and out.strip() == "valid"
    data = json.loads(cert.read_text())
    data["m"] = 6
    cert.write_text(json.dumps(data))
    code, out, _ = run(capsys, "check-cert", str(cert))
    assert code == 1 and out.strip() == "INVALID"


def test_minimize_budget_refused(capsys, caplog):
    code, _, _ = run(capsys, "minimize", "--k", "3", "--q", "5", "--method", "brute", "--budget", "10")
    assert code == 2 and "budget" in caplog.text


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--k", "4", "--q", "5", "--format", "figure1")
    assert code == 0
    assert out == "q,lower_bound,first_choice\n1,1,1\n2,3,7\n3,6,19\n4,10,37\n5,15,61\n"
    code, out, _ = run(capsys, "bounds", "--k", "3", "--q", "3", "--exact", "--format", "csv")
    assert out.splitlines()[-1] == "3,3,3,5,5,5"


def test_usage_errors(capsys):
    code, _, _ = run(capsys, "minimize", "--k", "1", "--q", "3")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        main(["minimize", "--k", "3"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_logs_go_to_stderr():
    proc = subprocess.run(
        [sys.executable, "-m", "sperner_lattice", "minimize", "--k", "3", "--q", "5", "--method", "brute", "--budget", "10"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2 and proc.stdout == "" and "budget" in proc.stderr


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "sperner_lattice", "bounds", "--k", "2", "--q", "2", "--format", "figure1"],
        capture_output=True, text=True, check=True,
    )
    assert proc.stdout == "q,lower_bound,first_choice\n1,1,1\n2,1,1\n"
