import io
import json
import subprocess
import sys

import pytest

from polyshell.cli import run

SIGMA = {"variables": 3, "generators": [[1, 1, 0], [0, 0, 2]]}
PATH = {"variables": 3, "generators": [[1, 1, 0], [0, 1, 1]]}


def call(monkeypatch, capsys, argv, doc):
    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(doc) if not isinstance(doc, str) else doc))
    code = run(argv)
    out = capsys.readouterr()
    return code, json.loads(out.out), out


def test_shell(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["shell"], PATH)
    assert code == 0
    assert doc["shelling"] == {
        "intervals": [{"bottom": [0, 0, 0], "top": [1, 1, 0]}, {"bottom": [0, 0, 1], "top": [0, 1, 1]}]
    }
    # the emitted certificate re-validates
    code, report, _ = call(monkeypatch, capsys, ["verify"], doc)
    assert code == 0 and report["valid"]


def test_shell_non_polymatroid(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["shell"], SIGMA)
    assert code == 2 and doc["shelling"] is None


def test_verify_invalid(monkeypatch, capsys):
    bad = {"ideal": PATH, "shelling": {"intervals": [{"bottom": [0, 0, 1], "top": [0, 1, 1]}, {"bottom": [0, 0, 0], "top": [1, 1, 0]}]}}
    code, doc, _ = call(monkeypatch, capsys, ["verify"], bad)
    assert code == 2 and doc["failed_check"] == "prefix_closed"


def test_check_pm(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["check-pm"], SIGMA)
    assert code == 2
    assert doc["witness"] == {"reason": "exchange", "m": [0, 0, 2], "m_prime": [1, 1, 0], "index": 2}
    code, doc, _ = call(monkeypatch, capsys, ["check-pm"], PATH)
    assert code == 0 and doc["holds"]


def test_degseq(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["degseq"], SIGMA)
    assert code == 0 and doc["degree_sequence"] == [1, 3, 2] and doc["pure"]


def test_transforms(monkeypatch, capsys):
    assert call(monkeypatch, capsys, ["f2h"], [1, 4, 6])[1]["h"] == [1, 2, 3]
    assert call(monkeypatch, capsys, ["h2f"], {"h": [1, 2, 3]})[1]["f"] == [1, 4, 6]


def test_lpm_h(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["lpm-h"], {"P": "EENN", "Q": "NNEE"})
    assert code == 0
    assert doc["h_vector"] == [1, 2, 3] and len(doc["bases"]) == 6 and doc["base_exchange"]["holds"]


def test_cor3(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["cor3"], {"P": "EENN", "Q": "NNEE"})
    assert code == 0 and doc["status"] == "found"
    cert = {"ideal": doc["search"]["witness"], "shelling": doc["shelling"]}
    assert call(monkeypatch, capsys, ["verify"], cert)[0] == 0
    assert call(monkeypatch, capsys, ["check-pm"], doc["search"]["witness"])[0] == 0


def test_cor3_inconclusive(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["cor3", "--max-nodes", "1"], {"P": "EENN", "Q": "NNEE"})
    assert code == 3 and doc["status"] == "inconclusive"


def test_witness(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["witness", "--kind", "shellable"], {"h": [1, 3, 2]})
    assert code == 0 and doc["shelling"]
    cert = {"ideal": doc["witness"], "shelling": doc["shelling"]}
    assert call(monkeypatch, capsys, ["verify"], cert)[0] == 0
    assert call(monkeypatch, capsys, ["witness"], [1, 0, 1])[0] == 2
    assert call(monkeypatch, capsys, ["witness", "--max-variables", "2"], [1, 3, 2])[0] == 3


def test_oracle(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["oracle"], SIGMA)
    assert code == 0 and doc["status"] == "found"
    code, doc, _ = call(monkeypatch, capsys, ["oracle"], {"variables": 3, "generators": [[0, 1, 2], [1, 2, 0], [2, 0, 1]]})
    assert code == 2 and doc["shelling"] is None


def test_enumerate(monkeypatch, capsys):
    code, doc, _ = call(monkeypatch, capsys, ["enumerate"], {"variables": 2, "degree": 1})
    assert code == 0 and doc["count"] == 3
    for ideal in doc["ideals"]:
        assert call(monkeypatch, capsys, ["check-pm"], ideal)[0] == 0


@pytest.mark.parametrize(
    "argv, stdin, kind",
    [
        (["shell"], "{not json", "parse"),
        (["bogus"], "{}", "usage"),
        (["shell"], json.dumps({"variables": 1, "generators": [[50]]}), "size"),
        (["shell"], json.dumps({"variables": 2}), "DomainError"),
        (["enumerate"], json.dumps({"variables": "a", "degree": 1}), "usage"),
        (["cor3"], json.dumps({"P": "NE", "Q": "EN"}), "PathError"),
    ],
)
def test_errors_exit_1(monkeypatch, capsys, argv, stdin, kind):
    if kind == "size":
        argv = argv + ["--closure-cap", "10"]
    code, doc, out = call(monkeypatch, capsys, argv, stdin)
    assert code == 1
    assert doc["error"]["type"] == kind
    assert out.err


def test_files_and_pretty(tmp_path):
    src = tmp_path / "in.json"
    dst = tmp_path / "out.json"
    src.write_text(json.dumps(PATH))
    assert run(["shell", "-i", str(src), "-o", str(dst), "--pretty"]) == 0
    text = dst.read_text()
    assert text.startswith("{\n  ")
    assert run(["shell", "-i", str(src), "-o", str(dst), "--pretty"]) == 0
    assert dst.read_text() == text


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "polyshell.cli", "degseq"],
        input=json.dumps(PATH),
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["degree_sequence"] == [1, 3, 2]
