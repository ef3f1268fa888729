import json
import subprocess
import sys
from pathlib import Path

import pytest

from cleavedpa.cli import main
from cleavedpa.diagram import parse_diagram
from cleavedpa.ring import HalfLaurent

DIAGRAMS = Path(__file__).resolve().parent.parent / "diagrams"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_basis(capsys):
    code, out, _ = run(capsys, "basis", "--n", 2)
    assert code == 0
    assert out.strip().endswith("dimension 12")
    code, out, _ = run(capsys, "--format", "json", "basis", "--n", 1)
    assert [row["label"] for row in json.loads(out)] == ["+", "-"]


def test_zmap_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "zmap", DIAGRAMS / "cupcap.pd")
    payload = json.loads(out)
    assert code == 0 and payload["signature"] == [1, 1]
    values = {(e["row"], tuple(e["cols"])): HalfLaurent.from_pairs(e["value"]) for e in payload["entries"]}
    assert values[(0, (0,))] == HalfLaurent({2: 1})


def test_zmap_text_names_generators(capsys):
    code, out, _ = run(capsys, "zmap", DIAGRAMS / "nested_arcs.pd")
    assert code == 0
    assert "I[B+-]" in out and "I[A+]" in out


def test_compose_outputs_a_diagram(capsys):
    code, out, _ = run(capsys, "compose", DIAGRAMS / "cap.pd", 1, DIAGRAMS / "cup.pd")
    assert code == 0
    assert parse_diagram(out) == parse_diagram((DIAGRAMS / "cupcap.pd").read_text())


def test_compose_mismatch_exits_one(capsys):
    code, _, err = run(capsys, "compose", DIAGRAMS / "cap.pd", 1, DIAGRAMS / "identity2.pd")
    assert code == 1
    assert "(1;0)" in err and "(2;2)" in err


def test_jones(capsys):
    code, out, _ = run(capsys, "jones", DIAGRAMS / "trefoil.tangle")
    assert code == 0 and out.strip() == "-q^9 + q^5 + q^3 + q"
    code, _, err = run(capsys, "jones", DIAGRAMS / "sigma.tangle")
    assert code == 1 and "(1;1)" in err


def test_ztangle_and_braid_rep_agree(capsys):
    _, a, _ = run(capsys, "--format", "json", "ztangle", DIAGRAMS / "sigma.tangle")
    _, b, _ = run(capsys, "--format", "json", "braid-rep", "--strands", 2, "s1")
    assert json.loads(a)["entries"] == json.loads(b)["entries"]


def test_bad_braid_word(capsys):
    code, _, err = run(capsys, "braid-rep", "--strands", 2, "s5")
    assert code == 1 and "s5" in err


def test_skein_check(capsys):
    code, out, _ = run(capsys, "skein-check", DIAGRAMS / "figure8.tangle")
    assert code == 0 and out.count("ok") == 4


def test_mirror_round_trip(capsys, tmp_path):
    _, once, _ = run(capsys, "mirror", DIAGRAMS / "trefoil.tangle")
    f = tmp_path / "m.tangle"
    f.write_text(once)
    _, jm, _ = run(capsys, "jones", f)
    assert jm.strip() == "q^-1 + q^-3 + q^-5 - q^-9"


def test_pairing(capsys):
    code, out, _ = run(capsys, "--format", "json", "pairing", "--n", 1)
    payload = json.loads(out)
    assert code == 0 and len(payload["entries"]) == 2


def test_tl_commands(capsys):
    code, out, _ = run(capsys, "tl-matrices", "--n", 2)
    assert code == 0 and "M1 (cup-cap at 3,4)" in out
    code, out, _ = run(capsys, "--format", "json", "tl-kernels", "--n", 2)
    payload = json.loads(out)
    assert payload["joint"]["nullity"] == 7
    assert all(r["in_kernel"] for r in payload["quoted_vectors"])


def test_validate(capsys):
    assert run(capsys, "validate", "--strict", DIAGRAMS / "nested_arcs.pd")[0] == 0
    assert run(capsys, "validate", DIAGRAMS / "crossing.pd")[0] == 0
    code, _, err = run(capsys, "validate", "--strict", DIAGRAMS / "crossing.pd")
    assert code == 1 and err


def test_parse_error_exits_two(capsys, tmp_path):
    f = tmp_path / "bad.pd"
    f.write_text("boundaries 1\narc 0:1-?\n")
    code, _, err = run(capsys, "zmap", f)
    assert code == 2
    assert f"{f}:2:" in err


def test_missing_file_exits_one(capsys, tmp_path):
    code, _, err = run(capsys, "zmap", tmp_path / "nope.pd")
    assert code == 1 and "cannot read" in err


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "cleavedpa.cli", "basis", "--n", "0"], capture_output=True, text=True, check=True
    )
    assert "dimension 1" in out.stdout
