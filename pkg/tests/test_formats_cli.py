import json
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dbtorus.cli import main
from dbtorus.formats import (
    certificate_to_json,
    format_element,
    parse_element,
    read_grid_text,
    read_ntorus_text,
    read_pattern,
    read_sequence,
    torus_from_json,
    torus_to_json,
    write_grid_text,
    write_ntorus_text,
    write_pattern,
    write_pbm,
    write_sequence,
)
from dbtorus.gf import make_field
from dbtorus.ntorus import build_ntorus
from dbtorus.patterns import Pattern, certificate
from dbtorus.sequence import db_sequence, lift_to_full
from dbtorus.torus import build_torus

GOLDEN = Path(__file__).parent / "golden"


# -- element syntax ----------------------------------------------------------------


def test_element_syntax(f16):
    assert parse_element(f16, "pow:5") == f16.exp(5)
    assert parse_element(f16, "poly:[0,1,1,0]") == f16.exp(5)
    assert parse_element(f16, "1") == 1
    assert format_element(f16, 0) == "poly:[0,0,0,0]"
    assert format_element(f16, f16.exp(7)) == "pow:7"


def test_element_out_of_range(f16):
    with pytest.raises(ValueError):
        parse_element(f16, "16")
    with pytest.raises(ValueError):
        parse_element(f16, "poly:[1,0,0,0,1]")


@given(st.integers(0, 242), st.sampled_from(["pow", "poly"]))
def test_element_roundtrip(a, style):
    ctx = make_field(3, 5)
    assert parse_element(ctx, format_element(ctx, a, style)) == a


# -- files -------------------------------------------------------------------------


@pytest.mark.parametrize("lam_exp", [0, 6])
def test_grid_text_roundtrip(f16, lam_exp):
    torus = build_torus(f16, 3, 5, f16.exp(lam_exp))
    back = read_grid_text(write_grid_text(torus))
    assert np.array_equal(back.values, torus.values) and back.lam == torus.lam


def test_grid_text_rejects_tampering(torus35):
    text = write_grid_text(torus35).replace("0 1 1 1 1", "1 1 1 1 1", 1)
    with pytest.raises(ValueError):
        read_grid_text(text)


def test_json_roundtrip(torus79):
    doc = json.loads(torus_to_json(torus79))
    assert doc["field"] == {"p": 2, "n": 6, "modulus": list(torus79.ctx.modulus)}
    assert np.array_equal(torus_from_json(torus_to_json(torus79)).values, torus79.values)


def test_pbm(torus35):
    assert write_pbm(torus35.values) == (GOLDEN / "torus_f16.pbm").read_text()


def test_pattern_file_roundtrip():
    pat = Pattern.of([(0, 2), (1, 1), (2, 0)])
    assert read_pattern(write_pattern(pat)) == pat
    assert read_pattern("# header\n0 0  # origin\n\n1 2\n") == Pattern.of([(0, 0), (1, 2)])


@pytest.mark.parametrize("m", [1, 2])
def test_sequence_roundtrip(f16, m):
    seq = db_sequence(f16, m)
    back = read_sequence(f16, write_sequence(f16, seq))
    assert back == seq


def test_full_sequence_roundtrip(f16):
    full = lift_to_full(db_sequence(f16))
    assert read_sequence(f16, write_sequence(f16, full)).symbols == full.symbols


def test_ntorus_text_roundtrip(f16):
    nt = build_ntorus(f16, (3, 5))
    back = read_ntorus_text(write_ntorus_text(nt))
    assert np.array_equal(back.values, nt.values)


def test_certificate_json(torus35):
    cert = certificate(torus35, Pattern.of([(0, 0), (0, 1), (1, 0), (1, 1)]))
    doc = json.loads(certificate_to_json(torus35.ctx, cert))
    assert doc["basis_elements"] == ["pow:0", "pow:3", "pow:5", "pow:8"]
    phi, inv = np.array(doc["phi_matrix"]), np.array(doc["phi_inverse"])
    assert np.array_equal(phi @ inv % 2, np.eye(4, dtype=int))


# -- command line ------------------------------------------------------------------


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


GOLDEN_CASES = {
    "field_find_2_4.txt": "field find -p 2 -n 4",
    "torus_f16.txt": "torus generate -p 2 -n 4 -s 3 -t 5",
    "torus_f16.pbm": "torus generate -p 2 -n 4 -s 3 -t 5 --format pbm",
    "classify_f16.txt": "torus classify -p 2 -n 4 -m 2",
    "extend_kronecker_f16.txt": "torus extend -p 2 -n 4 -m 2 --pattern kronecker:2",
    "update_right_f16.txt": "update matrix -p 2 -n 4 -m 2 --pattern kronecker:2 --shift 0,1 --new-cells",
    "seq_f16.txt": "seq generate -p 2 -n 4",
    "seq_f16_m2.txt": "seq generate -p 2 -n 4 -m 2",
    "lift_f16.txt": "seq lift -p 2 -n 4",
    "build_f16.txt": "pattern build -p 2 -n 4 -m 2 --pattern 0,2;1,1",
    "torus_f64.txt": "torus generate -p 2 -n 6 -s 7 -t 9",
}


@pytest.mark.parametrize("name", sorted(GOLDEN_CASES))
def test_cli_golden(name, capsys):
    code, out, _ = run(GOLDEN_CASES[name].split(), capsys)
    assert code == 0
    assert out == (GOLDEN / name).read_text()


def test_cli_torus_body(capsys):
    _, out, _ = run("torus generate -p 2 -n 4 -s 3 -t 5".split(), capsys)
    assert out.splitlines()[1:] == ["0 1 1 1 1", "0 0 1 1 0", "0 1 0 0 1"]


def test_cli_decode(capsys):
    code, out, _ = run("decode -p 2 -n 4 -m 2 --pattern kronecker:2 --values 1,1,0,1".split(), capsys)
    assert (code, out) == (0, "0 1\n")


def test_cli_pattern_check(capsys, tmp_path):
    cert = tmp_path / "cert.json"
    code, out, _ = run(["pattern", "check", "-p", "2", "-n", "4", "-m", "2", "--pattern", "0,0;0,1;1,0;1,1",
                        "--certificate", str(cert)], capsys)
    assert code == 0
    assert out == "cells 4\nbasis true\nsampling true\n"
    assert json.loads(cert.read_text())["cells"] == [[0, 0], [0, 1], [1, 0], [1, 1]]


def test_cli_pattern_file(capsys, tmp_path):
    f = tmp_path / "pat.txt"
    f.write_text("0 0\n1 0\n2 0\n0 1\n")
    code, out, _ = run(["pattern", "check", "-p", "2", "-n", "4", "-m", "2", "--pattern", str(f)], capsys)
    assert code == 0 and "basis false" in out and "sampling false" in out


def test_cli_output_file(capsys, tmp_path):
    dest = tmp_path / "grid.txt"
    code, out, _ = run(["torus", "generate", "-p", "2", "-n", "4", "-m", "2", "-o", str(dest)], capsys)
    assert code == 0 and out == ""
    assert dest.read_text() == (GOLDEN / "torus_f16.txt").read_text()


def test_cli_json_and_csv(capsys):
    code, out, _ = run("torus classify -p 2 -n 4 -m 2 --format json".split(), capsys)
    assert code == 0
    assert json.loads(out)["column_report"]["counts"] == {"1": 2, "2": 2}
    _, out, _ = run("torus generate -p 2 -n 4 -m 2 --format csv".split(), capsys)
    assert out.splitlines()[0] == "0,1,1,1,1"


def test_cli_ntorus(capsys):
    code, out, _ = run("ntorus check -p 2 -n 12 --dims 5,7,9,13".split(), capsys)
    assert (code, out) == (0, "cells 12\nbasis true\nsampling true\n")


@pytest.mark.parametrize("argv", [
    "torus generate -p 2 -n 4 -s 3 -t 6",
    "decode -p 2 -n 4 -m 2 --pattern kronecker:2 --values 0,0,0,0",
    "ntorus generate -p 2 -n 4 --dims 3,6",
    "field describe -p 2 -n 4 --modulus 1,0,0,0,1",
    "pattern extend -p 2 -n 4 -m 2 --pattern 0,0;0,1;0,2 --with 1,0;1,1",
])
def test_cli_precondition_failures(argv, capsys):
    code, out, err = run(argv.split(), capsys)
    assert code == 2 and out == ""
    assert err.startswith("error: ")


@pytest.mark.parametrize("argv", [
    "torus generate -p 2 -n 4",
    "torus generate -p 2 -n 4 -s 3 -t 5 --format svg",
    "bogus",
    "pattern check -p 2 -n 4 -m 2 --pattern nosuchfile",
])
def test_cli_usage_errors(argv, capsys):
    assert run(argv.split(), capsys)[0] == 1


def test_cli_deterministic(capsys):
    argv = "torus generate -p 2 -n 8 -m 4 --format json".split()
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "dbtorus", "field", "find", "-p", "2", "-n", "8"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "1,0,1,1,1,0,0,0,1\nx^8 + x^4 + x^3 + x^2 + 1\n"
