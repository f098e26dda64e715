import json

import numpy as np
import pytest

from quditswap.cli import main

SWAP_QC = "dim 3\nwires 2\nCXT 2 1\nCXT 1 2\nCXT 2 1\n"
DECOMP_QC = "dim 4\nwires 2\nQFT 2\nCZ 1 2\nQFT 2\n"


def run(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify_pass(capsys):
    code, out, _ = run(["verify", "--d-min", "2", "--d-max", "3"], capsys)
    assert code == 0
    assert "PASS" in out
    assert "FAIL" not in out
    assert out.strip().endswith("identities passed")


def test_verify_bad_range(capsys):
    code, _, err = run(["verify", "--d-min", "1", "--d-max", "4"], capsys)
    assert code == 2
    assert "d-min" in err


def test_verify_json(capsys):
    code, out, _ = run(["verify", "--d-min", "3", "--d-max", "3", "--json"], capsys)
    assert code == 0
    lines = out.strip().split("\n")
    records = [json.loads(line) for line in lines]
    assert all(r["d"] == 3 for r in records[:-1])
    assert all(r["passed"] for r in records[:-1])
    assert records[-1]["failures"] == 0


def test_verify_tolerance_override_can_fail(capsys):
    code, out, _ = run(
        ["verify", "--d-min", "3", "--d-max", "3", "--tolerance", "1e-30"], capsys
    )
    assert code == 1
    assert "FAIL" in out


def test_matrix_cxt_d2(capsys):
    code, out, _ = run(["matrix", "--gate", "CXT", "--d", "2"], capsys)
    assert code == 0
    rows = [
        [complex(float(p.split(",")[0]), float(p.split(",")[1])) for p in line.split(";")]
        for line in out.strip().split("\n")
    ]
    m = np.array(rows)
    expected = np.zeros((4, 4))
    expected[0, 0] = expected[1, 1] = expected[3, 2] = expected[2, 3] = 1
    assert np.array_equal(m.real, expected)
    assert np.all(m.imag == 0)


def test_matrix_cz_d2(capsys):
    code, out, _ = run(["matrix", "--gate", "CZ", "--d", "2", "--format", "json"], capsys)
    assert code == 0
    m = np.array([[complex(re, im) for re, im in row] for row in json.loads(out)])
    assert np.allclose(m, np.diag([1, 1, 1, -1]))


def test_matrix_qft_d3(capsys):
    code, out, _ = run(["matrix", "--gate", "QFT", "--d", "3", "--format", "json"], capsys)
    assert code == 0
    m = np.array([[complex(re, im) for re, im in row] for row in json.loads(out)])
    for k in range(3):
        for x in range(3):
            want = np.exp(2j * np.pi * x * k / 3) / np.sqrt(3)
            assert abs(m[k, x] - want) <= 1e-15


def test_matrix_round_trips_through_csv(capsys):
    from quditswap.gates import qft

    code, out, _ = run(["matrix", "--gate", "QFT", "--d", "5"], capsys)
    assert code == 0
    rows = [
        [complex(float(p.split(",")[0]), float(p.split(",")[1])) for p in line.split(";")]
        for line in out.strip().split("\n")
    ]
    assert np.array_equal(np.array(rows), qft(5).entries)


def test_matrix_unknown_gate(capsys):
    code, _, err = run(["matrix", "--gate", "NOPE", "--d", "3"], capsys)
    assert code == 2
    assert "unknown gate" in err


def test_matrix_bad_d(capsys):
    code, _, _ = run(["matrix", "--gate", "QFT", "--d", "1"], capsys)
    assert code == 2


def test_simulate_swap_label(tmp_path, capsys):
    f = tmp_path / "swap.qc"
    f.write_text(SWAP_QC)
    code, out, _ = run(["simulate", "--circuit", str(f), "--input", "1,2"], capsys)
    assert code == 0
    assert out.strip() == "2,1"


def test_simulate_decomposition_label(tmp_path, capsys):
    # dense circuit on a basis input: amplitudes are printed, and the
    # dominant one sits at the negated-sum target
    f = tmp_path / "decomp.qc"
    f.write_text(DECOMP_QC)
    code, out, _ = run(
        ["simulate", "--circuit", str(f), "--input", "1,1", "--json"], capsys
    )
    assert code == 0
    amps = json.loads(out)["amplitudes"]
    best = max(amps, key=lambda e: e["re"] ** 2 + e["im"] ** 2)
    assert best["index"] == 1 * 4 + 2  # (1, 2): -1-1 mod 4 = 2


def test_simulate_state_file(tmp_path, capsys):
    f = tmp_path / "swap.qc"
    f.write_text(SWAP_QC)
    state = tmp_path / "state.txt"
    amps = np.zeros(9)
    amps[1 * 3 + 2] = 1.0
    state.write_text("\n".join(f"{a} 0.0" for a in amps) + "\n")
    code, out, _ = run(
        ["simulate", "--circuit", str(f), "--state", str(state), "--json"], capsys
    )
    assert code == 0
    entries = json.loads(out)["amplitudes"]
    assert entries == [{"index": 2 * 3 + 1, "re": 1.0, "im": 0.0}]


def test_simulate_malformed_circuit(tmp_path, capsys):
    f = tmp_path / "bad.qc"
    f.write_text("dim 3\nwires 2\nCXT 1\n")
    code, _, err = run(["simulate", "--circuit", str(f), "--input", "0,0"], capsys)
    assert code == 2
    assert "line 3" in err


def test_simulate_requires_one_input(tmp_path, capsys):
    f = tmp_path / "swap.qc"
    f.write_text(SWAP_QC)
    code, _, _ = run(["simulate", "--circuit", str(f)], capsys)
    assert code == 2


def test_parse_canonicalizes(tmp_path, capsys):
    f = tmp_path / "c.qc"
    f.write_text("# comment\ndim  3\n\nwires 2\nCXT  2   1 # inline\n")
    code, out, _ = run(["parse", "--circuit", str(f)], capsys)
    assert code == 0
    assert out == "dim 3\nwires 2\nCXT 2 1\n"


def test_parse_fig3_transcription_is_fixed_point(tmp_path, capsys):
    f = tmp_path / "swap.qc"
    f.write_text(SWAP_QC)
    code, out, _ = run(["parse", "--circuit", str(f)], capsys)
    assert code == 0
    assert out == SWAP_QC


def test_parse_empty_file(tmp_path, capsys):
    f = tmp_path / "empty.qc"
    f.write_text("")
    code, _, err = run(["parse", "--circuit", str(f)], capsys)
    assert code == 2
    assert "missing" in err


def test_parse_missing_file(capsys):
    code, _, _ = run(["parse", "--circuit", "/nonexistent.qc"], capsys)
    assert code == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["verify"])  # missing required flags
    assert exc.value.code == 2
