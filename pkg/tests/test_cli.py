import json

import pytest

from qhlink import cli


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_text(capsys):
    code, out, _ = run(["compute", "--link", "fig8", "--n", "3"], capsys)
    assert code == 0
    assert "fig8" in out and "13" in out


def test_compute_json_schema(capsys):
    code, out, _ = run(["compute", "--link", "hopf,unknot1", "--n", "3,5",
                        "--family", "both", "--format", "json"], capsys)
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == 1 and doc["command"] == "compute"
    recs = doc["records"]
    assert len(recs) == 8  # 2 links x 2 orders x 2 families
    keys = [(r["link"], r["N"], r["family"]) for r in recs]
    assert keys == sorted(keys)
    assert all(set(r["value"]) == {"re", "im"} for r in recs)


def test_compute_rejects_unknown_link(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "--link", "borromean", "--n", "3"])
    assert exc.value.code == 2


def test_compute_rejects_even_order(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["compute", "--link", "hopf", "--n", "4"])
    assert exc.value.code == 2


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run(["verify", "--suite", "convstates", "--n", "3"], capsys)
    assert code == 0
    assert "PASS" in out and "checks passed" in out


def test_verify_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "--suite", "nope"])
    assert exc.value.code == 2


def test_verify_json_deterministic(capsys):
    argv = ["verify", "--suite", "conjmat", "--n", "5", "--seed", "7",
            "--format", "json"]
    _, first, _ = run(argv, capsys)
    _, second, _ = run(argv, capsys)
    assert first == second
    doc = json.loads(first)
    assert all(r["passed"] for r in doc["records"])


def test_bridge_csv(capsys):
    code, out, _ = run(["bridge", "--n", "3", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,identity,residual"
    assert len(lines) == 5  # four identities at one order


def test_asympt_csv_window(capsys):
    code, out, _ = run(["asympt", "--n-min", "201", "--n-max", "301",
                        "--step", "50", "--format", "csv"], capsys)
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("N,")
    assert len(lines) == 4


def test_asympt_small_window_warns_on_stderr(capsys):
    code, out, err = run(["asympt", "--n-min", "21", "--n-max", "61",
                          "--step", "10"], capsys)
    assert code == 0
    assert "warning" in err.lower()


def test_thread_cap(monkeypatch):
    monkeypatch.setenv("QHLINK_THREADS", "2")
    monkeypatch.delenv("OMP_NUM_THREADS", raising=False)
    cli._cap_threads()
    import os
    assert os.environ["OMP_NUM_THREADS"] == "2"
