import json
import subprocess
import sys
from pathlib import Path

GOLDEN = Path(__file__).parent / "golden"


def run_cli(*args):
    return subprocess.run([sys.executable, "-m", "zetterberg", *args],
                          capture_output=True, text=True)


def test_field_reports_h_order():
    r = run_cli("field", "--p", "2", "--m", "2", "--s", "2")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["subgroup_orders"]["H"] == 17


def test_field_dump_has_modulus():
    r = run_cli("field", "--p", "3", "--m", "1", "--s", "2", "--dump")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert len(data["modulus"]) == 5 and data["modulus"][-1] == 1


def test_field_rejects_composite_p():
    r = run_cli("field", "--p", "4", "--m", "1", "--s", "1")
    assert r.returncode == 2


def test_radius_verify():
    r = run_cli("radius", "--q0", "3", "--s", "2", "--method", "verify",
                "--no-timing")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["rho"] == 3 and len(data["cross_checks"]) >= 2
    assert all(c["rho"] == 3 for c in data["cross_checks"])


def test_radius_criterion_with_witness():
    r = run_cli("radius", "--q0", "13", "--s", "3", "--no-timing")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["rho"] == 3 and data["witness"] is not None


def test_radius_undecidable_exit_code():
    r = run_cli("radius", "--q0", "16", "--s", "9")
    assert r.returncode == 4


def test_radius_rejects_non_prime_power():
    r = run_cli("radius", "--q0", "12", "--s", "2")
    assert r.returncode == 2


def test_mindist_exhaustive_verified():
    r = run_cli("mindist", "--q0", "4", "--s", "2", "--variant", "full",
                "--exhaustive")
    assert r.returncode == 0
    data = json.loads(r.stdout)
    assert data["formula"] == 4 and data["exhaustive"] == 4 and data["verified"]


def test_mindist_half_q0_3():
    r = run_cli("mindist", "--q0", "3", "--s", "2", "--variant", "half",
                "--exhaustive")
    assert json.loads(r.stdout)["formula"] == 5 and r.returncode == 0


def test_mindist_half_s1():
    r = run_cli("mindist", "--q0", "5", "--s", "1", "--variant", "half")
    assert json.loads(r.stdout)["formula"] == 3


def test_thresholds_csv_matches_golden():
    r = run_cli("thresholds", "--parity", "odd", "--q0-max", "59")
    assert r.returncode == 0
    assert r.stdout == (GOLDEN / "thresholds_odd.csv").read_text()
    r = run_cli("thresholds", "--parity", "even", "--q0-max", "128")
    assert r.stdout == (GOLDEN / "thresholds_even.csv").read_text()


def test_thresholds_small_range():
    r = run_cli("thresholds", "--parity", "odd", "--q0-max", "5")
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 3 and lines[1].startswith("3,") and lines[2].startswith("5,")


def test_classify_markdown_rows():
    r = run_cli("classify", "--q0", "7", "--s-max", "2", "--variant", "half")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 4  # header, rule, two rows
    assert "| 7 | 2 | half | [25,21] | 4 | 3 |" in lines[3]


def test_classify_json_format():
    r = run_cli("classify", "--q0", "2", "--s-max", "6", "--variant", "full",
                "--format", "json")
    rows = json.loads(r.stdout)
    by_s = {row["s"]: row for row in rows}
    assert by_s[2]["perfect"] and by_s[4]["quasi_perfect"]


def test_mindist_cap_exceeded_exit_code():
    # d = 4 needs the weight-4 pass, but length 65 is over the search cap
    r = run_cli("mindist", "--q0", "8", "--s", "2", "--variant", "full",
                "--exhaustive")
    assert r.returncode == 3


def test_cli_deterministic():
    args = ("radius", "--q0", "5", "--s", "2", "--method", "verify", "--no-timing")
    assert run_cli(*args).stdout == run_cli(*args).stdout
    args = ("thresholds", "--parity", "even", "--q0-max", "64")
    assert run_cli(*args).stdout == run_cli(*args).stdout
