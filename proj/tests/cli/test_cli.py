import os
import subprocess
from decimal import Decimal
from pathlib import Path

import pytest

BIN = os.environ.get("CHAOSCHEB_BIN", "chaoscheb")
FIX = Path(os.environ.get("CHAOSCHEB_FIXTURES", Path(__file__).parent.parent / "fixtures"))


def run(*args, check=True):
    p = subprocess.run([BIN, *map(str, args)], capture_output=True, text=True, timeout=300)
    if check and p.returncode != 0:
        raise AssertionError(f"exit {p.returncode}: {p.stderr}")
    return p


EPS = Decimal("1e-16")


def near(a, b, tol=EPS):
    return abs(Decimal(a) - Decimal(b)) <= tol


def fields(text):
    out = {}
    for line in text.splitlines():
        if "=" in line and " " not in line:
            k, v = line.split("=", 1)
            out[k] = v
    return out


@pytest.mark.parametrize(
    "name,args",
    [
        ("sec42", ["keygen", "--x-phase", "5/36", "--s", "106000"]),
        ("sec62", ["--scheme", "jacobi", "--m", "0.3", "keygen", "--x-phase", "5/29", "--s", "2342"]),
    ],
)
def test_keygen_reproduces_fixtures(tmp_path, name, args):
    key, pub = tmp_path / "k", tmp_path / "p"
    glob = ["--digits", "32"]
    if args[0] == "--scheme":
        glob += args[:4]
        args = args[4:]
    run(*glob, "--out", key, *args, "--pub", pub)
    assert key.read_text() == (FIX / f"{name}.key").read_text()
    assert pub.read_text() == (FIX / f"{name}.pub").read_text()


def test_encrypt_reproduces_fixture(tmp_path):
    ct = tmp_path / "ct"
    run("--digits", "32", "--out", ct, "encrypt", "--pub", FIX / "sec42.pub", "--msg", "0.111111111", "--r", "81500")
    assert ct.read_text() == (FIX / "sec42.ct").read_text()


def test_worked_values():
    pub = fields((FIX / "sec42.pub").read_text())
    assert pub["y"].startswith("0.173648177")
    ct = fields((FIX / "sec42.ct").read_text())
    assert ct["u"].startswith("-0.939692620")
    pub = fields((FIX / "sec62.pub").read_text())
    assert pub["y"].startswith("0.245755")


@pytest.mark.parametrize("name,msg", [("sec42", "0.111111111"), ("sec62", "0.123456")])
def test_decrypt_and_attack(name, msg):
    out = run("--digits", "32", "decrypt", "--key", FIX / f"{name}.key", "--ct", FIX / f"{name}.ct").stdout.strip()
    assert near(out, msg)
    rep = fields(run("--digits", "32", "attack", "--pub", FIX / f"{name}.pub", "--ct", FIX / f"{name}.ct").stdout)
    assert near(rep["recovered"], msg)
    assert rep["oracle_match"] == "true"


def test_attack_congruence_report(tmp_path):
    report = tmp_path / "report"
    p = run("--digits", "32", "--report", report, "attack", "--pub", FIX / "sec62.pub", "--ct", FIX / "sec62.ct",
            "--congruence-digits", "1")
    rep = fields(p.stdout)
    assert rep["a"] == "2.6" and rep["b"] == "5.8"
    assert rep["plus_solutions"] == "3,8"
    assert rep["r_prime"] == "20"
    assert fields(report.read_text()) == rep


def test_encrypt_decrypt_round_trip(tmp_path):
    key, pub, ct = tmp_path / "k", tmp_path / "p", tmp_path / "c"
    run("--seed", "5", "--out", key, "keygen", "--pub", pub)
    run("--seed", "6", "--out", ct, "encrypt", "--pub", pub, "--msg", "0.4242")
    out = run("decrypt", "--key", key, "--ct", ct).stdout.strip()
    assert near(out, "0.4242")


def test_seeded_keygen_is_deterministic(tmp_path):
    a = run("--seed", "99", "--scheme", "jacobi", "keygen").stdout
    b = run("--seed", "99", "--scheme", "jacobi", "keygen").stdout
    assert a == b


def test_digit_mismatch_exits_2(tmp_path):
    bad = tmp_path / "ct"
    text = (FIX / "sec42.ct").read_text().replace("digits=32", "digits=31")
    bad.write_text(text)
    p = run("--digits", "32", "decrypt", "--key", FIX / "sec42.key", "--ct", bad, check=False)
    assert p.returncode == 2
    assert "error" in p.stderr


def test_u_out_of_range_exits_2(tmp_path):
    bad = tmp_path / "ct"
    lines = [l if not l.startswith("u=") else "u=1.50000000000000000000000000000000"
             for l in (FIX / "sec42.ct").read_text().splitlines()]
    bad.write_text("\n".join(lines) + "\n")
    assert run("decrypt", "--key", FIX / "sec42.key", "--ct", bad, check=False).returncode == 2


def test_empty_scenario_exits_2():
    assert run("eavesdrop", "--scenario", FIX / "empty.scn", check=False).returncode == 2


def test_unknown_subcommand_exits_2():
    assert run("frobnicate", check=False).returncode == 2


def test_trivial_key_agreement():
    out = run("eavesdrop", "--scenario", FIX / "keyagreement_trivial.scn").stdout
    f = fields(out)
    assert f["match"] == "true"
    assert f["eve_key"] == f["honest_key"] == f["X"]
    assert "step=1 sender=bob" in out and "step=2 sender=alice" in out


def test_seeded_key_agreement():
    out = run("eavesdrop", "--scenario", FIX / "keyagreement_seeded.scn").stdout
    assert fields(out)["match"] == "true"
    ke = run("keyexchange", "--scenario", FIX / "keyagreement_seeded.scn").stdout
    assert "eve_key" not in ke


def test_honest_auth_rounds():
    out = run("auth", "--scenario", FIX / "auth_rounds.scn").stdout
    assert out.count("accepted=true") == 3


@pytest.mark.parametrize("mode", ["sessions", "public"])
def test_forgery_accepted(mode):
    out = run("--digits", "64", "auth-forge", "--scenario", FIX / "auth_rounds.scn", "--forge", mode).stdout
    assert out.count("forged round=") == 3
    assert out.count("accepted=true") == 3


def test_bench():
    out = run("bench", "--n", "1000,1000000", "--bench-digits", "32", "--repetitions", "2").stdout
    f = fields(out)
    assert f["halving_growth_ok"] == "true"
    assert "linear_over_halving" in out
