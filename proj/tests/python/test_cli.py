import os
import subprocess

import pytest

CLI = os.environ.get("SIGMARHO_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="SIGMARHO_CLI not set")


def run(*args, **kw):
    return subprocess.run([CLI, *args], capture_output=True, text=True, **kw)


@pytest.fixture()
def star5(tmp_path):
    path = tmp_path / "star5.gr"
    path.write_text("p edge 5 4\ne 1 2\ne 1 3\ne 1 4\ne 1 5\n")
    return str(path)


def test_problems_list():
    r = run("problems")
    assert r.returncode == 0
    assert "efficient-dominating" in r.stdout.splitlines()


def test_generate_and_solve(tmp_path):
    out = tmp_path / "g.gr"
    assert run("generate", "--n", "8", "--p", "0.4", "--seed", "7", "--out", str(out)).returncode == 0
    r = run("solve", "--graph", str(out), "--problem", "independent-dominating")
    assert r.returncode == 0
    assert r.stdout.startswith("YES size=")


def test_solve_no(star5):
    r = run("solve", "--graph", star5, "--problem", "total-perfect-dominating", "--budget", "1")
    assert r.returncode == 1
    assert r.stdout.strip() == "NO"


def test_verify(star5):
    assert run("verify", "--graph", star5, "--problem", "efficient-dominating",
               "--witness", "1").returncode == 0
    assert run("verify", "--graph", star5, "--problem", "efficient-dominating",
               "--witness", "2,3").returncode == 1


def test_kernelize_routes_small_modulator(star5):
    r = run("kernelize", "--graph", star5, "--problem", "efficient-dominating")
    assert r.returncode == 0
    assert "solved by guessing" in r.stdout
    assert "YES" in r.stdout


def test_kernelize_files(star5, tmp_path):
    prefix = str(tmp_path / "kern")
    r = run("kernelize", "--graph", star5, "--problem", "efficient-dominating",
            "--force-kernel", "--out", prefix)
    assert r.returncode == 0
    csp = open(prefix + ".csp").read()
    assert csp.startswith("csp 1 ")
    mapping = open(prefix + ".map").read()
    assert mapping.splitlines()[0] == "map 5 1"


def test_guard_refusal_exit_code(star5):
    r = run("kernelize", "--graph", star5, "--problem", "total-perfect-dominating")
    assert r.returncode == 4
    assert "guard refused" in r.stderr


def test_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.gr"
    bad.write_text("p edge x y\n")
    r = run("solve", "--graph", str(bad), "--problem", "efficient-dominating")
    assert r.returncode == 2


def test_cap_exceeded_exit_code(star5):
    env = dict(os.environ, SIGMARHO_ORACLE_CAP="3")
    r = run("solve", "--graph", star5, "--problem", "efficient-dominating", env=env)
    assert r.returncode == 3


def test_solve_modular(star5):
    r = run("solve-modular", "--graph", star5, "--problem", "efficient-dominating")
    assert r.returncode == 0
    assert r.stdout.strip() == "YES size=1 witness=1"


def test_sweep(tmp_path):
    out = tmp_path / "report.tsv"
    r = run("sweep", "--count", "4", "--n-min", "4", "--n-max", "6", "--seed", "3",
            "--out", str(out))
    assert r.returncode == 0
    lines = out.read_text().splitlines()
    assert lines[0].split("\t")[:4] == ["graph_id", "n", "m", "spec"]
    assert len(lines) == 1 + 4 * 12
    assert "disagreements=0" in r.stdout
