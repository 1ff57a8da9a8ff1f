# Copyright 2026 The globent Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the globent command-line tool."""

import csv
import json
import os
import subprocess
from pathlib import Path

import pytest

CLI = os.environ.get("GLOBENT_CLI", "globent")
DATA = Path(os.environ.get("GLOBENT_DATA", Path(__file__).resolve().parents[2] / "data"))


def run(*args, check=True):
    proc = subprocess.run([CLI, *map(str, args)], capture_output=True, text=True)
    if check and proc.returncode != 0:
        raise AssertionError(f"{args} exited {proc.returncode}: {proc.stderr}")
    return proc


def measure_json(path):
    return json.loads(run("measure", path, "--json").stdout)


def write_state(path, n, amps):
    path.write_text(json.dumps({"n": n, "amps": [[a.real, a.imag] for a in amps]}))


def test_measure_ghz3(tmp_path):
    run("fixtures", "ghz", "--n", 3, "--out", tmp_path / "ghz3.json")
    rep = measure_json(tmp_path / "ghz3.json")
    assert rep["r"] == pytest.approx(1.0, abs=1e-9)
    assert len(rep["profile"]) == 3
    assert rep["mw"] == pytest.approx(1.0, abs=1e-9)


def test_measure_text_lists_every_block():
    out = run("measure", DATA / "psi_m4.json").stdout
    assert "R   = 0.950774" in out
    assert out.count("{") == 7


def test_maximize_measure_round_trip(tmp_path):
    out = tmp_path / "best.json"
    rep = json.loads(run("maximize", "--starts", 8, "--seed", 11, "--out", out, "--json").stdout)
    doc = json.loads(out.read_text())
    assert doc["global_r"] == rep["best_r"]
    assert measure_json(out)["r"] == pytest.approx(rep["best_r"], abs=1e-12)


def test_maximize_is_reproducible(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run("--threads", 1, "maximize", "--starts", 6, "--seed", 5, "--out", a)
    run("--threads", 3, "maximize", "--starts", 6, "--seed", 5, "--out", b)
    assert a.read_bytes() == b.read_bytes()


def test_maximize_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"starts": 4, "seed": 3}))
    rep = json.loads(run("maximize", "--config", cfg, "--json").stdout)
    assert rep["starts"] == 4 and rep["seed"] == 3


def test_sweep_single_cell_matches_measure(tmp_path):
    csv_path = tmp_path / "grid.csv"
    run("sweep", DATA / "afm4_chain.json", "--global-min", 0.1, "--global-steps", 1,
        "--qubit-min", -0.2, "--qubit-steps", 1, "--out", csv_path)
    rows = list(csv.DictReader(csv_path.open()))
    assert len(rows) == 1
    assert float(rows[0]["bias_global"]) == pytest.approx(0.1)
    assert float(rows[0]["bias_q"]) == pytest.approx(-0.2)

    # Same ground state solved with numpy, measured through the CLI.
    np = pytest.importorskip("numpy")
    n = 4
    x = np.array([[0, 1], [1, 0]])
    z = np.diag([1.0, -1.0])

    def site(op, q):
        m = np.eye(1)
        for k in range(n - 1, -1, -1):
            m = np.kron(m, op if k == q else np.eye(2))
        return m

    eps = [0.1, -0.1, 0.1, 0.1]
    h = sum(0.4 * site(x, q) + eps[q] * site(z, q) for q in range(n))
    h = h + sum(site(z, q) @ site(z, q + 1) for q in range(n - 1))
    _, vecs = np.linalg.eigh(h)
    write_state(tmp_path / "gs.json", n, vecs[:, 0].astype(complex))
    assert float(rows[0]["r"]) == pytest.approx(measure_json(tmp_path / "gs.json")["r"], abs=1e-9)


def test_sweep_header_and_shape():
    out = run("sweep", DATA / "zero_coupling4.json", "--global-steps", 3, "--qubit-steps", 2).stdout
    lines = out.strip().splitlines()
    assert lines[0] == "bias_global,bias_q,r,gap,degenerate_flag"
    assert len(lines) == 1 + 6
    assert all(float(line.split(",")[2]) == 0.0 for line in lines[1:])


def test_roof_separable_mixture():
    rep = json.loads(run("roof", DATA / "separable_mixture.json", "--json").stdout)
    assert rep["tilde_r"] == 0.0
    assert rep["bounds"][0]["bound"] <= 1e-6
    assert rep["max_reconstruction_residual"] <= 1e-8


def test_roof_single_subset(tmp_path):
    run("fixtures", "ghz", "--n", 3, "--density", "--out", tmp_path / "rho.json")
    rep = json.loads(run("roof", tmp_path / "rho.json", "--subset", "1", "--json").stdout)
    assert len(rep["bounds"]) == 1
    assert rep["bounds"][0]["bound"] == pytest.approx(1.0, abs=1e-9)


def test_fixture_list():
    names = run("fixtures", "--list").stdout.split()
    assert {"ghz", "w", "psi_m"} <= set(names)


def test_normalization_required(tmp_path):
    write_state(tmp_path / "s.json", 2, [1, 0, 0, 1])
    assert run("measure", tmp_path / "s.json", check=False).returncode == 3
    rep = json.loads(run("measure", tmp_path / "s.json", "--normalize", "--json").stdout)
    assert rep["r"] == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("args", [
    ["measure"],
    ["bogus"],
    ["maximize", "--starts", "0"],
    ["maximize", "--slice", "diagonal"],
    ["fixtures", "nosuch"],
    ["sweep", "afm4_chain.json", "--qubit", "9"],
])
def test_input_errors_exit_2(args):
    args = [str(DATA / a) if a.endswith(".json") else a for a in args]
    assert run(*args, check=False).returncode == 2


def test_malformed_file_exit_2(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("measure", bad, check=False).returncode == 2
    bad.write_text(json.dumps({"n": 2, "amps": [[1, 0]]}))
    assert run("measure", bad, check=False).returncode == 2


def test_empty_subset_exit_2(tmp_path):
    run("fixtures", "ghz", "--n", 2, "--density", "--out", tmp_path / "rho.json")
    assert run("roof", tmp_path / "rho.json", "--subset", "1,2", check=False).returncode == 2
