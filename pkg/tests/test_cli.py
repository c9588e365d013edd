import io
import json
import os
import subprocess
import sys

import pytest

from sutkit import records
from sutkit.cli import run
from sutkit.harness.scenarios import FLAGS, Scenario
from sutkit.sutured import A, C, ParamSurface, Piece, S
from test_sutured import annulus_data

DATA = os.path.join(os.path.dirname(__file__), os.pardir, "data")


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def _write(tmp_path, name, rec):
    p = tmp_path / name
    p.write_text(records.dumps(rec))
    return str(p)


def test_slope_delta():
    assert cli("slope-delta", "2/3", "1/2") == (0, "1\n", "")
    code, out, _ = cli("--format", "records", "slope-delta", "1/2", "3/1")
    assert code == 0 and json.loads(out) == {"first": "1/2", "second": "3/1", "delta": 5}
    code, out, _ = cli("slope-delta", "--format", "records", "--", "-1/2", "1/0")
    assert json.loads(out)["delta"] == 2
    assert cli("slope-delta", "2/4", "1/0")[0] == 2


def test_norm():
    code, out, _ = cli("norm", "-c", "2:1", "-c", "0:1:3")
    assert code == 0 and out.splitlines() == ["euler = -2", "thurston norm = 3", "beta norm = 5"]
    assert cli("norm")[0] == 2
    assert cli("norm", "-c", "x")[0] == 2


def test_index(tmp_path):
    q = ParamSurface((Piece(1, ((C("k"),), (C("k"),))),))
    assert cli("index", _write(tmp_path, "q.json", records.param_surface_to_record(q, annulus_data()))) == (0, "4\n", "")
    bad = ParamSurface((Piece(0, ((S("s1"),),)),))
    code, out, _ = cli("index", _write(tmp_path, "b.json", records.param_surface_to_record(bad, annulus_data())))
    assert code == 1 and out.startswith("P1:")
    meridian = ParamSurface((Piece(0, ((C("e1"),),)),))
    code, out, _ = cli("index", _write(tmp_path, "m.json", records.param_surface_to_record(meridian)))
    assert code == 1 and "meridian-disc" in out


def test_graph_commands(tmp_path):
    bigon = os.path.join(DATA, "bigon.graph")
    code, out, _ = cli("graph-check", bigon, "--dot", str(tmp_path / "g.dot"))
    assert code == 0 and out.splitlines() == ["vertices = 2", "edges = 2", "faces = 2", "euler = 2", "admissible"]
    assert (tmp_path / "g.dot").read_text().startswith("graph G {")
    assert cli("graph-scharlemann", bigon)[1] == "lambda_1 cycle of length 2: 1[1|2] -> 2[1|2] -> 1\n"
    code, out, _ = cli("--format", "records", "graph-scharlemann", os.path.join(DATA, "loop.graph"))
    rec = json.loads(out)
    assert code == 0 and rec["length"] == 1 and rec["steps"] == [["v", 1, "v", 2]]


def test_graph_violations(tmp_path):
    rec = json.load(open(os.path.join(DATA, "bigon.graph")))
    rec["interior_edges"] = [[[1, 1], [2, 1]], [[1, 2], [2, 2]]]
    path = _write(tmp_path, "bad.graph", rec)
    code, out, _ = cli("graph-check", path)
    assert code == 1 and "Observation 1" in out
    code, out, _ = cli("graph-scharlemann", path)
    assert code == 1 and out.startswith("no Scharlemann cycle")


def test_cobordism():
    code, out, _ = cli("cobordism", "--kind", "sphere", "--q", "3")
    assert code == 0 and out.splitlines()[0] == "H1(W) = Z/3" and "lens summand = 3" in out
    code, out, _ = cli("--format", "records", "cobordism", "--kind", "closed_genus_g", "--genus", "1", "--q", "2", "--a", "4", "6")
    assert json.loads(out)["torsion"] == [2]
    assert cli("cobordism", "--kind", "sphere", "--q", "0")[0] == 2
    assert cli("cobordism")[0] == 2


def test_scenario(tmp_path):
    code, out, _ = cli("scenario", "--delta", "2", "--kind", "sphere", "--chi", "2", "--all-flags")
    assert code == 0 and out.splitlines()[0] == "conclusion: lens space proper summand"
    code, out, _ = cli("scenario", "--delta", "2", "--kind", "torus", "--chi", "0", "--all-flags", "--unset", "M_prime_irreducible")
    assert code == 1 and "missing hypothesis: M_prime_irreducible" in out
    path = _write(tmp_path, "s.json", records.scenario_to_record(Scenario(1, "annulus", 0, 2, frozenset(FLAGS))))
    assert cli("scenario", path)[1].startswith("conclusion: Delta = 1")
    assert cli("scenario", "--delta", "1", "--kind", "disc", "--chi", "1", "--flag", "bogus")[0] == 2


def test_verify_commands():
    code, out, _ = cli("verify", "scharlemann", "--max-v", "2", "--mu", "2", "--mu", "3")
    assert code == 0 and "failures: 0" in out and "wall time" not in out
    code, out, _ = cli("--format", "records", "verify", "lambda", "--max-v", "2", "--mu", "3", "--timing")
    rec = json.loads(out)
    assert code == 0 and rec["instances"] == 3 + 24 and "wall_time" in rec
    code, out, _ = cli("verify", "connectivity", "--arcs", "1", "--mu", "1", "--excess", "0")
    assert code == 0 and "instances: " in out
    assert cli("verify", "lambda", "--mu", "0")[0] == 2


def test_verify_output_is_deterministic():
    a = cli("verify", "scharlemann", "--max-v", "3", "--mu", "3", "--seed", "7")
    b = cli("verify", "scharlemann", "--max-v", "3", "--mu", "3", "--seed", "7", "--jobs", "2")
    assert a == b


def test_usage_and_record_errors(tmp_path):
    code, _, err = cli()
    assert code == 2 and "subcommand" in err
    assert cli("frobnicate")[0] == 2
    bad = tmp_path / "bad.graph"
    bad.write_text('{"version": 7, "kind": "graph"}')
    code, _, err = cli("graph-check", str(bad))
    assert code == 2 and err.startswith(f"{bad}:1: field 'version'")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "sutkit.cli", "slope-delta", "1/0", "0/1"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0 and proc.stdout == "1\n"
