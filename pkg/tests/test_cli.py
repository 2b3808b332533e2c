import json

import pytest

from lcmdepth.cli import main

POWERS = "vars: x,y,z\nx^2, x*y, y^2\n"


@pytest.fixture
def ideal_file(tmp_path):
    p = tmp_path / "powers.txt"
    p.write_text(POWERS)
    return str(p)


@pytest.fixture
def complex_file(tmp_path):
    p = tmp_path / "edges.txt"
    p.write_text("facets: {1,2},{3,4}\n")
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_lcm_number(capsys, ideal_file):
    code, out, _ = run(capsys, "lcm-number", ideal_file)
    assert code == 0 and "lcm number: 3" in out
    code, out, _ = run(capsys, "lcm-number", "--ring", ideal_file)
    assert "lcm number: 4" in out


def test_lattice_exports(capsys, ideal_file, tmp_path):
    code, out, _ = run(capsys, "lcm-lattice", ideal_file)
    assert code == 0 and "elements: 7" in out and "length: 3" in out
    code, out, _ = run(capsys, "lcm-lattice", "--dot", ideal_file)
    assert out.count("->") == 9
    target = tmp_path / "L.json"
    code, _, _ = run(capsys, "lcm-lattice", "--json", "-o", str(target), ideal_file)
    assert len(json.loads(target.read_text())["covers"]) == 9


def test_order_dim(capsys, ideal_file, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "order-dim", "--json", str(target), ideal_file)
    assert code == 0 and "order dimension: 2" in out and "no realizer of size 1" in out
    doc = json.loads(target.read_text())
    assert doc["dimension"] == 2 and len(doc["embedding"]["coordinates"]) == 7
    code, _, err = run(capsys, "order-dim", "--dmax", "1", ideal_file)
    assert code == 3 and "resource cap" in err


def test_order_dim_poset_input(capsys, tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"n": 2, "leq": [[True, False], [False, True]]}))
    code, out, _ = run(capsys, "order-dim", "--poset", str(p))
    assert code == 0 and "order dimension: 2" in out


def test_sdepth(capsys, ideal_file, tmp_path):
    cert = tmp_path / "c.json"
    code, out, _ = run(capsys, "sdepth", "--json", str(cert), ideal_file)
    assert code == 0 and "sdepth: 2" in out
    assert json.loads(cert.read_text())["value"] == 2
    code, out, _ = run(capsys, "sdepth", "--ring", ideal_file)
    assert "sdepth: 1" in out
    code, out, _ = run(capsys, "sdepth", "--g", "3,2,1", ideal_file)
    assert "sdepth: 2" in out
    code, _, err = run(capsys, "sdepth", "--g", "1,1,1", ideal_file)
    assert code == 2


def test_depth_and_betti(capsys, ideal_file):
    code, out, _ = run(capsys, "depth", ideal_file)
    assert code == 0 and "pd(S/I): 2" in out and "depth(S/I): 1" in out and "depth(I): 2" in out
    code, out, _ = run(capsys, "betti", "--route", "lattice", "--field", "p", ideal_file)
    assert "totals: 0:1 1:3 2:2" in out
    code, out, _ = run(capsys, "betti", "--field", "7", ideal_file)
    assert "totals: 0:1 1:3 2:2" in out
    with pytest.raises(SystemExit):
        main(["betti", "--field", "reals", ideal_file])


def test_stanley_reisner(capsys, complex_file, tmp_path):
    code, out, _ = run(capsys, "sr-ideal", complex_file)
    assert code == 0 and out == "vars: x1,x2,x3,x4\nx1*x3, x1*x4, x2*x3, x2*x4\n"
    p = tmp_path / "I.txt"
    p.write_text(out)
    code, out, _ = run(capsys, "sr-complex", str(p))
    assert "facets: {1,2},{3,4}" in out or "facets: {3,4},{1,2}" in out


def test_vertex_decomposable(capsys, complex_file, tmp_path):
    code, out, _ = run(capsys, "vertex-decomposable", complex_file)
    assert code == 0 and "vertex decomposable: no" in out
    p = tmp_path / "path.txt"
    p.write_text("facets: {1,2},{2,3}\n")
    code, out, _ = run(capsys, "vertex-decomposable", str(p))
    assert "vertex decomposable: yes" in out and "shed vertex" in out


def test_check_bounds(capsys, ideal_file, tmp_path):
    js, cs = tmp_path / "b.json", tmp_path / "b.csv"
    code, out, _ = run(capsys, "check-bounds", "--json", str(js), "--csv", str(cs), "--witness-dir", str(tmp_path), ideal_file)
    assert code == 0
    doc = json.loads(js.read_text())
    row = doc["rows"][0]
    assert row["status"] == "pass" and row["values"]["sdepth"] == 2
    assert all(row["checks"].values())
    assert (tmp_path / "certificate_0.json").exists() and (tmp_path / "realizer_0.json").exists()
    assert cs.read_text().startswith("index,kind,label,status")
    code, out, _ = run(capsys, "check-bounds", "--dmax", "1", ideal_file)
    assert code == 3 and "skipped" in out


def test_sweep_and_reproduce(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    code, _, _ = run(capsys, "sweep", "--seed", "4", "--count", "6", "--json", str(a))
    assert code == 0
    run(capsys, "sweep", "--seed", "4", "--count", "6", "--json", str(b))
    assert a.read_bytes() == b.read_bytes()
    code, out, _ = run(capsys, "sweep", "--conjecture", "--count", "3", "--exhaustive-complexes", "2")
    assert code == 0 and "fail" in out
    code, out, _ = run(capsys, "reproduce-paper")
    assert code == 0 and "FAIL" not in out


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("vars: x\nx*w\n")
    code, _, err = run(capsys, "lcm-number", str(bad))
    assert code == 2 and "undeclared" in err
    code, _, _ = run(capsys, "lcm-number", str(tmp_path / "missing.txt"))
    assert code == 2
    quot = tmp_path / "q.txt"
    quot.write_text("vars: x\nx\ndenominator: x^2\n")
    code, _, _ = run(capsys, "depth", str(quot))
    assert code == 2
    code, _, _ = run(capsys, "lcm-number", "--ring", str(quot))
    assert code == 2
    zero = tmp_path / "z.txt"
    zero.write_text("vars: x\n0\n")
    code, _, _ = run(capsys, "lcm-number", str(zero))
    assert code == 2
