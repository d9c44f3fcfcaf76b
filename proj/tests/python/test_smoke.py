import json
import os
import subprocess

import pytest

import symtri


def test_counts():
    assert [symtri.count_symmetric(d) for d in range(1, 6)] == [1, 2, 7, 74, 1194]
    assert symtri.count_region(4) == 24
    assert symtri.count_symmetric(5, workers=4) == 1194
    assert symtri.count_naive_symmetric(3) == 7
    assert symtri.count_via_decomposition(4) == 74


def test_enumerate():
    ts = symtri.enumerate_symmetric(2)
    assert len(ts) == 2
    assert all(len(t) == 4 for t in ts)
    assert all(list(s) == sorted(s) for t in ts for s in t)
    assert len(symtri.enumerate_region(3)) == 4
    assert symtri.lattice_points(1) == [(0, 0), (1, 0), (0, 1)]


def test_bounds():
    assert symtri.lower_bound_2(9) == 42916230
    assert symtri.lower_bound_1(5) == 24
    assert symtri.edge_counts(4) == {"total": 16, "interior": 8, "boundary": 8}
    assert symtri.sandwich_check(4, 24, 74)["upper"] == 96
    with pytest.raises(symtri.BoundViolation):
        symtri.sandwich_check(4, 24, 97)
    big = 422664577207
    assert symtri.sandwich_check(9, 75358380679, big)["upper"] == 1205734090864


def test_analysis():
    assert symtri.log2_rounded(7, "one_decimal") == pytest.approx(2.8)
    assert symtri.log2_rounded(24, "up") == 5
    with pytest.raises(ValueError):
        symtri.log2_rounded(7, "sideways")
    assert symtri.capacity(2, 2) == pytest.approx(1.0)
    fit = symtri.quadratic_fit([(d, 2 * d * d - d + 3) for d in range(1, 6)])
    assert fit["a"] == pytest.approx(2.0)
    assert fit["b"] == pytest.approx(-1.0)
    assert symtri.explicit_bound_check(4, 74)["lower"] == pytest.approx(-2.0)
    cells = symtri.table_report(2, 9)
    f_tilde = [c for c in cells if c["row"] == "f_tilde"]
    assert len(f_tilde) == 9
    assert all(c["status"] == "match" for c in f_tilde)


def test_render():
    t = symtri.enumerate_symmetric(2)[1]
    svg = symtri.render_svg(2, t, axis=True)
    assert svg.count('class="edge"') == 9
    assert 'class="axis"' in svg
    with pytest.raises(IndexError):
        symtri.render_svg(1, [(0, 1, 7)])


def test_run_cli():
    code, out, _ = symtri.run_cli(["count", "--d", "3", "--symmetric"])
    assert code == 0
    assert json.loads(out)["count"] == "7"
    code, _, err = symtri.run_cli(["count", "--d", "0"])
    assert code == 2
    assert "error" in err


def test_cli_binary():
    exe = os.environ.get("SYMTRI_CLI")
    if not exe:
        pytest.skip("SYMTRI_CLI not set")
    proc = subprocess.run([exe, "bounds", "--d", "4"], capture_output=True, text=True, check=True)
    row = json.loads(proc.stdout)["rows"][0]
    assert row["F_tilde_ref"] == "74"
    assert row["total_edges"] == 16
