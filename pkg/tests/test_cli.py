from fractions import Fraction

from kirchhoff_lab.cli import main
from kirchhoff_lab.families import NESTED, generate
from kirchhoff_lab.multigraph import format_edge_list, read_edge_list
from kirchhoff_lab.spectral import laplacian


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_nested2(tmp_path, capsys):
    out = tmp_path / "g2.txt"
    code, _, _ = run(capsys, "gen", "nested", "2", str(out))
    assert code == 0
    g = read_edge_list(out)
    assert laplacian(g) == laplacian(generate(NESTED, 2))


def test_gen_stdout(capsys):
    code, stdout, _ = run(capsys, "gen", "cycle", "3", "-")
    assert code == 0
    assert stdout.startswith("vertices v1 v2 v3")
    assert stdout.count("\nedge ") == 3


def test_gen_invalid_param(capsys):
    code, _, err = run(capsys, "gen", "fourreg", "2", "-")
    assert code == 2
    assert "fourreg" in err


def test_resistance_det_and_pinv(tmp_path, capsys):
    path = tmp_path / "fig1.txt"
    path.write_text(
        "vertices v1 v2 v3\nedge v1 v2 1\nedge v2 v3 1\nedge v2 v3 1\n"
    )
    code, out, _ = run(capsys, "resistance", str(path), "v1", "v3", "--method", "det")
    assert code == 0 and out.strip() == "3/2"
    code, out, _ = run(capsys, "resistance", str(path), "v1", "v3", "--method", "pinv")
    assert code == 0 and out.strip() == "1.50000000000"


def test_resistance_exit_codes(tmp_path, capsys):
    two = tmp_path / "two.txt"
    two.write_text("vertices a b\n")
    assert run(capsys, "resistance", str(two), "a", "b")[0] == 3
    fig1 = tmp_path / "fig1.txt"
    fig1.write_text("vertices a b\nedge a b 1\n")
    assert run(capsys, "resistance", str(fig1), "a", "zz")[0] == 4
    bad = tmp_path / "bad.txt"
    bad.write_text("lattice 4 4\n")
    assert run(capsys, "resistance", str(bad), "a", "b")[0] == 2
    assert run(capsys, "resistance", str(tmp_path / "nope.txt"), "a", "b")[0] == 2


def test_kf_methods(tmp_path, capsys):
    g2 = tmp_path / "g2.txt"
    g2.write_text(format_edge_list(generate(NESTED, 2)))
    code, out, _ = run(capsys, "kf", str(g2), "--method", "poly")
    assert code == 0 and out.strip() == "11/6"
    k4 = tmp_path / "k4.txt"
    code, _, _ = run(capsys, "gen", "complete", "4", str(k4))
    assert code == 0
    code, out, _ = run(capsys, "kf", str(k4), "--method", "eig")
    assert code == 0 and out.strip() == "3.00000000000"
    code, out, _ = run(capsys, "kf", str(g2), "--method", "all")
    assert code == 0
    assert "kf_poly 11/6" in out
    spread = float(out.splitlines()[-1].split()[1])
    assert spread < 1e-8


def test_charpoly_modes(capsys):
    code, out, _ = run(capsys, "charpoly", "nested", "2", "--mode", "recurrence")
    assert code == 0 and out.strip() == "2: 0 -384 176 -24 1"
    code, out, _ = run(capsys, "charpoly", "cycle", "3", "--mode", "direct")
    assert code == 0 and out.strip() == "0 9 -6 1"
    code, out, _ = run(capsys, "charpoly", "nested", "5", "--mode", "both")
    assert code == 0 and out.strip().endswith("MATCH")
    code, _, _ = run(capsys, "charpoly", "cycle", "3", "--mode", "recurrence")
    assert code == 2


def test_verify_exit_code(capsys):
    code, out, _ = run(capsys, "verify", "closedforms", "--seed", "0")
    assert code == 0
    assert "seed 0" in out
    assert "FAIL" not in out


def test_sweep_fig4(tmp_path, capsys):
    out = tmp_path / "fig4.csv"
    code, _, _ = run(capsys, "sweep", "fig4", "12", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "n,kf_closed,kf_numeric,y_asym,gap,gap_float"
    row1 = lines[1].split(",")
    assert row1[0] == "1"
    assert Fraction(row1[1]) == Fraction(1, 2)
    assert Fraction(row1[3]) == Fraction(-19, 6)
    assert Fraction(row1[4]) == Fraction(11, 3)
    assert out.with_suffix(".png").exists()


def test_sweep_fig7(tmp_path, capsys):
    out = tmp_path / "fig7.csv"
    code, _, _ = run(capsys, "sweep", "fig7", "10", "--out", str(out))
    assert code == 0
    lines = out.read_text().splitlines()
    header = "vertices,kf_path,kf_cycle,kf_nested_unit,kf_fourreg,kf_nested_weighted"
    assert lines[0] == header
    by_v = {line.split(",")[0]: line.split(",") for line in lines[1:]}
    assert by_v["6"][1] == "35"
    assert by_v["6"][2] == "17.5"
    assert by_v["6"][4] == "6.5"
    assert by_v["5"][3] == ""  # nested families blank at odd orders
    assert out.with_suffix(".png").exists()


def test_sweep_invalid_args(tmp_path, capsys):
    assert run(capsys, "sweep", "fig7", "3", "--out", str(tmp_path / "x.csv"))[0] == 2
    assert run(capsys, "sweep", "fig4", "0", "--out", str(tmp_path / "x.csv"))[0] == 2


def test_sweep_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert run(capsys, "sweep", "fig4", "8", "--out", str(a))[0] == 0
    assert run(capsys, "sweep", "fig4", "8", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_usage_error_exit_code(capsys):
    assert main(["gen", "heptagram", "3", "-"]) == 2
    capsys.readouterr()
