import subprocess
import sys

from spatialknots.cli import main
from spatialknots.sgd import load


def test_build_theta(tmp_path):
    out = tmp_path / "t.sgd"
    assert main(["build", "theta", "--k1", "3_1", "--k2", "4_1", "-o", str(out)]) == 0
    assert sum(line.startswith("X ") for line in out.read_text().splitlines()) == 7


def test_build_from_sgd_path(tmp_path):
    k = tmp_path / "k.sgd"
    assert main(["build", "sum", "--k1", "5_2", "--k2", "unknot", "-o", str(k)]) == 0
    out = tmp_path / "d.sgd"
    assert main(["build", "double", "--k1", str(k), "--k2", "3_1", "--n", "2", "-o", str(out)]) == 0
    assert len(load(out).crossings) == 32


def test_verify_all_pair(capsys):
    assert main(["verify", "all", "--k1", "3_1", "--k2", "4_1", "--n", "2", "--workers", "1"]) == 0
    out = capsys.readouterr().out
    assert "VERDICT fail" not in out
    assert out.count("STMT ") > 10


def test_verify_fail_exit(tmp_path, capsys):
    t = tmp_path / "t.sgd"
    main(["build", "theta", "--k1", "3_1", "--k2", "3_1", "-o", str(t)])
    assert main(["verify", "eq1", "--k1", "3_1", "--k2", "4_1", "--input", str(t)]) == 1
    assert "inspect diagram validity" in capsys.readouterr().out


def test_extremal(capsys):
    assert main(["extremal", "--n", "2"]) == 0
    assert "max=4" in capsys.readouterr().out


def test_usage_errors(capsys):
    assert main(["build", "theta-n", "--k1", "3_1", "--k2", "4_1"]) == 2
    assert main(["nonsense"]) == 2
    assert main(["build", "theta", "--k1", "9_42", "--k2", "4_1"]) == 2
    assert main(["verify", "oplus", "--k1", "3_1", "--k2", "4_1", "--n", "1", "--k", "1",
                 "--i", "2"]) == 2
    err = capsys.readouterr().err
    assert "--n is required" in err


def test_analyze_and_identify(tmp_path, capsys):
    t = tmp_path / "t.sgd"
    main(["build", "theta-n", "--k1", "3_1", "--k2", "4_1", "--n", "2", "-o", str(t)])
    assert main(["analyze", "gamma", str(t)]) == 0
    assert "triangle x1,x2,z1" in capsys.readouterr().out
    r = tmp_path / "r.sgd"
    assert main(["resolve", str(t), "-o", str(r)]) == 0
    assert main(["identify", str(r)]) == 0
    assert capsys.readouterr().out.strip() == "3_1#3_1#4_1#4_1"
    assert main(["analyze", "gauss", "3_1"]) == 0
    assert "partition none" in capsys.readouterr().out


def test_simplify_and_corpus(tmp_path):
    assert main(["corpus", "--n", "2", "--steps", "4", "--seed", "5", "-o", str(tmp_path)]) == 0
    files = sorted(tmp_path.glob("*.sgd"))
    assert len(files) == 2
    out = tmp_path / "s.sgd"
    assert main(["simplify", str(files[0]), "--budget", "20000", "-o", str(out)]) == 0
    assert not load(out).crossings


def test_export_svg(tmp_path):
    out = tmp_path / "t.svg"
    assert main(["export-svg", "4_1", "-o", str(out)]) == 0
    assert out.read_text().startswith("<svg")


def test_console_entry_exit_code():
    proc = subprocess.run([sys.executable, "-m", "spatialknots.cli", "extremal"],
                          capture_output=True, text=True)
    assert proc.returncode == 2
