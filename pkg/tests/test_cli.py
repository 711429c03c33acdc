import pytest

from dicuts.cli import main
from dicuts.digraph import load_dg
from dicuts.generators import gen_example1


@pytest.fixture
def t5_file(tmp_path):
    path = tmp_path / "t5.dg"
    assert main(["gen", "tournament", "--k", "2", "-o", str(path)]) == 0
    return str(path)


class TestGen:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "ex1.dg"
        assert main(["gen", "example1", "--k", "1", "-o", str(path)]) == 0
        assert load_dg(path).edges == gen_example1(1).edges

    def test_stdout(self, capsys):
        assert main(["gen", "tournament", "--k", "1"]) == 0
        out = capsys.readouterr().out
        assert "3 3" in out


class TestCheck:
    def test_member(self, t5_file):
        assert main(["check", t5_file, "--k", "2", "--l", "2"]) == 0

    def test_non_member(self, t5_file):
        assert main(["check", t5_file, "--k", "1", "--l", "1"]) == 1

    def test_missing_file(self):
        assert main(["check", "no-such.dg", "--k", "1", "--l", "1"]) == 2


class TestCutVerify:
    def test_report_format(self, t5_file, capsys):
        assert main(["verify", t5_file, "--method", "d22"]) == 0
        cols = capsys.readouterr().out.strip().split("\t")
        assert cols[1:] == ["d22", "5", "10", "3", "3/1", "3", "pass"]

    def test_cut_d11c_bound(self, tmp_path, capsys):
        path = tmp_path / "ex1.dg"
        main(["gen", "example1", "--k", "1", "-o", str(path)])
        assert main(["cut", str(path), "--method", "d11c"]) == 0
        assert "77/20" in capsys.readouterr().out

    def test_precondition_exit(self, t5_file):
        # tournament on 5 is not in D(1,1)
        assert main(["cut", t5_file, "--method", "d11"]) == 2

    def test_oracle_method(self, t5_file, capsys):
        assert main(["verify", t5_file, "--method", "oracle"]) == 0
        assert "\t3\t" in capsys.readouterr().out


class TestDecomposePeel:
    def test_decompose_files(self, t5_file, tmp_path):
        prefix = str(tmp_path / "sp")
        assert main(["decompose", t5_file, "--split", "1", "1",
                     "-o", prefix]) == 0
        d1 = load_dg(prefix + ".1.dg")
        d2 = load_dg(prefix + ".2.dg")
        assert d1.m + d2.m == 10

    def test_peel_files(self, t5_file, tmp_path, capsys):
        prefix = str(tmp_path / "pe")
        assert main(["peel", t5_file, "--k", "2", "-o", prefix]) == 0
        rest = load_dg(prefix + ".rest.dg")
        removed = load_dg(prefix + ".removed.dg")
        assert rest.m + removed.m == 10
        assert "removed" in capsys.readouterr().out


class TestExplore:
    def test_problem4_out_of_scope(self, capsys):
        assert main(["explore", "--problem", "4"]) == 0
        assert "out of scope" in capsys.readouterr().out

    def test_problem2_no_counterexample(self, capsys):
        assert main(["explore", "--problem", "2", "--max-n", "8",
                     "--budget", "20", "--seed", "1"]) == 0

    def test_problem1_ratios(self, capsys):
        assert main(["explore", "--problem", "1", "--max-n", "7",
                     "--budget", "30", "--seed", "1"]) == 0
        assert "c_max" in capsys.readouterr().out
