import pytest

from qbfredux import gen_phi_c
from qbfredux.cli import main
from qbfredux.qdimacs import parse_qdimacs, replay_trace, write_qdimacs

EX_QUP = "p cnf 2 2\na 1 0\ne 2 0\n1 -2 0\n-1 2 0\n"


@pytest.fixture
def phi_c_1(tmp_path):
    path = tmp_path / "phi_c_1.qdimacs"
    path.write_text(write_qdimacs(gen_phi_c(1)))
    return path


def test_preprocess_qratplus(phi_c_1, capsys):
    assert main(["preprocess", "--mode", "qratplus", str(phi_c_1)]) == 0
    f, _ = parse_qdimacs(capsys.readouterr().out)
    assert len(f) == 0


def test_preprocess_qrat_unchanged(phi_c_1, capsys):
    assert main(["preprocess", "--mode", "qrat", str(phi_c_1)]) == 0
    assert capsys.readouterr().out == phi_c_1.read_text()


def test_preprocess_is_default(phi_c_1, capsys):
    assert main([str(phi_c_1)]) == 0
    default = capsys.readouterr().out
    main(["preprocess", str(phi_c_1)])
    assert capsys.readouterr().out == default


def test_trace_and_stats(phi_c_1, tmp_path, capsys):
    trace, out = tmp_path / "t.txt", tmp_path / "o.qdimacs"
    code = main([str(phi_c_1), "--no-qratu", "--trace", str(trace), "--stats", "--out", str(out)])
    assert code == 0
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "c clauses_deleted 7" in captured.err.splitlines()
    assert len(trace.read_text().splitlines()) == 7
    f, _ = parse_qdimacs(phi_c_1.read_text())
    assert replay_trace(f, trace.read_text()) == parse_qdimacs(out.read_text())[0]


def test_solve(tmp_path, capsys):
    path = tmp_path / "small.qdimacs"
    path.write_text(EX_QUP)
    assert main(["solve", str(path)]) == 0
    assert capsys.readouterr().out == "s cnf 1\n"
    path.write_text(EX_QUP.replace("p cnf 2 2", "p cnf 2 3") + "2 0\n")
    main(["solve", str(path)])
    assert capsys.readouterr().out == "s cnf 0\n"


def test_solve_cap_exit_2(tmp_path, capsys):
    path = tmp_path / "big.qdimacs"
    path.write_text(write_qdimacs(gen_phi_c(2)))
    assert main(["solve", "--max-vars", "4", str(path)]) == 2


def test_gen(capsys):
    assert main(["gen", "phi-c", "2"]) == 0
    assert capsys.readouterr().out == write_qdimacs(gen_phi_c(2))
    assert main(["gen", "random", "--vars", "6", "--blocks", "2", "--width", "2-3", "--seed", "3"]) == 0
    f, _ = parse_qdimacs(capsys.readouterr().out)
    assert len(f.prefix) == 6 and f.prefix.num_blocks == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["--mode", "nope", "x"],
        ["gen", "phi-c"],
        ["gen", "phi-c", "0"],
        ["gen", "random", "--vars", "2", "--width", "5"],
        ["--no-qrate", "--no-qratu", "x"],
    ],
)
def test_usage_errors(argv, tmp_path, capsys):
    argv = [str(tmp_path / "in") if a == "x" else a for a in argv]
    (tmp_path / "in").write_text(EX_QUP)
    assert main(argv) == 1
    assert "error" in capsys.readouterr().err


def test_parse_error(tmp_path):
    path = tmp_path / "bad.qdimacs"
    path.write_text("p cnf 2 1\ne 1 0\n3 0\n")
    assert main([str(path)]) == 1


def test_missing_file(tmp_path):
    assert main([str(tmp_path / "missing.qdimacs")]) == 2


def test_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO(EX_QUP))
    assert main(["solve"]) == 0
    assert capsys.readouterr().out == "s cnf 1\n"


def test_byte_identical_runs(tmp_path, capsys):
    path = tmp_path / "r.qdimacs"
    main(["gen", "random", "--vars", "12", "--blocks", "3", "--clauses", "15", "--width", "3-5", "--seed", "11", "--out", str(path)])
    outputs = []
    for k in range(2):
        trace = tmp_path / f"t{k}"
        assert main([str(path), "--trace", str(trace), "--ur"]) == 0
        outputs.append((capsys.readouterr().out, trace.read_bytes()))
    assert outputs[0] == outputs[1]
