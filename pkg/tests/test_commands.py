import io
import json
from contextlib import redirect_stdout

import pytest

from cli import main
from measures.oracles import brute_force_sre
from models.configs import RunConfig
from models.reports import Report, ReportRow
from runs.commands import generate, measure_word, run
from runs.emitters import as_json, emit
from runs.sweeps import Sweep, Task
from util.errors import BudgetExceededError, VerificationFailure
from words.strings import SymbolString

HEADER = "family,k,sigma,n,chi,r,r_bar,r_c,sre,ratio_num,ratio_den,pass"


def run_json(capsys, *argv) -> dict:
    code = main([*argv, "--format", "json"])
    assert code == 0
    return json.loads(capsys.readouterr().out)


def test_measure_worked_example(capsys):
    document = run_json(capsys, "measure", "aabaa")
    assert document["command"] == "measure"
    assert document["pass"] is True
    (row,) = document["rows"]
    assert row["chi"] == 3
    assert row["n"] == 5
    assert document["details"]["chi"] == 3


def test_measure_clustered_member(capsys):
    (row,) = run_json(capsys, "measure", "332222111", "--oracle")["rows"]
    assert (row["chi"], row["r"]) == (6, 4)
    assert (row["ratio_num"], row["ratio_den"]) == (3, 2)
    assert row["pass"] is True


def test_measure_reads_input_file(capsys, tmp_path):
    path = tmp_path / "word.txt"
    path.write_bytes(b"aabaa")
    (row,) = run_json(capsys, "measure", "--input", str(path))["rows"]
    assert row["chi"] == 3


def test_measure_rejects_bad_input(capsys, tmp_path):
    assert main(["measure", "--quiet"]) == 2
    empty = tmp_path / "empty.txt"
    empty.write_bytes(b"")
    assert main(["measure", "--input", str(empty), "--quiet"]) == 2
    assert main(["measure", "a$b", "--sentinel", "$", "--quiet"]) == 2
    assert main(["measure", "aab", "--sentinel", "a", "--alphabet", "bytes", "--quiet"]) == 2
    assert main(["measure", "ab", "--sentinel", "##", "--quiet"]) == 2


def test_measure_word():
    w = SymbolString.parse("aabaa")
    record = measure_word(w)
    assert (record.chi, record.sre, record.n, record.sigma) == (3, 2, 5, 2)
    assert record.sre == brute_force_sre(w)
    assert record.oracle_chi is None


def test_gen_runmin_text(capsys):
    assert main(["gen", "--kind", "runmin", "--k", "3", "--quiet"]) == 0
    word, provenance = capsys.readouterr().out.splitlines()
    assert word == "00010111"
    provenance = json.loads(provenance)
    assert provenance["family"] == "runmin"
    assert provenance["expected"] == {"r_c": 6, "r": 8, "chi": 9}


def test_gen_outside_family_is_usage_error():
    assert main(["gen", "--kind", "runmin", "--k", "5", "--quiet"]) == 2
    assert main(["gen", "--kind", "lfsr", "--quiet"]) == 2


@pytest.mark.parametrize(
    "options, word",
    [
        ({"kind": "clustered", "exponents": "2,2"}, "1100"),
        ({"kind": "clustered", "exponents": "2,4,3"}, "221111000"),
        ({"kind": "debruijn", "sigma": 3, "k": 2}, "001021122"),
        ({"kind": "lfsr", "poly": "x^3+x+1"}, "00010111"),
        ({"kind": "runmin", "k": 2}, "0011"),
    ],
)
def test_generate(options, word):
    assert generate(RunConfig(command="gen", **options))["word"] == word


def test_gen_json_carries_word(capsys):
    document = run_json(capsys, "gen", "--kind", "debruijn", "--sigma", "2", "--k", "3")
    assert document["word"] == "00010111"
    assert document["details"]["expected"]["chi"] == 9
    assert document["rows"] == []


def test_verify_runmin_csv_is_deterministic(capsys):
    argv = ["verify", "--scope", "runmin", "--k", "7", "--format", "csv"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    lines = first.splitlines()
    assert lines[0] == HEADER
    assert len(lines) == 6
    assert [line.split(",")[1] for line in lines[1:]] == ["2", "3", "4", "6", "7"]
    assert lines[2].startswith("runmin,3,2,11,9,8,,6,")
    assert all(line.endswith(",True") for line in lines[1:])


def test_verify_sigma_bounds(capsys):
    document = run_json(capsys, "verify", "--scope", "sigma-bounds", "--sigma", "4", "--k", "3")
    assert document["pass"] is True
    assert len(document["rows"]) == 6
    assert {row["family"] for row in document["rows"]} == {"sigma-bounds"}
    assert all(row["chi"] == row["sre"] + 1 for row in document["rows"])


def test_verify_clustered(capsys):
    document = run_json(capsys, "verify", "--scope", "clustered", "--sigma", "4", "--trials", "5", "--seed", "3")
    assert document["pass"] is True
    assert len(document["rows"]) == 15
    assert document["params"]["seed"] == 3
    assert {(row["sigma"], row["r"], row["chi"]) for row in document["rows"]} == {(2, 3, 4), (3, 4, 6), (4, 5, 8)}


def test_verify_primitivity():
    report = run(RunConfig(command="verify", scope="primitivity", k=15))
    (row,) = report.rows
    assert row.passed
    assert row.detail == "2,3,4,6,7,15"


def test_sweep_is_seeded():
    config = RunConfig(command="sweep", sigma=3, trials=4, seed=11, oracle=True)
    first, second = run(config), run(config)
    assert first.passed
    assert [row.detail for row in first.rows] == [row.detail for row in second.rows]
    assert len([row for row in first.rows if row.family == "random"]) == 4
    assert len([row for row in first.rows if row.family == "clustered"]) == 8


def test_sweep_marks_budget_and_failures():
    def exhausted():
        raise BudgetExceededError("too large")

    def broken():
        raise VerificationFailure("columns differ", mismatch="first mismatch at index 0")

    def fine():
        return [ReportRow(family="measure", n=1, chi=1, r=2)]

    tasks = [Task("big", "runmin", exhausted), Task("bad", "runmin", broken), Task("ok", "measure", fine)]
    report = Sweep(tasks, workers=2).run(Report(command="verify", params={}))
    assert not report.complete
    assert not report.passed
    assert len(report.notes) == 2
    assert [row.family for row in report.rows] == ["measure", "runmin"]
    assert "bad" in report.rows[1].detail


def test_json_document_shape():
    report = Report(command="verify", params={"k": 3}, rows=[ReportRow(family="runmin", k=3, chi=9)])
    report.complete = False
    document = as_json(report.finish())
    assert set(document) == {"command", "params", "rows", "pass", "complete"}
    assert list(document["rows"][0]) == HEADER.split(",")
    assert document["rows"][0]["r"] is None


def test_text_output_reports_incomplete(capsys):
    report = Report(command="verify", params={}, rows=[ReportRow(family="runmin", k=3)], complete=False)
    emit(report.finish(), "text")
    out = capsys.readouterr().out
    assert "INCOMPLETE" in out
    assert out.rstrip().endswith("PASS")


def test_conjecture_command(capsys):
    document = run_json(capsys, "conjecture", "--k", "3")
    assert document["pass"] is True
    assert document["details"]["member_found"] is True
    assert 1 in document["details"]["scan"]["valid_positions"]
    assert "notes" not in document


def test_report_follows_redirected_stdout():
    buffer = io.StringIO()
    with redirect_stdout(buffer):
        assert main(["measure", "aabaa", "--format", "json"]) == 0
    assert json.loads(buffer.getvalue())["rows"][0]["chi"] == 3


def test_input_bytes_may_include_the_dollar(capsys, tmp_path):
    path = tmp_path / "dollar.txt"
    path.write_bytes(b"a$b")
    (row,) = run_json(capsys, "measure", "--input", str(path))["rows"]
    (same,) = run_json(capsys, "measure", "bac")["rows"]
    assert row["n"] == 3
    assert (row["chi"], row["r"], row["sre"]) == (same["chi"], same["r"], same["sre"])
    (row,) = run_json(capsys, "measure", "--input", str(path), "--alphabet", "bytes")["rows"]
    assert row["sigma"] == 256
    assert main(["measure", "--input", str(path), "--sentinel", "$", "--quiet"]) == 2
    (row,) = run_json(capsys, "measure", "--input", str(path), "--sentinel", "#")["rows"]
    assert row["chi"] == same["chi"]


def test_params_only_echo_options_of_the_command():
    assert RunConfig(command="measure", word="ab", scope="runmin", trials=9).params() == {"word": "ab", "oracle": False}
    assert RunConfig(command="conjecture", k=4, kind="lfsr").params() == {"k": 4}
    assert set(RunConfig(command="verify").params()) == {"scope", "trials", "seed", "oracle", "big"}
