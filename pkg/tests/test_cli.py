import io
import json

import pytest

from golaycorr import parse_sequence, psc, read_sequences
from golaycorr.cli import dispatch, format_report
from golaycorr.criteria import EqualityCase, classify_equality, demerit_report

FIELDS = {"adf_f", "adf_g", "cdf", "psc", "lower_slack", "upper_slack", "case", "lambda", "mu", "residual"}


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    code = dispatch(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def golay4(tmp_path):
    f, g = tmp_path / "f.seq", tmp_path / "g.seq"
    f.write_text("bin:+++-\n")
    g.write_text("% second member\nbin:++-+\n")
    return str(f), str(g)


def test_analyze_human(golay4):
    code, out, err = run(["analyze", *golay4])
    assert code == 0 and err == ""
    assert "0.25" in out and "0.75" in out
    assert "LowerBoundGolay(lambda=1)" in out


def test_analyze_json(golay4):
    code, out, _ = run(["analyze", *golay4, "--json"])
    rec = json.loads(out)
    assert FIELDS <= rec.keys()
    assert rec["psc"] == 1.0 and rec["case"] == "lower_bound_golay" and rec["lambda"] == 1.0
    assert (rec["adf_f"], rec["adf_g"], rec["cdf"]) == (0.25, 0.25, 0.75)


def test_analyze_fast_and_naive_agree(golay4):
    a = run(["analyze", *golay4, "--json", "--fast"])[1]
    b = run(["analyze", *golay4, "--json", "--naive"])[1]
    assert a == b


def test_analyze_missing_file(tmp_path, golay4):
    code, out, err = run(["analyze", str(tmp_path / "missing.seq"), golay4[1]])
    assert code == 2 and out == "" and "missing.seq" in err
    assert run(["analyze", "missing.seq"])[0] == 2


def test_analyze_parse_error(tmp_path, golay4):
    bad = tmp_path / "bad.seq"
    bad.write_text("bin:++x\n")
    code, out, err = run(["analyze", str(bad), golay4[0]])
    assert code == 2 and out == ""


def test_analyze_zero_sequence(tmp_path, golay4):
    z = tmp_path / "z.seq"
    z.write_text("cplx:0,0\n")
    with pytest.warns(UserWarning):
        code, out, _ = run(["analyze", str(z), golay4[0]])
    assert code == 2 and out == ""


def test_dump_spectrum(tmp_path, golay4):
    path = tmp_path / "spec.tsv"
    assert run(["analyze", *golay4, "--dump-spectrum", str(path)])[0] == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 7
    assert lines[0].split("\t")[0] == "-3"


def test_construct_and_round_trip(tmp_path):
    code, out, _ = run(["construct", "--length", "52"])
    assert code == 0
    pair = tmp_path / "pair.seq"
    pair.write_text(out)
    f, g = read_sequences(pair)
    assert len(f) == len(g) == 52
    fa, ga = tmp_path / "a.seq", tmp_path / "b.seq"
    fa.write_text(out.splitlines()[1] + "\n")
    ga.write_text(out.splitlines()[2] + "\n")
    rec = json.loads(run(["analyze", str(fa), str(ga), "--json"])[1])
    assert abs(rec["psc"] - 1) <= 1e-9
    code, out, _ = run(["verify-golay", str(pair), "--json"])
    assert code == 0 and json.loads(out)["verdict"] is True


def test_construct_inadmissible():
    code, out, err = run(["construct", "--length", "6"])
    assert code == 1 and out == "" and "not of the form" in err


def test_construct_json():
    rec = json.loads(run(["construct", "--length", "20", "--json"])[1])
    assert (rec["a"], rec["b"], rec["c"]) == (1, 1, 0)
    assert psc(parse_sequence(rec["f"]), parse_sequence(rec["g"])) == 1.0


def test_verify_two_files(golay4):
    code, out, _ = run(["verify-golay", *golay4])
    assert code == 0 and "True" in out


def test_search_json_and_dump(tmp_path):
    dump = tmp_path / "argmin.seq"
    code, out, _ = run(["search", "--length", "2", "--json", "--dump-argmin", str(dump)])
    rec = json.loads(out)
    assert rec["min_psc"] == 1.0 and rec["golay_count"] == 8 and rec["argmin_count"] == 8
    assert len(read_sequences(dump)) == 16


def test_search_local():
    code, out, _ = run(["search", "--length", "4", "--mode", "local", "--restarts", "30", "--seed", "2", "--json"])
    assert code == 0 and json.loads(out)["min_psc"] == 1.0


def test_search_out_of_range():
    assert run(["search", "--length", "9"])[0] == 2


def test_machine_output_is_reproducible():
    for argv in (["montecarlo", "--length", "12", "--samples", "3000", "--seed", "4", "--json"],
                 ["search", "--length", "6", "--mode", "local", "--seed", "4", "--json"]):
        a = run(argv)[1]
        b = run(argv + ["--workers", "3"])[1]
        assert a == b
        assert len(a.strip().splitlines()) == 1


def test_montecarlo_fields():
    rec = json.loads(run(["montecarlo", "--length", "2", "--samples", "500", "--json"])[1])
    assert rec["mean_adf"] == 0.5
    assert {"mean_cdf", "mean_psc", "se_adf", "se_cdf", "se_psc", "seed"} <= rec.keys()


def test_bench():
    code, out, _ = run(["bench", "--lengths", "1,256", "--repetitions", "1", "--json"])
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["length"] for r in rows] == [1, 256]
    assert rows[0]["max_deviation"] == 0.0
    assert all(r["ok"] for r in rows)


def test_usage_errors():
    assert run([])[0] == 2
    assert run(["construct"])[0] == 2
    assert run(["bench", "--lengths", "a,b"])[0] == 2


def test_format_report_cases():
    rec = json.loads(format_report(demerit_report([0, 1], [1, 1]), classify_equality([0, 1], [1, 1]), machine=True))
    assert rec["case"] == "monomial" and rec["psc"] == 1.0
    rep = demerit_report([1, 1, 1, -1], [1, 1])
    rec = json.loads(format_report(rep, classify_equality([1, 1, 1, -1], [1, 1]), machine=True))
    assert rec["case"] == "interior" and rec["lambda"] is None and rec["mu"] is None
    text = format_report(rep, EqualityCase("interior", 0.5))
    assert "Interior" in text


def test_twelve_significant_digits():
    rec = json.loads(format_report(demerit_report([1, 2j, 3], [1, -1]), classify_equality([1, 2j, 3], [1, -1]), machine=True))
    for key in ("adf_f", "cdf", "psc"):
        assert len(repr(rec[key]).replace(".", "").replace("-", "").lstrip("0")) <= 13
