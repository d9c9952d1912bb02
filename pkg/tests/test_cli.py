"""End-to-end command line checks, driven through main() in-process."""

import json
from pathlib import Path

from ringunits import cli


def run(capsys, *argv):
    try:
        code = cli.main(list(argv))
    except SystemExit as exc:        # argparse's own usage failures
        code = exc.code
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, f"exit {code}, stderr: {err}"
    return json.loads(out)


# --------------------------------------------------------------- realize

def test_realize_yes(capsys):
    data = run_json(capsys, "realize", "21")
    assert data["realizable"] is True
    assert data["witness"] == {"type": "product_of_fields", "degrees": [3, 2]}
    assert data["certificate"] == {"exponents": [3, 2], "product": 21}
    assert data["reason"] is None
    assert data["query"] == {"kind": "cardinal", "value": 21, "label": None}


def test_realize_no(capsys):
    data = run_json(capsys, "realize", "5")
    assert data["realizable"] is False
    assert data["witness"] is None
    assert data["certificate"] is None
    assert "not a product" in data["reason"]


def test_realize_zero(capsys):
    data = run_json(capsys, "realize", "0")
    assert data["realizable"] is False
    assert "identity" in data["reason"]


def test_realize_even(capsys):
    data = run_json(capsys, "realize", "14")
    assert data["realizable"] is True
    assert data["witness"] == {"type": "even_unit_ring", "m": 7}


def test_realize_one(capsys):
    data = run_json(capsys, "realize", "1")
    assert data["witness"] == {"type": "product_of_fields", "degrees": [1]}
    assert data["certificate"] == {"exponents": [], "product": 1}


def test_realize_infinite_spellings(capsys):
    # "inf" stays an opaque tag; aleph spellings are normalized
    data = run_json(capsys, "realize", "inf")
    assert data["realizable"] is True
    assert data["witness"]["type"] == "rational_function_field"
    assert data["witness"]["cardinal"] == "inf"
    for token in ("aleph0", "aleph_0"):
        data = run_json(capsys, "realize", token)
        assert data["witness"]["cardinal"] == "aleph_0"
    data = run_json(capsys, "realize", "aleph3")
    assert data["witness"]["cardinal"] == "aleph_3"


def test_realize_bad_tokens(capsys):
    for token in ("banana", "-3", "aleph_x", str((1 << 64) + 1)):
        code, out, err = run(capsys, "realize", token)
        assert code == 2, token
        assert not out


# --------------------------------------------------------- realize-group

def test_realize_group_yes(capsys):
    data = run_json(capsys, "realize-group", "C3 x C3")
    assert data["realizable"] is True
    assert data["witness"]["degrees"] == [2, 2]
    assert data["certificate"]["product"] == 9
    assert data["cross_check"]["within_guards"] is True
    assert data["cross_check"]["agrees"] is True
    assert data["cross_check"]["subset_degrees"] == [2, 2]


def test_realize_group_no(capsys):
    data = run_json(capsys, "realize-group", "9")
    assert data["realizable"] is False
    assert data["cross_check"]["agrees"] is True
    assert data["cross_check"]["subset_degrees"] is None


def test_realize_group_trivial(capsys):
    data = run_json(capsys, "realize-group", "1")
    assert data["realizable"] is True
    assert data["witness"]["degrees"] == [1]


def test_realize_group_comma_grammar(capsys):
    a = run_json(capsys, "realize-group", "3,9")
    b = run_json(capsys, "realize-group", "C3 x C9")
    assert a["realizable"] == b["realizable"] is False


def test_realize_group_even_is_out_of_scope(capsys):
    data = run_json(capsys, "realize-group", "4")
    assert data["realizable"] is None
    assert "odd" in data["reason"]


def test_realize_group_bad_input(capsys):
    code, _, _ = run(capsys, "realize-group", "C3 + C9")
    assert code == 2
    code, _, _ = run(capsys, "realize-group", "0")
    assert code == 2


def test_realize_group_resource_exit(capsys):
    code, out, err = run(capsys, "realize-group", str((1 << 64) + 1))
    assert code == 3
    assert "refused" in err


# ---------------------------------------------------------------- pgroup

def test_pgroup_elementary_mersenne(capsys):
    data = run_json(capsys, "pgroup", "7", "1,1")
    assert data["realizable"] is True
    assert data["witness"]["degrees"] == [3, 3]
    assert data["query"] == {"kind": "p_group", "p": 7, "exponents": [1, 1]}


def test_pgroup_rank_grammar(capsys):
    data = run_json(capsys, "pgroup", "31", "r3")
    assert data["witness"]["degrees"] == [5, 5, 5]


def test_pgroup_refusals(capsys):
    data = run_json(capsys, "pgroup", "5", "1")
    assert data["realizable"] is False
    assert "Mersenne" in data["reason"]
    data = run_json(capsys, "pgroup", "3", "2")
    assert data["realizable"] is False
    assert "elementary" in data["reason"]


def test_pgroup_p2_out_of_scope(capsys):
    data = run_json(capsys, "pgroup", "2", "1")
    assert data["realizable"] is None
    assert data["witness"] is None
    assert "does not hold" in data["reason"]


def test_pgroup_bad_inputs(capsys):
    assert run(capsys, "pgroup", "9", "1")[0] == 2       # composite p
    assert run(capsys, "pgroup", "7", "zebra")[0] == 2
    assert run(capsys, "pgroup", "7", "0")[0] == 2


# ----------------------------------------------------------- factor-poly

def test_factor_poly_spot(capsys):
    data = run_json(capsys, "factor-poly", "09")   # x**3 + 1
    assert data["input"]["degree"] == 3
    assert [f["degree"] for f in data["factors"]] == [1, 2]
    assert all(f["multiplicity"] == 1 for f in data["factors"])
    assert data["factors"][0]["terms"] == "x + 1"


def test_factor_poly_respects_seed_flag_without_changing_answers(capsys):
    a = run_json(capsys, "--seed", "7", "factor-poly", "5513")
    b = run_json(capsys, "--seed", "99", "factor-poly", "5513")
    assert a == b


def test_factor_poly_bad_inputs(capsys):
    assert run(capsys, "factor-poly", "zz")[0] == 2
    assert run(capsys, "factor-poly", "01")[0] == 2      # constant


# ---------------------------------------------------------- tensor-split

def test_tensor_split(capsys):
    data = run_json(capsys, "tensor-split", "2", "3")
    assert data == {"a": 2, "b": 3, "degrees": [6], "dimension_check": True}
    data = run_json(capsys, "tensor-split", "4", "6")
    assert data["degrees"] == [12, 12]
    assert data["dimension_check"] is True
    assert run(capsys, "tensor-split", "0", "3")[0] == 2


# ---------------------------------------------------------------- verify

def test_verify_roundtrip(tmp_path, capsys):
    for query in ("21", "14", "1", "inf"):
        code, out, _ = run(capsys, "realize", query)
        assert code == 0
        path = tmp_path / f"ans-{query}.json"
        path.write_text(out)
        data = run_json(capsys, "verify", str(path))
        assert data["verified"] is True
        assert data["method"] in {"enumeration", "survey", "symbolic", "formula"}


def test_verify_group_answer(tmp_path, capsys):
    code, out, _ = run(capsys, "realize-group", "C3 x C3")
    assert code == 0
    path = tmp_path / "group.json"
    path.write_text(out)
    data = run_json(capsys, "verify", str(path))
    assert data["verified"] is True
    assert data["method"] == "enumeration"


def test_verify_detects_tampering(tmp_path, capsys):
    _, out, _ = run(capsys, "realize", "21")
    doc = json.loads(out)
    doc["witness"]["degrees"] = [4, 2]
    path = tmp_path / "bad.json"
    path.write_text(json.dumps(doc))
    data = run_json(capsys, "verify", str(path))
    assert data["verified"] is False


def test_verify_negative_answer_has_nothing_to_check(tmp_path, capsys):
    _, out, _ = run(capsys, "realize", "5")
    path = tmp_path / "no.json"
    path.write_text(out)
    data = run_json(capsys, "verify", str(path))
    assert data["verified"] is None


def test_verify_missing_file(capsys):
    assert run(capsys, "verify", "/nonexistent/answer.json")[0] == 2


# ------------------------------------------------------------ survey-r2m

def test_survey_r2m(capsys):
    data = run_json(capsys, "survey-r2m", "3")
    assert data["m"] == 3
    assert data["count"] == 6
    assert data["orders"] == {"1": 1, "2": 1, "3": 2, "6": 2}
    assert data["matches_c2_x_cm"] is True
    assert run(capsys, "survey-r2m", "0")[0] == 2
    assert run(capsys, "survey-r2m", "2000000")[0] == 3


# --------------------------------------------------------- mersenne-check

def test_mersenne_check(capsys):
    data = run_json(capsys, "mersenne-check", "63")
    assert data == {"n_max": 63, "no_perfect_powers": True}
    assert run(capsys, "mersenne-check", "99")[0] == 2


# ------------------------------------------------------------ formatting

def test_default_output_is_one_sorted_line(capsys):
    _, out, _ = run(capsys, "realize", "21")
    assert out.count("\n") == 1
    data = json.loads(out)
    assert list(data) == sorted(data)
    # parse -> re-emit with sorted keys reproduces the bytes exactly
    again = json.dumps(data, sort_keys=True, separators=(",", ":")) + "\n"
    assert again == out


def test_pretty_output_roundtrips_identically(capsys):
    _, compact, _ = run(capsys, "realize", "63")
    _, pretty, _ = run(capsys, "--json-pretty", "realize", "63")
    assert pretty.count("\n") > 1
    assert json.loads(compact) == json.loads(pretty)


def test_repeated_runs_are_byte_identical(capsys):
    a = run(capsys, "realize-group", "C3 x C7")
    b = run(capsys, "realize-group", "C3 x C7")
    assert a == b


def test_usage_errors(capsys):
    assert run(capsys)[0] == 2                     # no subcommand
    assert run(capsys, "transmogrify", "3")[0] == 2


# ---------------------------------------------------------------- report

def test_report_writes_csv_and_figures(tmp_path, capsys):
    outdir = tmp_path / "rep"
    data = run_json(
        capsys, "report", "--limit", "300", "--outdir", str(outdir)
    )
    assert data["limit"] == 300
    assert data["odd_considered"] == 150
    assert 0 < data["realizable_odd"] < 150
    csv_path = outdir / "survey.csv"
    assert csv_path.exists()
    lines = csv_path.read_text().strip().splitlines()
    assert lines[0] == "k,certificate_exponents,witness"
    assert lines[1].startswith("1,")
    assert len(lines) == data["realizable_odd"] + 1
    for fig in map(Path, data["figures"]):
        assert fig.exists() and fig.stat().st_size > 1024
