import json

import pytest

from lrhadamard.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_lr_cup_text(capsys):
    code, out, err = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    assert (code, err) == (0, "")
    assert out == "c[1,1]=1 c[2]=1\n"


def test_lr_empty_partitions(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "0", "--mu", "0", "--box", "1,1")
    assert code == 0
    assert out == "c[]=1\n"


def test_lr_single_coefficient_minimal_box(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "2,1", "--mu", "2,1",
                       "--nu", "3,2,1", "--minimal")
    assert code == 0
    assert out == "c[3,2,1]=2\n"


def test_lr_nu_absent_is_zero(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1",
                       "--nu", "3", "--box", "2,2")
    assert code == 0
    assert out == "c[3]=0\n"


def test_lr_lower_terms_bracketed(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "2",
                       "--box", "2,2", "--with-lower-terms")
    assert code == 0
    assert out == "[c[1]=5/2] c[2,1]=1\n"


def test_lr_cup_can_vanish(capsys):
    # degree 8 exceeds anything in the 2x2 box
    code, out, _ = run(capsys, "lr", "--lambda", "2,2", "--mu", "2,2", "--box", "2,2")
    assert code == 0
    assert out == "0\n"


def test_lr_json_document(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "2", "--box", "2,2",
                       "--with-lower-terms", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {
        "box": {"k": 2, "c": 2},
        "lambda": "1",
        "mu": "2",
        "terms": [
            {"nu": "1", "coeff": "5/2", "lower": True},
            {"nu": "2,1", "coeff": "1", "lower": False},
        ],
    }
    # round trip: parse then re-render is the identity
    assert json.dumps(doc, indent=2) + "\n" == out


def test_lr_latex(capsys):
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "2", "--box", "2,2",
                       "--with-lower-terms", "--format", "latex")
    assert code == 0
    assert out == ("s_{(1,0)} \\bullet s_{(2,0)} = "
                   "\\underline{\\tfrac{5}{2} s_{(1,0)}} + s_{(2,1)}\n")


def test_exit_code_out_of_box(capsys):
    code, out, err = run(capsys, "lr", "--lambda", "3", "--mu", "1", "--box", "2,2")
    assert code == 3
    assert out == ""
    assert "does not fit" in err


def test_exit_code_parse_failure(capsys):
    code, _, err = run(capsys, "lr", "--lambda", "a,b", "--mu", "1", "--box", "2,2")
    assert code == 2 and "parse" in err
    code, _, err = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2")
    assert code == 2
    code, _, err = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--minimal")
    assert code == 2 and "--nu" in err


def test_exit_code_resource_limit(capsys):
    code, _, err = run(capsys, "lr", "--lambda", "40,40", "--mu", "40,40", "--full")
    assert code == 4 and "cap" in err


def test_conflicting_box_flags_rejected(capsys):
    with pytest.raises(SystemExit):
        main(["lr", "--lambda", "1", "--mu", "1", "--box", "2,2", "--minimal"])
    capsys.readouterr()


def test_table_tiny_box(capsys):
    code, out, _ = run(capsys, "table", "--n", "2", "--k", "1")
    assert code == 0
    assert out == ("s[] * s[] = s[]\n"
                   "s[] * s[1] = s[1]\n"
                   "s[1] * s[1] = [1/4 s[]]\n")


def test_table_pair_count_and_cup_only(capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--k", "2")
    assert code == 0
    assert len(out.splitlines()) == 21
    code, cup_out, _ = run(capsys, "table", "--n", "4", "--k", "2",
                           "--no-with-lower-terms")
    assert code == 0
    # lower-term brackets wrap whole terms, so they follow "= " or "+ "
    assert "= [" not in cup_out and "+ [" not in cup_out
    assert "s[1] * s[2] = s[2,1]" in cup_out.splitlines()
    assert "s[2,2] * s[2,2] = 0" in cup_out.splitlines()


def test_table_json_counts(capsys):
    code, out, _ = run(capsys, "table", "--n", "5", "--k", "2", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["box"] == {"k": 2, "c": 3}
    assert len(doc["pairs"]) == 55
    by_key = {(p["lambda"], p["mu"]): p["terms"] for p in doc["pairs"]}
    assert by_key[("1", "2")] == [
        {"nu": "2,1", "coeff": "1", "lower": False},
        {"nu": "3", "coeff": "1", "lower": False},
    ]


def test_table_latex_underlines_lower_terms(capsys):
    code, out, _ = run(capsys, "table", "--n", "4", "--k", "2", "--format", "latex")
    assert code == 0
    assert out.startswith("\\begin{align*}\n")
    assert out.endswith("\\end{align*}\n")
    assert ("s_{(1,0)} \\bullet s_{(2,0)} &= \\underline{\\tfrac{5}{2} s_{(1,0)}}"
            " + s_{(2,1)} \\\\") in out


def test_matrix_trivial(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "2", "--k", "1")
    assert code == 0
    lines = out.splitlines()
    assert lines[1].split() == ["s[]", "1", "1"]
    assert lines[2].split() == ["s[1]", "1/2", "-1/2"]


def test_matrix_json_and_inverse(capsys):
    code, out, _ = run(capsys, "matrix", "--n", "2", "--k", "1", "--format", "json")
    doc = json.loads(out)
    assert doc["entries"] == [["1", "1"], ["1/2", "-1/2"]]
    assert doc["points"] == [["1/2"], ["-1/2"]]
    assert doc["inverse"] is False
    code, out, _ = run(capsys, "matrix", "--n", "2", "--k", "1", "--inverse",
                       "--format", "json")
    doc = json.loads(out)
    assert doc["inverse"] is True
    assert doc["entries"] == [["1/2", "1"], ["1/2", "-1"]]


def test_verify_counts(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert out.splitlines()[-1] == "boxes: 6, pairs: 56, all passed"


def test_verify_smallest(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "2")
    assert code == 0
    assert out == ("box 1,1: dimension 2, pairs 3, ok\n"
                   "boxes: 1, pairs: 3, all passed\n")


def test_verify_json(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc == {"max_n": 3, "boxes": 3, "pairs": 15,
                   "failures": [], "passed": True}


def test_verify_rejects_large_sweeps(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "9")
    assert code == 2 and "--max-n" in err


def test_deterministic_output(capsys):
    args = ("table", "--n", "5", "--k", "2", "--format", "json")
    _, first, _ = run(capsys, *args)
    _, second, _ = run(capsys, *args)
    assert first == second


def test_cache_roundtrip(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LRH_CACHE_DIR", str(tmp_path))
    code, first, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    assert code == 0
    cached = list(tmp_path.glob("context-v1-*.json"))
    assert len(cached) == 1
    code, second, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    assert code == 0 and first == second


def test_corrupt_cache_is_rebuilt(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LRH_CACHE_DIR", str(tmp_path))
    bad = tmp_path / "context-v1-n4-k2.json"
    bad.write_text("{not json")
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    assert code == 0
    assert out == "c[1,1]=1 c[2]=1\n"
    # the rebuild replaced the bad file with a loadable one
    assert json.loads(bad.read_text())["version"] == 1


def test_stale_cache_content_is_rejected(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("LRH_CACHE_DIR", str(tmp_path))
    run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    path = tmp_path / "context-v1-n4-k2.json"
    doc = json.loads(path.read_text())
    doc["M"][1][0] = "999"
    path.write_text(json.dumps(doc))
    code, out, _ = run(capsys, "lr", "--lambda", "1", "--mu", "1", "--box", "2,2")
    assert code == 0
    assert out == "c[1,1]=1 c[2]=1\n"
