import io
import json
import subprocess
import sys

import pytest

from tbsym.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


@pytest.fixture
def ideal_file(tmp_path):
    def write(text, name="ideal.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)
    return write


def test_mu_text_output():
    code, text = run("mu", "2", "1")
    assert code == 0
    assert text.splitlines()[0] == "(1, 1, 0, 0, ...) tail=0 proven"
    assert "step 1: corank=1 minor_order=3" in text


def test_mu_json_output():
    code, text = run("mu", "2", "1", "--json", "--depth", "5")
    assert code == 0
    data = json.loads(text)
    assert (data["num_vars"], data["depth"], data["prefix"]) == (3, 5, [1, 1, 0])


def test_zero_json():
    code, text = run("zero", "2", "3", "--json")
    data = json.loads(text)
    assert code == 0
    assert data["prefix"] == [2] and data["tail_value"] == 2 and data["tail_proven"]


def test_compute_and_product(ideal_file):
    left = ideal_file("vars: a0, b0\ngen: a0 + b0\ngen: a0*b0\n", "mu11.txt")
    right = ideal_file("# zero germ\nvars: x\ngen: 0\n", "zero.txt")
    code, text = run("compute", left)
    assert code == 0 and text.startswith("(1, 0, 0, ...)")
    code, text = run("product", left, right, "--json")
    assert code == 0 and json.loads(text)["prefix"] == [2, 1]


def test_unit_ideal_file(ideal_file):
    path = ideal_file("vars: x, y\ngen: 1 + x*y\n")
    code, text = run("compute", path, "--json")
    assert code == 0
    data = json.loads(text)
    assert data["prefix"] == [0] and data["tail_value"] == 0


def test_reduction_modes_agree():
    outs = set()
    for flags in ([], ["--reduction", "span"], ["--no-interreduce"], ["--minors", "all"]):
        code, text = run("mu", "3", "1", "--json", *flags)
        assert code == 0
        outs.add(tuple(json.loads(text)["prefix"]))
    assert outs == {(1, 1, 1, 0)}


def test_malformed_file_exit_2(ideal_file, capsys):
    path = ideal_file("vars: x\ngen: x +* 2\n")
    code, _ = run("compute", path)
    assert code == 2
    assert "line 2" in capsys.readouterr().err
    code, _ = run("compute", ideal_file("gen: x\n", "novars.txt"))
    assert code == 2
    code, _ = run("compute", "/nonexistent/file.txt")
    assert code == 2


def test_domain_errors_exit_4():
    assert run("euclid", "2", "3")[0] == 4
    assert run("mu", "0", "1")[0] == 4
    assert run("verify-varley", "1")[0] == 4
    assert run("mu", "1", "1", "--depth", "0")[0] == 4
    assert run("realize", "1^2,2^1,0*")[0] == 4
    assert run("realize", "2^1")[0] == 2


def test_timeout_exit_3():
    assert run("mu", "12", "3", "--timeout", "1")[0] == 3


def test_euclid_trace():
    code, text = run("euclid", "7", "5")
    assert code == 0
    assert text.splitlines() == ["(5,2,2,1,1,0*)", "  7 = 1*5 + 2", "  5 = 2*2 + 1", "  2 = 2*1 + 0"]
    code, text = run("euclid", "7", "5", "--json")
    assert json.loads(text)["quotients"] == [1, 2, 2]


def test_realize_echoes_factorization():
    code, text = run("realize", "2^1,1^2,0*")
    assert code == 0
    lines = text.splitlines()
    assert lines[0] == "factorization: mu_{1,1} x mu_{3,1}"
    assert lines[1] == "(2, 1, 1, 0, 0, ...) tail=0 proven"
    code, text = run("realize", "0*")
    assert code == 0 and "zero_germ(0,1)" in text


def test_verify_commands():
    code, text = run("verify-varley", "4")
    assert code == 0 and "4 passed, 0 failed, 0 skipped" in text
    code, text = run("verify-additivity", "--cases", "3", "--seed", "5", "--with-fixed")
    assert code == 0 and "8 passed" in text
    code, text = run("verify-realize", "--spec", "2^1,1^2,0*", "--spec", "3*", "--json")
    assert code == 0 and [c["status"] for c in json.loads(text)] == ["PASS", "PASS"]
    code, text = run("verify-remark22", "1,2", "2,2")
    assert code == 0 and "2 passed" in text


def test_verify_timeouts_are_skipped():
    code, text = run("verify-realize", "--spec", "3^4,0*", "--timeout", "1")
    assert code == 3
    assert "SKIPPED" in text


def test_verify_threads_keep_order():
    code, text = run("verify-varley", "5", "--threads", "2", "--json")
    assert code == 0
    labels = [c["label"] for c in json.loads(text)]
    code1, text1 = run("verify-varley", "5", "--json")
    assert labels == [c["label"] for c in json.loads(text1)]


def test_bad_arguments_exit_2():
    with pytest.raises(SystemExit) as info:
        main(["mu", "x", "1"])
    assert info.value.code == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tbsym.cli", "mu", "1", "1"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert proc.stdout.startswith("(1, 0, 0, ...)")
