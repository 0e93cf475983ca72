import json

import pytest

from curveloops.acceptance import GOLDEN_CLI
from curveloops.cli import run


@pytest.mark.parametrize("argv,code,text", GOLDEN_CLI, ids=lambda v: str(v)[:50])
def test_golden_corpus(argv, code, text):
    got_code, got_text = run(list(argv))
    assert got_code == code
    if text is not None:
        assert got_text == text


def test_factor_json():
    code, text = run(["factor", "2*z^2 - 6*z^3", "--json"])
    assert code == 0
    data = json.loads(text)
    assert data == {
        "unit": "2",
        "order": 2,
        "neg": {},
        "pos": {"1": "3"},
        "prec": None,
    }


def test_classify_even_curve_with_explicit_y():
    code, text = run(
        [
            "classify",
            "--curve",
            "hyp:h=x^4-1",
            "--x",
            "z^-1",
            "--y",
            "-z^-2 + 1/2*z^2 + 1/8*z^6 + O(z^8)",
        ]
    )
    assert code == 0
    assert text == "class=Pole punct=infinity- order=1\n"


def test_family_json():
    code, text = run(
        ["family", "--curve", "a1", "--x", "z + t*z^-1", "--t", "0,1,2", "--json"]
    )
    assert code == 0
    data = json.loads(text)
    assert data["jumps"] == ["0"]
    assert data["fibers"][0] == {"t": "0", "class": "A1", "has_pole": False}


def test_residue_with_prec_flag():
    code, text = run(["residue", "--curve", "gm", "--x", "z^-2 + 1", "--form", "1/x"])
    assert code == 0
    assert text == "residue=-2\n"


def test_thirdkind_hyperelliptic():
    code, text = run(
        ["thirdkind", "--curve", "hyp:h=x^3+1", "--p", "(0, 1)", "--q", "infinity"]
    )
    assert code == 0
    lines = text.splitlines()
    assert lines[1] == "res[(0, 1)]=1"
    assert lines[2] == "res[infinity]=-1"


def test_domain_error_exit_code():
    code, text = run(["classify", "--curve", "gm", "--x", "0"])
    assert code == 1
    assert text.startswith("error:")


def test_parse_error_exit_code():
    code, text = run(["factor", "z + + 1"])
    assert code == 2
    assert text.startswith("parse error:")
    code, _ = run(["classify", "--curve", "cubic", "--x", "z"])
    assert code == 2


def test_usage_error_exit_code():
    code, _ = run(["frobnicate"])
    assert code == 2


def test_selftest_smoke():
    code, text = run(["selftest"])
    assert code == 0
    lines = text.strip().splitlines()
    assert len(lines) == 9
    assert all(line.startswith("ok ") for line in lines)
