import json

import pytest

import svt.enumeration
from svt import serialize as io
from svt.cli import main

FIG3 = '{"cells":[[[1],[3],[7]],[[2,4],[5,6],[8,9]]],"shape":[3,3]}'
FIG4 = ('{"cells":[[[1],[2],[6],[8],[14],[17]],[[3,4,5],[7,9],[10,11],[12,13],[15,16],[18,19]]],'
        '"shape":[6,6]}')


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_generate_figure_1(capsys):
    code, out, _ = run(capsys, "generate", "--shape", "2,2", "--density", "2,2;2,2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 7
    assert json.loads(lines[-1]) == {"count": "6", "emitted": 6}


def test_generate_ascii_and_limit(capsys):
    code, out, _ = run(capsys, "generate", "--shape", "2,2", "--density", "2,2;2,2", "--format", "ascii", "--limit", "1")
    assert code == 0
    assert "| 1 2 | 3 4 |" in out and out.strip().endswith("count: 6")


@pytest.mark.parametrize("method", ["brute", "shift", "closed", "paths", "all"])
def test_count_methods(capsys, method):
    code, out, _ = run(capsys, "count", "--shape", "3,3", "--density", "1,1,1;1,2,2", "--method", method)
    assert code == 0 and json.loads(out) == {"value": "7"}


def test_count_from_file(capsys, tmp_path):
    f = tmp_path / "d.json"
    f.write_text('{"shape":[2,2],"density":[[2,2],[2,2]]}')
    code, out, _ = run(capsys, "count", "--in", str(f))
    assert code == 0 and out.strip() == '{"value":"6"}'


def test_missing_file_is_an_error(capsys):
    code, _, err = run(capsys, "count", "--in", "/nonexistent.json")
    assert code == 2 and "does not exist" in err


def test_brute_force_cap(capsys, monkeypatch):
    monkeypatch.setenv("SVT_MAX_MASS", "5")
    code, _, err = run(capsys, "count", "--shape", "2,2", "--density", "2,2;2,2", "--method", "brute")
    assert code == 2 and "SVT_MAX_MASS" in err


@pytest.mark.parametrize("family,params,value", [
    ("catalan-k", ["n=3", "k=3"], "12"),
    ("raney", ["n=2", "k=2", "r=2"], "5"),
    ("rational", ["a=3", "b=5"], "7"),
    ("tennis", ["n=2", "s=2", "t=1"], "5"),
    ("tennis-general", ["s=2,2", "t=1,1"], "5"),
])
def test_number(capsys, family, params, value):
    code, out, _ = run(capsys, "number", "--family", family, *params)
    assert code == 0 and json.loads(out)["value"] == value


def test_number_not_coprime(capsys):
    code, _, err = run(capsys, "number", "--family", "rational", "a=2", "b=4")
    assert code == 2 and "coprime" in err


def test_map_to_path(capsys):
    code, out, err = run(capsys, "map", "to-path", FIG3, "--round-trip")
    assert code == 0 and json.loads(out) == {"steps": "ENENNNENN"} and "ok" in err


def test_map_raney_split(capsys):
    code, out, _ = run(capsys, "map", "raney-split", FIG4, "k=3", "r=4", "--round-trip")
    obj = json.loads(out)
    assert code == 0 and [len(b["cells"][0]) if b["cells"] else 0 for b in obj["blocks"]] == [1, 2, 0, 2]
    code, out2, _ = run(capsys, "map", "raney-concat", out.strip(), "--round-trip")
    assert code == 0 and out2.strip() == FIG4


def test_map_schutzenberger_and_tennis(capsys):
    code, out, _ = run(capsys, "map", "schutzenberger", FIG3, "--round-trip")
    assert code == 0
    code, out, _ = run(capsys, "map", "from-tennis", '{"s":[2,2],"t":[1,1],"lawn":[1,3]}', "--round-trip")
    assert code == 0
    code, back, _ = run(capsys, "map", "to-tennis", out.strip(), "s=2", "t=1")
    assert json.loads(back)["lawn"] == [1, 3]


def test_map_from_path(capsys):
    code, out, _ = run(capsys, "map", "from-path", '{"steps":"ENENNNENN"}',
                       "--shape", "3,3", "--density", "1,1,1;2,2,2")
    assert code == 0 and out.strip() == FIG3


def test_validate_command(capsys):
    code, out, _ = run(capsys, "validate", '{"cells":[[[1,3],[2,4]]],"shape":[2]}')
    assert code == 1 and "violation" in out


def test_canonical_json_round_trip(capsys):
    _, out, _ = run(capsys, "generate", "--shape", "3,2", "--density", "1,2,1;2,1")
    for line in out.splitlines():
        obj = json.loads(line)
        if "cells" in obj:
            assert io.dumps(io.tableau_to_obj(io.tableau_from_obj(obj))) == line
        else:
            assert io.dumps(obj) == line


def test_verify_small_subset(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "small", "--max-mass", "6")
    assert code == 0 and "10/10 checks passed" in out


def test_verify_catches_mutated_binomial(capsys, monkeypatch):
    real = svt.enumeration.binomial
    monkeypatch.setattr(svt.enumeration, "binomial", lambda n, k: real(n + 1, k))
    code, out, _ = run(capsys, "verify", "--max-mass", "6", "--only", "agreement")
    assert code == 1 and "FAIL" in out


def test_verify_small_suite_within_a_minute(capsys):
    import time
    start = time.perf_counter()
    code, out, _ = run(capsys, "verify", "--suite", "small")
    assert code == 0 and time.perf_counter() - start < 60.0
