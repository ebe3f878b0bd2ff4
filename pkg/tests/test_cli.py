import io
import json
from pathlib import Path

import pytest

from lcaduality import cli

SAMPLES = Path(__file__).resolve().parent.parent / "samples"


def run(*argv):
    out = io.StringIO()
    code = cli.run([str(a) for a in argv], out)
    return code, out.getvalue()


@pytest.mark.parametrize("name,code", [
    ("lca.json", 0), ("bad.json", 1), ("path3.json", 1), ("fincofin_lca.json", 0),
    ("zlba.json", 0), ("sierpinski.json", 0), ("map.json", 0),
])
def test_check_exit_codes(name, code):
    assert run("check", SAMPLES / name)[0] == code


def test_missing_file_is_usage_error():
    assert run("check", SAMPLES / "nope.json")[0] == 2


def test_bad_flag():
    assert run("--format", "yaml", "check", SAMPLES / "lca.json")[0] == 2


def test_size_cap(tmp_path):
    p = tmp_path / "big.json"
    p.write_text(json.dumps({"kind": "powerset", "atoms": 9}))
    assert run("--max-atoms", "8", "check", p)[0] == 2
    p.write_text(json.dumps({"kind": "powerset", "atoms": 17}))
    assert run("check", p)[0] == 2
    p.write_text(json.dumps({"kind": "powerset", "atoms": 3}))
    code, out = run("check", p)
    assert code == 0 and "exhaustive: true" in out


def test_output_is_deterministic():
    a = run("--format", "json", "dualize", SAMPLES / "lca.json")
    b = run("--format", "json", "dualize", SAMPLES / "lca.json")
    assert a == b and a[0] == 0


def test_json_format():
    code, out = run("--format", "json", "check", SAMPLES / "bad.json")
    doc = json.loads(out)
    assert code == 1 and doc["failures"]["C2"]["witness"] == [1, 2]


def test_dot_format():
    code, out = run("--format", "dot", "dualize", SAMPLES / "zlba.json")
    assert code == 0 and out.startswith("digraph")
    assert run("--format", "dot", "weight", SAMPLES / "lca.json")[0] == 2


@pytest.mark.parametrize("cmd,name", [
    ("roundtrip", "sierpinski.json"), ("complete", "lca.json"), ("absolute", "chain3.json"),
    ("classify-map", "map.json"), ("weight", "lca.json"), ("dualize", "fincofin.json"),
    ("complete", "fincofin_lca.json"),
])
def test_subcommands_run(cmd, name):
    code, out = run(cmd, SAMPLES / name)
    assert code in (0, 1) and f'command: "{cmd}"' in out


def test_complete_rejects_non_lca():
    code, out = run("complete", SAMPLES / "path3.json")
    assert code == 1 and "error" in out


def test_product():
    code, out = run("--format", "json", "product", SAMPLES / "lca.json", SAMPLES / "lca.json")
    assert code == 0 and json.loads(out)["ok"]


def test_invariants_subset():
    code, out = run("invariants", "--criteria", "2,3")
    assert code == 0 and "number: 2" in out and "number: 3" in out
    assert run("invariants", "--criteria", "99")[0] == 2


def test_triple_round_trip():
    assert run("roundtrip", SAMPLES / "lca.json")[0] == 0
    code, out = run("roundtrip", SAMPLES / "path3.json")
    assert code == 1 and "lca_isomorphism: false" in out
