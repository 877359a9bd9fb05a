import json
import subprocess
import sys

import pytest

from cplactic.cli import main, parse_shape, skew_from_json, skew_to_json, tableau_from_json, tableau_to_json
from cplactic.errors import InvalidInput

WORKED = {
    "n": 5,
    "columns": [
        {"offset": 2, "cells": [3, -5, -3]},
        {"offset": 1, "cells": [2, 3, -4, -1]},
        {"offset": 0, "cells": [2, 3, 4, -1]},
    ],
}


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_p_golden(capsys):
    assert run(capsys, "--rank", "5", "p", "3 5 -5 -4 -3 -2")[:2] == (0, "3 -4 -3 -2\n")


def test_p_json_and_unicode(capsys):
    code, out, _ = run(capsys, "--rank", "2", "--json", "p", "2 1")
    assert code == 0 and json.loads(out) == {"n": 2, "columns": [[1], [2]]}
    code, out, _ = run(capsys, "--rank", "2", "p", "-1", "--unicode")
    assert out.strip() == "1̄"


def test_split_golden(capsys):
    code, out, _ = run(capsys, "--rank", "7", "split", "2 4 6 7 -7 -4 -2")
    assert code == 0
    assert out.splitlines() == ["lC: 1 3 5 6 -7 -4 -2", "rC: 2 4 6 7 -5 -3 -1"]


def test_split_extended_json(capsys):
    code, out, _ = run(capsys, "--rank", "4", "--json", "split", "--extended", "2 3 4 -4 -1")
    assert json.loads(out) == {"left": ["a1", 2, 3, -4, -1], "right": [2, 3, 4, -1, "a1-bar"]}


def test_column_commands(capsys):
    assert run(capsys, "--rank", "5", "phi", "1 4 -5 -4 -3")[1] == "1 2 -5 -3 -2\n"
    assert run(capsys, "--rank", "4", "phi-inv", "1 2 -2 -1")[1] == "3 4 -4 -3\n"
    assert run(capsys, "--rank", "5", "contract", "3 5 -5 -4 -3 -2")[1] == "3 -4 -3 -2\n"


def test_crystal_component_dot(capsys):
    code, out, _ = run(capsys, "--rank", "2", "crystal", "component", "1 2 1", "--dot")
    assert code == 0
    assert out.count("[label=\"") == 16 + 18
    again = run(capsys, "--rank", "2", "crystal", "component", "1 2 1", "--dot")[1]
    assert again == out


def test_crystal_component_json(capsys):
    code, out, _ = run(capsys, "--rank", "2", "--json", "crystal", "component", "1 1 2")
    data = json.loads(out)
    assert len(data["vertices"]) == 16 and len(data["edges"]) == 18


def test_crystal_cap(capsys):
    assert run(capsys, "--rank", "2", "--cap", "3", "crystal", "component", "1 2 1")[0] == 1


def test_crystal_op_and_highest(capsys):
    assert run(capsys, "--rank", "2", "crystal", "op", "f", "1", "1 2 1")[1] == "1 2 2\n"
    assert run(capsys, "--rank", "2", "crystal", "op", "e", "1", "1")[1] == "0\n"
    out = run(capsys, "--rank", "2", "--json", "crystal", "highest", "1 2 2")[1]
    assert json.loads(out) == {"n": 2, "word": [1, 2, 1], "path": [1]}


def test_rs_roundtrip(tmp_path, capsys):
    code, out, _ = run(capsys, "--rank", "2", "--json", "rs", "2 -1 1 -2")
    path = tmp_path / "pair.json"
    path.write_text(out)
    assert run(capsys, "--rank", "2", "rs-inv", f"@{path}")[1] == "2 -1 1 -2\n"


def test_q(capsys):
    assert run(capsys, "--rank", "2", "q", "1 2 -1")[1] == "1\n2\n1\n"


def test_insert(capsys):
    t = json.dumps({"n": 3, "columns": [[1, -3, -2], [3, -3, -1], [-3, -2], [-2]]})
    assert run(capsys, "--rank", "3", "insert", "-1", t)[1] == "2 -3 -2 | -3 -2 -1 | -2 | -2\n"


def test_rectify_and_slide(capsys):
    doc = json.dumps(WORKED)
    assert run(capsys, "--rank", "5", "rectify", doc)[1] == "2 3 -5 -3 | 2 3 -1 | 3 -1\n"
    out = run(capsys, "--rank", "5", "slide", doc, "--corner", "0,1")[1]
    assert out == "[2] 3 -5 -3 | [1] 2 3 -1 | [0] 2 3 -1\n"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "p-differential", "rs", "--rank", "2", "--max-len", "3")
    assert code == 0 and out.count("PASS") == 2


def test_verify_confluence_shape(capsys):
    code, out, _ = run(
        capsys, "--rank", "5", "verify", "confluence", "--shape", "5,5,4/2,1", "--samples", "5", "--cap", "50"
    )
    assert code == 0 and "PASS" in out


def test_exit_codes(capsys):
    assert run(capsys, "--rank", "2", "verify", "nope")[0] == 1
    assert run(capsys, "--rank", "2", "p", "1 3")[0] == 1
    assert run(capsys, "p", "1")[0] == 1
    assert run(capsys, "--rank", "2", "rectify", "{bad json")[0] == 1
    code, _, err = run(capsys, "--rank", "2", "insert", "1", '{"n": 2, "columns": [[1, 7]]}')
    assert code == 1 and "column 0, row 1" in err


def test_invariant_violation_exit_code(capsys, monkeypatch):
    from cplactic import cli
    from cplactic.errors import InvariantViolation

    def boom(*a):
        raise InvariantViolation("forced")

    monkeypatch.setattr(cli, "p_symbol", boom)
    assert run(capsys, "--rank", "2", "p", "1")[0] == 2


def test_json_roundtrips():
    t = tableau_from_json({"n": 3, "columns": [[1, -3, -2], [3, -1]]}, 3)
    assert tableau_from_json(tableau_to_json(t), 3) == t
    s = skew_from_json(WORKED, 5)
    assert skew_from_json(skew_to_json(s), 5) == s
    # plain arrays are straight columns
    assert skew_from_json({"n": 2, "columns": [[1, 2], [2]]}, 2).is_straight()
    with pytest.raises(InvalidInput):
        tableau_from_json({"n": 3, "columns": [[1]]}, 2)


def test_parse_shape():
    assert parse_shape("5,5,4/2,1") == ((5, 5, 4), (2, 1))
    assert parse_shape("3,2") == ((3, 2), ())


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "cplactic", "--rank", "5", "p", "-"],
        input="3 5 -5 -4 -3 -2",
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "3 -4 -3 -2\n"
