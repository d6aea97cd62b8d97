import json

import pytest

from ordplex.cli import main
from ordplex.toolkit import edge, parse_complex, serialize_complex


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_consum_both_point_point(capsys):
    code, out, _ = run(capsys, "consum", "POINT", "POINT", "--window", "-10:10", "--method", "both")
    assert code == 0
    assert "EQUAL" in out
    assert "vertices=21 edges=20" in out


def test_consum_writes_document(capsys, tmp_path):
    out_path = tmp_path / "sum.json"
    code, out, _ = run(capsys, "consum", "EDGE", "POINT", "--window", "0:1", "--method", "direct", "-o", str(out_path))
    assert code == 0 and "f-vector=[4, 5, 2]" in out
    oc = parse_complex(out_path.read_text())
    assert len(oc.complex.edge_set()) == 5
    code, out, _ = run(capsys, "dist", str(out_path), "a|v0|1", "b|v0|0")
    assert code == 0 and out.strip() == "2"


def test_dist_unreachable(capsys, tmp_path):
    f = write(tmp_path, "two.json", json.dumps({"mode": "flag", "vertices": ["a", "b"], "order": []}))
    code, out, _ = run(capsys, "dist", f, "a", "b")
    assert code == 0 and out.strip() == "unreachable"


def test_validate(capsys, tmp_path):
    good = write(tmp_path, "e.json", serialize_complex(edge()))
    code, out, _ = run(capsys, "validate", good)
    assert code == 0 and "flag: yes" in out
    bad = write(
        tmp_path,
        "cyc.json",
        json.dumps(
            {
                "mode": "flag",
                "vertices": ["a", "b", "c"],
                "edges": [["a", "b"], ["b", "c"], ["a", "c"]],
                "order": [["a", "b"], ["b", "c"], ["c", "a"]],
            }
        ),
    )
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and "P3 violated at a, b, c" in err


def test_validate_reserved_character(capsys, tmp_path):
    bad = write(tmp_path, "r.json", json.dumps({"mode": "flag", "vertices": ["a|b"]}))
    code, _, err = run(capsys, "validate", bad)
    assert code == 1 and "reserved" in err


def test_usage_errors(capsys):
    assert run(capsys, "validate", "/no/such/file")[0] == 2
    assert run(capsys, "consum", "POINT", "POINT", "--window", "3:1")[0] == 2
    assert run(capsys, "consum", "NOPE", "POINT", "--window", "0:1")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == 2


def test_product_and_export(capsys, tmp_path):
    out_path = tmp_path / "p.json"
    code, _, err = run(capsys, "product", "EDGE", "EDGE", "-o", str(out_path))
    assert code == 0 and "euler=1" in err
    code, out, _ = run(capsys, "export", str(out_path), "--dot")
    assert code == 0 and out.count("--") == 5


def test_realize(capsys):
    code, out, _ = run(
        capsys, "realize", "EDGE", "POINT", "--p1", "a:1/2,b:1/2", "--p2", "v0", "--r", "1/4", "--window", "0:1"
    )
    assert code == 0
    assert json.loads(out) == [["a|v0|0", 1, 2], ["b|v0|0", 1, 4], ["b|v0|1", 1, 4]]
    code, _, _ = run(capsys, "realize", "POINT", "POINT", "--p1", "v0", "--p2", "v0", "--r", "-7/2", "--window", "0:1")
    assert code == 1


def test_gen_is_deterministic(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "gen", "--vertices", "5", "--seed", "3", "-o", str(a))[0] == 0
    assert run(capsys, "gen", "--vertices", "5", "--seed", "3", "-o", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()
    assert run(capsys, "gen", "--vertices", "0", "--seed", "3")[0] == 2
