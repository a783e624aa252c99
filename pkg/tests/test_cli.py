import json
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

from moment_angle.cli import main

SCHEMA_DIR = Path(__file__).resolve().parent.parent / "docs" / "schemas"

HEXAGON = json.dumps(
    {
        "m": 6,
        "minimal_nonfaces": [
            [1, 3], [1, 4], [1, 5], [2, 4], [2, 5], [2, 6], [3, 5], [3, 6], [4, 6],
        ],
    }
)


def schema(name):
    with open(SCHEMA_DIR / name, "r", encoding="utf-8") as fh:
        return json.load(fh)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def validate(document, result_schema):
    jsonschema.validate(document, schema("envelope.schema.json"))
    jsonschema.validate(document["result"], schema(result_schema))


def test_homology(capsys):
    code, out, _ = run(capsys, ["homology", "--inline", HEXAGON])
    assert code == 0
    document = json.loads(out)
    validate(document, "homology.schema.json")
    assert document["result"]["ranks"] == [[-1, 0], [0, 0], [1, 1]]


def test_betti_hexagon(capsys):
    code, out, _ = run(capsys, ["betti", "--inline", HEXAGON])
    assert code == 0
    document = json.loads(out)
    validate(document, "betti.schema.json")
    assert [1, 2, 9] in document["result"]["bigraded"]
    assert document["result"]["zk_poincare"] == [1, 0, 0, 9, 16, 9, 0, 0, 1]


def test_multiwedge(capsys):
    code, out, _ = run(
        capsys,
        ["multiwedge", "--inline", '{"m":2,"minimal_nonfaces":[[1,2]]}', "--j", "2,1"],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "complex.schema.json")
    assert document["result"]["minimal_nonfaces"] == [[1, 2, 3]]


def test_real_betti(capsys):
    code, out, _ = run(
        capsys, ["real-betti", "--inline", '{"m":4,"minimal_nonfaces":[[1,3],[2,4]]}']
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "realbetti.schema.json")
    assert document["result"]["ranks"] == [1, 2, 1]


def test_family(capsys):
    code, out, _ = run(capsys, ["family", "--name", "kbarns", "--n", "3", "--s", "2"])
    assert code == 0
    document = json.loads(out)
    validate(document, "complex.schema.json")
    assert document["result"]["m"] == 9


def test_massey_family(capsys):
    code, out, _ = run(capsys, ["massey", "--family", "3,1"])
    assert code == 0
    document = json.loads(out)
    validate(document, "massey.schema.json")
    result = document["result"]
    assert result["status"] == "defined-strict"
    assert result["value"]["is_zero"] is False
    assert all(sub["value_is_zero"] for sub in result["subproducts"])


def test_massey_supports(capsys):
    code, out, _ = run(
        capsys,
        [
            "massey",
            "--inline",
            HEXAGON,
            "--supports",
            "[[1,4],[2,5],[3,6]]",
            "--degrees",
            "0,0,0",
        ],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "massey.schema.json")
    result = document["result"]
    assert result["status"] == "defined"
    assert result["contains_zero"] is True
    assert result["indeterminacy_dimension"] == 1


def test_massey_search(capsys):
    nerve_req = [
        "graphassoc",
        "--inline",
        '{"n":4,"edges":[[1,2],[2,3],[3,4]]}',
    ]
    code, out, _ = run(capsys, nerve_req)
    assert code == 0
    nerve = json.loads(out)["result"]
    validate(json.loads(out), "complex.schema.json")
    code, out, _ = run(
        capsys,
        ["massey", "--inline", json.dumps(nerve), "--search-triples"],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "massey.schema.json")
    assert document["result"]["witness_found"] is True
    assert document["result"]["nontrivial"] is True


def test_massey_search_with_profile(capsys):
    code, out, _ = run(
        capsys,
        [
            "graphassoc",
            "--inline",
            '{"n":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}',
        ],
    )
    nerve = json.loads(out)["result"]
    code, out, _ = run(
        capsys,
        ["massey", "--inline", json.dumps(nerve), "--search-triples", "--profile", "5,3,5"],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "massey.schema.json")
    result = document["result"]
    assert result["witness_found"] is True
    assert result["value"]["total_degree"] == 12


def test_graphassoc_formality(capsys):
    code, out, _ = run(
        capsys,
        ["graphassoc", "--formality", "--inline", '{"n":3,"edges":[[1,2],[2,3],[1,3]]}'],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "formality.schema.json")
    assert document["result"]["formal"] is True
    assert document["result"]["diffeo_type"] == ["(S^3 x S^5)^#9 # (S^4 x S^4)^#8"]


def test_graphassoc_nonformal(capsys):
    code, out, _ = run(
        capsys,
        ["graphassoc", "--formality", "--inline", '{"n":4,"edges":[[1,2],[2,3],[3,4]]}'],
    )
    assert code == 0
    document = json.loads(out)
    validate(document, "formality.schema.json")
    assert document["result"]["formal"] is False
    jsonschema.validate(document["result"]["witness"], schema("massey.schema.json"))
    assert document["result"]["witness"]["nontrivial"] is True


def test_determinism_of_result_blocks(capsys):
    _, first, _ = run(capsys, ["betti", "--inline", HEXAGON])
    _, second, _ = run(capsys, ["betti", "--inline", HEXAGON])
    assert json.loads(first)["result"] == json.loads(second)["result"]
    blob1 = json.dumps(json.loads(first)["result"], sort_keys=True)
    blob2 = json.dumps(json.loads(second)["result"], sort_keys=True)
    assert blob1 == blob2


def test_invalid_input_exit_code(capsys):
    code, _, err = run(capsys, ["homology", "--inline", "not json"])
    assert code == 1
    assert json.loads(err)["kind"] == "input"
    code, _, err = run(capsys, ["homology", "--inline", '{"m":3,"minimal_nonfaces":[[5,6]]}'])
    assert code == 1


def test_capacity_exit_code(capsys):
    big = json.dumps({"m": 23, "minimal_nonfaces": [[1, 2]]})
    code, _, err = run(capsys, ["betti", "--inline", big])
    assert code == 2
    assert json.loads(err)["guard"] == "betti-table"


def test_missing_input_is_an_error(capsys):
    code, _, err = run(capsys, ["homology"])
    assert code == 1


def test_output_file(tmp_path, capsys):
    out_path = tmp_path / "result.json"
    code, out, _ = run(capsys, ["homology", "--inline", HEXAGON, "--out", str(out_path)])
    assert code == 0
    assert out == ""
    document = json.loads(out_path.read_text())
    assert document["result"]["m"] == 6
