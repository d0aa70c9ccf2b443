import json
import os
from pathlib import Path

import pytest

import semisep

ROOT = Path(__file__).resolve().parents[2]
DATA = Path(os.environ.get("SEMISEP_DATA_DIR", ROOT / "data"))
CORPUS = DATA / "corpus"
SCHEMAS = ROOT / "docs" / "schemas"

KIND = {
    "categories": "category",
    "functors": "functor",
    "algebras": "algebra",
    "coalgebras": "coalgebra",
    "bimodules": "bimodule",
    "corings": "coring",
    "bialgebras": "bialgebra",
    "maps": "algebra_map",
    "comaps": "coalgebra_map",
}


@pytest.fixture(scope="module")
def validator():
    jsonschema = pytest.importorskip("jsonschema")
    referencing = pytest.importorskip("referencing")
    from referencing.jsonschema import DRAFT202012

    resources = []
    for p in SCHEMAS.glob("*.json"):
        resources.append((p.name, referencing.Resource.from_contents(json.loads(p.read_text()), DRAFT202012)))
    registry = referencing.Registry().with_resources(resources)

    def make(name):
        schema = json.loads((SCHEMAS / f"{name}.json").read_text())
        return jsonschema.Draft202012Validator(schema, registry=registry)

    return make


def test_schema_version():
    assert semisep.SCHEMA_VERSION == 1


def test_fixtures_match_schemas(validator):
    count = 0
    for sub, kind in KIND.items():
        v = validator(kind)
        for p in sorted((CORPUS / sub).glob("*.json")):
            errors = list(v.iter_errors(json.loads(p.read_text())))
            assert not errors, f"{p.name}: {errors[0].message}"
            count += 1
    validator("manifest").validate(json.loads((CORPUS / "manifest.json").read_text()))
    assert count > 50


def test_ring_extension_report():
    code, report, _ = semisep.run("ring-ext", "--map", "maps/kxk_to_k.json", base=CORPUS)
    assert code == 0
    assert report["status"] == "holds"
    assert report["witness"]["z"] == ["1", "0"]
    assert report["verification"]["verified"]


def test_collapse_fails_with_counterexample():
    code, report, _ = semisep.run("cat", "decide", "--functor", "functors/collapse.json", base=CORPUS)
    assert code == 1
    assert report["status"] == "fails"
    assert report["counterexample"]


def test_monoid_bialgebra_has_no_antipode():
    code, report, _ = semisep.run("hopf", "verdict", "--bialgebra", "bialgebras/monoid_1a.json", base=CORPUS)
    assert code == 1
    assert report["status"] == "fails"


def test_execute_reproduces_the_cli_report():
    _, report, _ = semisep.run("coring", "--coring", "corings/ideal_kxk.json", base=CORPUS)
    again = semisep.execute(report["command"], report["input"], report["parameters"])
    expected = {k: v for k, v in report.items() if k != "verification"}
    assert again == expected
    assert semisep.verify_report(again)["verified"]


def test_reports_match_schema(validator):
    v = validator("report")
    for args in (
        ["ring-ext", "--map", "maps/dual_to_k.json"],
        ["bimodule", "--bimodule", "bimodules/line_over_kxk.json"],
        ["hopf", "grouplikes", "--coalgebra", "coalgebras/h4.json", "--field", "Fp:3"],
        ["ring-ext", "--map", "broken/map_bad_algebra.json"],
    ):
        _, report, _ = semisep.run(*args, base=CORPUS)
        v.validate(report)


def test_input_errors_carry_a_pointer():
    code, report, err = semisep.run("ring-ext", "--map", "broken/map_bad_algebra.json", base=CORPUS)
    assert code == 2
    assert report["status"] == "error"
    assert report["error"]["where"].endswith("algebra_short_unit.json#/unit")
    assert "expected 1 entries" in err


def test_tampered_witness_is_rejected(tmp_path):
    _, report, _ = semisep.run("ring-ext", "--map", "maps/kxk_to_k.json", base=CORPUS)
    report["witness"]["E"] = [["0"], ["1"]]
    assert not semisep.verify_report(report)["verified"]
    p = tmp_path / "r.json"
    p.write_text(json.dumps(report))
    code, out, _ = semisep.run("--verify-only", p)
    assert code == 1
    assert out["verification"]["verified"] is False


def test_exceptions_are_exposed():
    with pytest.raises(ValueError):
        semisep.execute("ring-ext", {"map": {"schema_version": 1}}, {})
