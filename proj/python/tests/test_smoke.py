import pathlib

import pytest

import pseudomod

SCENARIOS = pathlib.Path(__file__).resolve().parents[2] / "scenarios"


def test_bundled_pipeline_is_deterministic():
    path = SCENARIOS / "diag-ordinary.json"
    code, report = pseudomod.run_scenario(str(path))
    assert code == 0
    assert report["schema"] == pseudomod.REPORT_SCHEMA
    assert report["status"] == "ok"
    assert report["pipelines"][0]["ordinary"]["is_ordinary"] is True
    assert pseudomod.run_scenario(str(path))[1] == report


def test_scenario_from_dict_and_modes():
    scenario = {
        "schema": pseudomod.SCENARIO_SCHEMA,
        "name": "mini",
        "rings": {"A": {"kind": "field", "p": 5}},
        "groups": {"G": {"kind": "cyclic", "n": 4}},
        "characters": {"k": {"ring": "A", "group": "G", "values": [2]}},
        "representations": {"rho": {"kind": "matrix", "ring": "A", "group": "G", "images": [[2, 0, 0, 3]]}},
        "pipelines": [{"rep": "rho", "kappa": "k"}],
    }
    code, report = pseudomod.run_scenario(scenario, mode="validate")
    assert code == 0
    assert report["scenario"] == "mini"


def test_errors_map_to_python_exceptions():
    with pytest.raises(pseudomod.InputError):
        pseudomod.run_scenario("{not json")
    with pytest.raises(ValueError):
        pseudomod.run_scenario({"schema": "pseudomod.scenario/9"})
    with pytest.raises(pseudomod.BudgetExceeded):
        pseudomod.run_scenario(str(SCENARIOS / "diag-ordinary.json"), budget=1)


def test_corpus_and_checksum():
    corpus = pseudomod.generate_corpus(0)
    assert corpus["manifest"]["schema"] == pseudomod.MANIFEST_SCHEMA
    assert corpus["manifest"]["checksum"] == "76055b2b240edd6c"
    assert len(corpus["entries"]) == 20
    assert pseudomod.generate_corpus(0, reps=0, towers=0)["entries"] == []
    assert pseudomod.fnv1a_hex("foobar") == "85944171f73967e8"


def test_tower_and_criterion():
    tower, failures = pseudomod.audit_tower("plane", 2)
    assert failures == []
    assert tower["conditions"]["2"] == "true"
    assert tower["length_h_mod_I"] == 2
    node, failures = pseudomod.lenstra("node", r=2)
    assert failures == []
    assert node["criterion_met"] is True
    non_ci, _ = pseudomod.lenstra("non_ci")
    assert non_ci["criterion_met"] is False
    assert non_ci["isomorphism_checked"] is False
    assert not non_ci.get("is_isomorphism", False)
