"""Workspace loading, command dispatch, exit codes, report determinism."""

import json
from pathlib import Path

import pytest

from crossmod.errors import CheckError
from crossmod.cli import Workspace, load, main, run

CORPUS = str(Path(__file__).resolve().parent.parent / "corpus")


@pytest.fixture(scope="module")
def ws():
    return load([CORPUS])


class TestLoad:
    def test_corpus_size(self, ws):
        assert ws.count() >= 10

    def test_provenance_recorded(self, ws):
        assert ("group", "S3") in ws.provenance

    def test_duplicate_name(self, tmp_path):
        doc = {"schema": 1, "kind": "group", "name": "G",
               "elements": ["1"], "table": [["1"]]}
        f = tmp_path / "dup.json"
        f.write_text(json.dumps([doc, doc]))
        with pytest.raises(CheckError) as e:
            load([str(f)])
        assert e.value.code == "Duplicate"

    def test_ragged_table(self, tmp_path):
        doc = {"schema": 1, "kind": "group", "name": "G",
               "elements": ["1", "t"], "table": [["1", "t"], ["t"]]}
        f = tmp_path / "bad.json"
        f.write_text(json.dumps(doc))
        with pytest.raises(CheckError) as e:
            load([str(f)])
        assert e.value.code == "ParseError"

    def test_unresolved_reference(self, tmp_path):
        doc = {"schema": 1, "kind": "xmod", "name": "X", "g1": "Nope",
               "g0": "Nope", "delta": {}, "action": {}}
        f = tmp_path / "ref.json"
        f.write_text(json.dumps(doc))
        with pytest.raises(CheckError) as e:
            load([str(f)])
        assert e.value.code == "UnresolvedReference"

    def test_invalid_group_rejected_at_load(self, tmp_path):
        doc = {"schema": 1, "kind": "group", "name": "Bad",
               "elements": ["1", "t"], "table": [["1", "t"], ["t", "t"]]}
        f = tmp_path / "bad.json"
        f.write_text(json.dumps(doc))
        with pytest.raises(CheckError):
            load([str(f)])


class TestCommands:
    def test_h1(self, ws):
        rep = run(ws, ["h1", "Z2", "shiftZ2"], 24, 10**7)
        assert rep.status == "ok" and rep.findings["classes"] == 2

    def test_validate(self, ws):
        rep = run(ws, ["validate", "innerZ3"], 24, 10**7)
        assert rep.findings["kinds"] == ["xmod"]

    def test_pi(self, ws):
        rep = run(ws, ["pi", "innerZ3"], 24, 10**7)
        assert rep.findings["pi0_order"] == 2 and rep.findings["pi1_order"] == 3

    def test_analyze(self, ws):
        rep = run(ws, ["analyze", "z4wing"], 24, 10**7)
        assert rep.findings == {"flippable": False, "split": False}

    def test_lift(self, ws):
        rep = run(ws, ["lift", "cDisc", "z4wing"], 24, 10**7)
        assert rep.findings["result"]["g"]["t"]["t"] == "t"

    def test_lift_mismatch(self, ws):
        with pytest.raises(CheckError) as e:
            run(ws, ["lift", "cTau", "z4wing"], 24, 10**7)
        assert e.value.code == "DomainMismatch"

    def test_classify_ext(self, ws):
        rep = run(ws, ["classify-ext", "Z2", "shiftZ2"], 24, 10**7)
        assert rep.findings["classes"] == 2

    def test_baer(self, ws):
        rep = run(ws, ["baer", "extZ4", "extZ4", "brTriv"], 24, 10**7)
        assert rep.findings["e_order"] == 4 and rep.findings["abelian"]

    def test_braid_check(self, ws):
        rep = run(ws, ["braid-check", "brPair"], 24, 10**7)
        assert rep.findings["symmetric"] and not rep.findings["picard"]

    def test_product_h1(self, ws):
        rep = run(ws, ["product-h1", "cTau", "cTau", "brTriv"], 24, 10**7)
        assert rep.findings["result"]["g"]["t"]["t"] == "1"

    def test_wbar(self, ws):
        rep = run(ws, ["wbar", "cTau"], 24, 10**7)
        assert rep.status == "ok"

    def test_compose(self, ws):
        rep = run(ws, ["compose", "z4wing", "idShiftZ2"], 24, 10**7)
        assert rep.status == "ok" and rep.findings["e_order"] == 4

    def test_compose_mismatch(self, ws):
        with pytest.raises(CheckError) as e:
            run(ws, ["compose", "s3wing", "s3wing"], 24, 10**7)
        assert e.value.code == "DomainMismatch"

    def test_unknown(self, ws):
        with pytest.raises(CheckError) as e:
            run(ws, ["frobnicate"], 24, 10**7)
        assert e.value.code == "UnknownCommand"


class TestMainExitCodes:
    def test_ok(self, capsys):
        assert main(["--load", CORPUS, "h1", "Z2", "shiftZ2"]) == 0

    def test_usage_error(self, capsys):
        assert main(["--load", CORPUS, "lift", "cTau", "z4wing"]) == 2

    def test_unknown_command(self, capsys):
        assert main(["--load", CORPUS, "nope"]) == 2

    def test_math_failure_is_exit_1(self, tmp_path, capsys):
        # a braiding that loads (normalized) but fails the deep check
        docs = [
            {"schema": 1, "kind": "group", "name": "Z4",
             "elements": ["0", "1", "2", "3"],
             "table": [["0", "1", "2", "3"], ["1", "2", "3", "0"],
                        ["2", "3", "0", "1"], ["3", "0", "1", "2"]]},
            {"schema": 1, "kind": "xmod", "name": "X", "g1": "Z4", "g0": "Z4",
             "delta": {"0": "0", "1": "0", "2": "0", "3": "0"},
             "action": {m: {x: m for x in "0123"} for m in "0123"}},
            {"schema": 1, "kind": "braiding", "name": "badBraid", "base": "X",
             "c": {"1": {"1": "1"}}},
        ]
        f = tmp_path / "docs.json"
        f.write_text(json.dumps(docs))
        assert main(["--load", str(f), "braid-check", "badBraid"]) == 1

    def test_json_determinism(self, capsys):
        main(["--load", CORPUS, "--format", "json", "h1", "Z2", "shiftZ2"])
        out1 = capsys.readouterr().out
        main(["--load", CORPUS, "--format", "json", "h1", "Z2", "shiftZ2"])
        out2 = capsys.readouterr().out
        assert out1 == out2 and '"schema": 1' in out1

    def test_json_identical_across_thread_counts(self, capsys):
        main(["--load", CORPUS, "--format", "json", "--threads", "1",
              "classify-ext", "Z2", "shiftZ2"])
        out1 = capsys.readouterr().out
        main(["--load", CORPUS, "--format", "json", "--threads", "4",
              "classify-ext", "Z2", "shiftZ2"])
        out2 = capsys.readouterr().out
        assert out1 == out2

    def test_guard_flag_exit_2(self, capsys):
        assert main(["--load", CORPUS, "--max-search", "1",
                     "h1", "Z2", "shiftZ2"]) == 2
