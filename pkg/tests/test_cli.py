"""Command-line front end: exit codes, JSON shape, cache behavior."""

import json

import pytest

from quiddity.cli import main

INT_FIELD = {
    "min_poly": ["-1", "1"],
    "root_hint": {"re": ["1", "1"], "im": ["0", "0"]},
    "assume_irreducible": False,
}
SQRT2_FIELD = {
    "min_poly": ["-2", "0", "1"],
    "root_hint": {"re": ["1", "2"], "im": ["0", "0"]},
    "assume_irreducible": False,
}


def int_tuple_json(ks):
    return json.dumps(
        {"field": INT_FIELD, "generator": ["1"], "multipliers": list(ks)}
    )


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_zero_pair(self, capsys):
        code, out, _ = run(capsys, "check", "--tuple", int_tuple_json((0, 0)))
        assert code == 0
        doc = json.loads(out)
        assert doc == {"is_quiddity": True, "epsilon": -1, "n": 2}

    def test_1212(self, capsys):
        code, out, _ = run(capsys, "check", "--tuple", int_tuple_json((1, 2, 1, 2)))
        assert code == 0
        assert json.loads(out)["epsilon"] == -1

    def test_non_quiddity_exits_one(self, capsys):
        code, out, _ = run(capsys, "check", "--tuple", int_tuple_json((1, 1)))
        assert code == 1
        assert json.loads(out) == {"is_quiddity": False, "epsilon": None, "n": 2}

    def test_malformed_json_exits_two(self, capsys):
        code, _, err = run(capsys, "check", "--tuple", "{broken")
        assert code == 2
        assert json.loads(err)["error"] == "JSONDecodeError"

    def test_tuple_file(self, capsys, tmp_path):
        path = tmp_path / "t.json"
        path.write_text(int_tuple_json((1, 1, 1)))
        code, out, _ = run(capsys, "check", "--tuple-file", str(path))
        assert code == 0 and json.loads(out)["epsilon"] == -1


class TestVerify:
    def test_suite_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "gluing-examples")
        assert code == 0
        assert out.count("PASS") == 5 and "FAIL" not in out

    def test_json_rows(self, capsys):
        code, out, _ = run(capsys, "verify", "rouche-examples", "--json")
        assert code == 0
        rows = json.loads(out)
        assert all(r["passed"] for r in rows)
        assert len(rows) == 5

    def test_unknown_suite_exits_two(self, capsys):
        code, _, err = run(capsys, "verify", "nope")
        assert code == 2
        assert "available" in json.loads(err)["message"]


class TestClassify:
    def test_golden_ratio_open(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--min-poly", "-1,-1,1", "--root-hint", "1.6,1.7"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["family"] == "Unknown" and doc["notes"]

    def test_conjugate_family(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--min-poly", "-1,-2,1", "--root-hint", "-0.5,-0.4"
        )
        assert code == 0
        doc = json.loads(out)
        assert (doc["family"], doc["justification"]) == (
            "FourTupleFamily",
            "ConjugateModulusGE2",
        )

    def test_sqrt2(self, capsys):
        code, out, _ = run(
            capsys, "classify", "--min-poly", "-2,0,1", "--root-hint", "1,2"
        )
        assert code == 0
        assert json.loads(out)["sqrt_k"] == 2

    def test_transcendental(self, capsys):
        code, out, _ = run(capsys, "classify", "--transcendental")
        assert code == 0
        assert json.loads(out)["justification"] == "Transcendental"

    def test_assumed_field_exits_two(self, capsys):
        code, _, err = run(
            capsys,
            "classify",
            "--min-poly",
            "1,0,1,0,1",
            "--root-hint",
            "0,1,0,1",
            "--assume-irreducible",
        )
        assert code == 2
        assert json.loads(err)["error"] == "IrreducibilityUnknown"

    def test_reducible_poly_exits_two(self, capsys):
        code, _, err = run(capsys, "classify", "--min-poly", "-1,0,1")
        assert code == 2
        assert json.loads(err)["error"] == "NotIrreducible"


class TestEnumerate:
    def test_includes_zero_alternating_class(self, capsys):
        code, out, _ = run(
            capsys, "enumerate", "--int", "--nmax", "4", "--kbound", "2"
        )
        assert code == 0
        classes = [tuple(m["multipliers"]) for m in json.loads(out)["members"]]
        assert (-2, 0, 2, 0) in classes  # the class of (0,2,0,-2)
        assert (1, 2, 1, 2) in classes

    def test_cache_roundtrip_identical(self, capsys, tmp_path):
        argv = [
            "enumerate", "--int", "--nmax", "4", "--kbound", "2",
            "--cache-dir", str(tmp_path),
        ]
        code1, out1, _ = run(capsys, *argv)
        assert code1 == 0
        files = list(tmp_path.glob("*.jsonl"))
        assert len(files) == 1
        code2, out2, _ = run(capsys, *argv)
        assert code2 == 0 and out1 == out2

    def test_cache_distinguishes_census(self, capsys, tmp_path):
        base = ["--int", "--nmax", "3", "--kbound", "1", "--cache-dir", str(tmp_path)]
        run(capsys, "enumerate", *base)
        run(capsys, "census", *base)
        assert len(list(tmp_path.glob("*.jsonl"))) == 2

    def test_stale_cache_is_recomputed(self, capsys, tmp_path):
        argv = [
            "enumerate", "--int", "--nmax", "3", "--kbound", "1",
            "--cache-dir", str(tmp_path),
        ]
        code1, out1, _ = run(capsys, *argv)
        path = next(tmp_path.glob("*.jsonl"))
        path.write_text("garbage\n")
        code2, out2, _ = run(capsys, *argv)
        assert (code1, out1) == (code2, out2)


class TestCensus:
    def test_sqrt2_irreducibles(self, capsys):
        code, out, _ = run(
            capsys,
            "census",
            "--min-poly", "-2,0,1",
            "--root-hint", "1,2",
            "--nmax", "4",
            "--kbound", "2",
        )
        assert code == 0
        doc = json.loads(out)
        got = {tuple(m["multipliers"]) for m in doc["irreducible"]}
        assert (1, 1, 1, 1) in got and (0, 0, 0, 0) in got

    def test_witnesses_serialized(self, capsys):
        code, out, _ = run(
            capsys, "census", "--int", "--nmax", "5", "--kbound", "1"
        )
        assert code == 0
        doc = json.loads(out)
        reducible = [m for m in doc["members"] if m["reducible"]]
        assert reducible and all(m["witness"] for m in reducible)


class TestTransfer:
    def test_constant_four_to_other_root(self, capsys):
        tup = json.dumps(
            {"field": SQRT2_FIELD, "generator": ["0", "1"], "multipliers": [1, 1, 1, 1]}
        )
        code, out, _ = run(
            capsys, "transfer", "--tuple", tup, "--target-index", "0"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["epsilon"] == -1
        assert doc["tuple"]["multipliers"] == [1, 1, 1, 1]
        # the carried root hint now brackets the negative square root
        hi = doc["tuple"]["field"]["root_hint"]["re"][1]
        assert json.loads(json.dumps(hi)) == hi and hi.startswith("-")

    def test_non_quiddity_exits_two(self, capsys):
        tup = json.dumps(
            {"field": SQRT2_FIELD, "generator": ["0", "1"], "multipliers": [1, 2, 3]}
        )
        code, _, err = run(capsys, "transfer", "--tuple", tup, "--target-index", "0")
        assert code == 2
        assert json.loads(err)["error"] == "NotAQuiddity"


class TestParity:
    def test_eighth_root(self, capsys):
        code, out, _ = run(
            capsys,
            "parity",
            "--min-poly", "1,0,0,0,1",
            "--root-hint", "0,1,0,1",
            "--nmax", "5",
            "--kbound", "1",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["odd_members"] == []
        assert doc["counts"]["2"] == 1


class TestPolycrit:
    def test_quintic_report(self, capsys):
        code, out, _ = run(
            capsys,
            "polycrit",
            "--poly", "5,0,0,5,10,1",
            "--radius", "2",
            "--dominant", "4",
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["eisenstein_prime"] == 5
        assert doc["irreducible"]["status"] == "Proven"
        assert doc["disk_count"]["count"] == 4
        assert doc["dominant_term_count"]["count"] == 4

    def test_septic_osada(self, capsys):
        code, out, _ = run(
            capsys, "polycrit", "--poly", "11,1,-1,2,0,0,5,1", "--dominant", "6"
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["osada_prime"] == 11
        assert doc["dominant_term_count"]["count"] == 6

    def test_bad_poly_exits_two(self, capsys):
        code, _, err = run(capsys, "polycrit", "--poly", "1,junk")
        assert code == 2
        assert json.loads(err)["error"] == "ValueError"
