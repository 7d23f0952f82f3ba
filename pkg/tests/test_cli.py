import csv
import io
import json
import os
import subprocess
import sys

import pytest

from rencontres.cli import main, parse_range, random_pool
from rencontres.core import IntPoly


def run(argv):
    out = io.StringIO()
    code = main(argv, out=out)
    return code, out.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


class TestVerify:
    def test_theorem1_grid(self):
        code, text = run(["verify", "theorem1", "--n", "0..20", "--l", "0..25"])
        recs = records(text)
        assert code == 0 and len(recs) == 546
        assert all(list(r) == ["identity", "params", "lhs", "rhs", "ok"] for r in recs)

    def test_character_norm(self):
        code, text = run(["verify", "character-norm", "--n", "2..30"])
        assert code == 0 and len(records(text)) == 29

    def test_theorem2_single(self):
        code, text = run(["verify", "theorem2", "--n", "5", "--poly", "1,-2,1"])
        (rec,) = records(text)
        assert code == 0
        assert rec["lhs"] == rec["rhs"] == "120" and rec["ok"] is True

    def test_theorem2_default_pool(self):
        code, text = run(["verify", "theorem2", "--n", "0..30"])
        assert code == 0 and text

    def test_theorem2_seeded_pool(self):
        code, a = run(["verify", "theorem2", "--n", "0..12", "--seed", "7"])
        _, b = run(["verify", "theorem2", "--n", "0..12", "--seed", "7"])
        assert code == 0 and a == b
        assert random_pool(7) == random_pool(7)

    def test_explore_exits_zero_despite_mismatch(self):
        code, text = run(["verify", "theorem2", "--n", "0..1", "--poly", "0,0,1", "--explore"])
        recs = records(text)
        assert code == 0 and not all(r["ok"] for r in recs)

    def test_negative_range(self):
        code, text = run(["verify", "lemma2", "--n", "0..3", "--t=-1..4"])
        assert code == 0 and len(records(text)) == 4 * 6

    @pytest.mark.parametrize("tag, flags", [
        ("easy", ["--n", "0..5"]),
        ("stirling", ["--n", "0..4", "--x=-3..3"]),
        ("recursion", ["--n", "1..4"]),
        ("transform", ["--n", "0..4", "--k", "0..4", "--l", "0..5"]),
    ])
    def test_other_tags(self, tag, flags):
        code, text = run(["verify", tag, *flags])
        assert code == 0 and all(r["ok"] for r in records(text))

    @pytest.mark.parametrize("argv", [
        ["verify", "bogus", "--n", "1"],
        ["verify", "theorem1", "--n", "0..3"],
        ["verify", "easy", "--n", "5..2"],
        ["verify", "easy", "--n", "x"],
        ["verify", "easy", "--n", "0..3", "--l", "1"],
        ["verify", "easy", "--n", "0..3", "--poly", "1"],
        ["verify", "theorem2", "--n", "3", "--poly", "1,,2"],
        ["verify", "theorem2", "--n", "3", "--poly", "1", "--seed", "1"],
        ["verify", "character-norm", "--n", "1..3"],
        ["table", "bell"],
        [],
    ])
    def test_usage_errors(self, argv):
        code, _ = run(argv)
        assert code == 2

    def test_lhs_rhs_reparse(self):
        _, text = run(["verify", "easy", "--n", "0..50"])
        for r in records(text):
            assert isinstance(r["lhs"], str) and isinstance(r["rhs"], str)
            assert (int(r["lhs"]) == int(r["rhs"])) == r["ok"]


def test_failure_exit_code(monkeypatch):
    from rencontres import identities
    from rencontres.reports import VerificationReport

    monkeypatch.setitem(identities.IDENTITIES, "easy",
                        (("n",), lambda n, engine: VerificationReport("easy", {"n": n}, 0, 1)))
    code, _ = run(["verify", "easy", "--n", "0..1"])
    assert code == 1


class TestTable:
    def test_derangements(self):
        code, text = run(["table", "derangements", "--n-max", "6"])
        rows = list(csv.reader(io.StringIO(text)))
        assert code == 0 and rows[0] == ["n", "d"]
        assert [int(r[1]) for r in rows[1:]] == [1, 0, 1, 2, 9, 44, 265]
        assert "\r" not in text

    def test_bell(self):
        _, text = run(["table", "bell", "--n-max", "4"])
        assert [int(r[1]) for r in list(csv.reader(io.StringIO(text)))[1:]] == [1, 1, 2, 5, 15]

    def test_rencontres_zero(self):
        _, text = run(["table", "rencontres", "--n-max", "0"])
        assert text == "n,k,f\n0,0,1\n"

    def test_rencontres_triangle(self):
        _, text = run(["table", "rencontres", "--n-max", "4"])
        rows = list(csv.reader(io.StringIO(text)))[1:]
        assert len(rows) == 15
        assert [int(r[2]) for r in rows if r[0] == "4"] == [9, 8, 6, 0, 1]

    def test_stirling(self):
        _, text = run(["table", "stirling", "--n-max", "4"])
        rows = list(csv.reader(io.StringIO(text)))[1:]
        assert ["4", "2", "7"] in rows

    def test_big_values_are_decimal(self):
        _, text = run(["table", "derangements", "--n-max", "60"])
        last = text.strip().splitlines()[-1].split(",")
        from rencontres.core import derangement

        assert int(last[1]) == derangement(60)


class TestOracleCompare:
    def test_six(self):
        code, text = run(["oracle-compare", "--n-max", "6"])
        recs = records(text)
        assert code == 0 and recs and all(r["ok"] for r in recs)
        kinds = {r["identity"] for r in recs}
        assert {"oracle_rencontres_closed", "oracle_rencontres_recursive", "oracle_derangement",
                "oracle_weighted_sum", "oracle_theorem2", "oracle_inner_product"} <= kinds

    def test_zero(self):
        code, text = run(["oracle-compare", "--n-max", "0"])
        assert code == 0 and {r["params"]["n"] for r in records(text)} == {0}

    def test_cap_guard(self):
        assert run(["oracle-compare", "--n-max", "99"])[0] == 2

    def test_cap_env_override(self, monkeypatch):
        monkeypatch.setenv("RENCONTRES_ORACLE_CAP", "2")
        assert run(["oracle-compare", "--n-max", "3"])[0] == 2
        monkeypatch.setenv("RENCONTRES_ORACLE_CAP", "nope")
        assert run(["oracle-compare", "--n-max", "1"])[0] == 2


def test_parse_range():
    assert parse_range("3") == (3, 3)
    assert parse_range("-1..45") == (-1, 45)


def _subprocess(args, **env):
    full_env = {**os.environ, **env}
    return subprocess.run([sys.executable, "-m", "rencontres", *args], capture_output=True, text=True, env=full_env)


def test_module_entry_point():
    p = _subprocess(["verify", "easy", "--n", "0..3"])
    assert p.returncode == 0 and len(p.stdout.splitlines()) == 4


def test_numpy_backend_flag():
    code = "from rencontres import _kernels; print(_kernels.BACKEND)"
    p = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                       env={**os.environ, "RENCONTRES_DISABLE_NUMBA": "1"})
    assert p.stdout.strip() == "numpy"
    p = _subprocess(["oracle-compare", "--n-max", "5"], RENCONTRES_DISABLE_NUMBA="1")
    q = _subprocess(["oracle-compare", "--n-max", "5"])
    assert p.returncode == q.returncode == 0 and p.stdout == q.stdout
