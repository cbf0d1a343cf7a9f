""" Test suite for the cli module.

"""
import csv
import re
import sys
from io import StringIO

import pytest

from denumerant import api
from denumerant.cli import main
from denumerant.core.EquationSpec import make_spec, term_count
from denumerant.core.errors import InvariantError
from denumerant.core.ResidueTable import load_table


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


@pytest.fixture
def table_file(tmp_path):
    def build(coefficients):
        path = tmp_path / f"t{coefficients.replace(',', '_')}.tbl"
        assert main(["build-table", "-a", coefficients, "-o", str(path)]) == 0
        return path
    return build


class CountTest:
    """ Test suite for the count and count-leq commands.

    """
    @pytest.mark.parametrize("argv, expected", [
        (["count", "-a", "2,3", "-b", "7"], "1"),
        (["count", "-a", "5,9,13", "-b", "0"], "1"),
        (["count", "-a", "2,3", "-b", "7", "--modulus", "12"], "1"),
        (["count", "-a", "1,1,2", "-b", "6", "--no-prune"], "16"),
        (["count-leq", "-a", "2,3", "-b", "7"], "8"),
        (["count-leq", "-a", "1", "-b", "5"], "6"),
        (["count-leq", "-a", "2,3", "-b", "0"], "1"),
    ])
    def test_examples(self, capsys, argv, expected):
        status, out, _ = run(capsys, *argv)
        assert status == 0
        assert out == expected + "\n"

    def test_canonical(self, capsys):
        status, out, _ = run(capsys, "count", "-a", "1,1,2", "-b", "000" + str(10**30))
        assert status == 0
        assert re.fullmatch(r"(0|[1-9][0-9]*)\n", out)

    def test_table_route(self, capsys, table_file):
        path = table_file("2,3")
        capsys.readouterr()
        status, out, _ = run(capsys, "count", "-t", str(path), "-b", "7")
        assert (status, out) == (0, "1\n")
        status, _, err = run(capsys, "count", "-a", "3,2", "-t", str(path), "-b", "7")
        assert status == 2
        assert "do not match" in err
        status, _, err = run(capsys, "count", "-t", str(path), "-b", "7", "--modulus", "12")
        assert status == 2
        assert "modulus" in err

    @pytest.mark.parametrize("argv", [
        ["count", "-a", "2,x", "-b", "7"],
        ["count", "-a", "2,0", "-b", "7"],
        ["count", "-a", "2,3", "-b", "-1"],
        ["count", "-a", "2,3", "-b", "7", "--modulus", "9"],
        ["count", "-b", "7"],
        ["count-leq", "-a", "2,3"],
    ])
    def test_input_error(self, capsys, argv):
        status, _, _ = run(capsys, *argv)
        assert status == 2

    def test_budget(self, capsys):
        status, out, err = run(capsys, "count", "-a", "7,11,13", "-b", "5", "--budget", "1000")
        assert status == 3
        assert not out
        assert "build-table" in err

    def test_budget_config(self, capsys, tmp_path):
        path = tmp_path / "config.toml"
        path.write_text("[limits]\nterm_budget = 5\n")
        status, _, _ = run(capsys, "count-leq", "-c", str(path), "-a", "2,3", "-b", "5")
        assert status == 3

    def test_budget_config_layered(self, capsys, tmp_path):
        """ Test that a later config file keeps the earlier file's limits.

        """
        base = tmp_path / "base.toml"
        base.write_text("[limits]\nterm_budget = 5\n")
        extra = tmp_path / "extra.toml"
        extra.write_text("[limits]\noracle_cap = 1000\n")
        status, out, _ = run(capsys, "count", "-c", str(base), "-c", str(extra), "-a", "7,11,13", "-b", "5")
        assert status == 3
        assert not out

    def test_invariant(self, capsys, monkeypatch):
        def broken(*args, **kwargs):
            raise InvariantError("profile sum mismatch")
        monkeypatch.setattr(api, "count", broken)
        status, _, err = run(capsys, "count", "-a", "2,3", "-b", "7")
        assert status == 4
        assert "profile sum mismatch" in err

    def test_verbose(self, capsys):
        status, out, err = run(capsys, "count", "-v", "-a", "2,3", "-b", "7")
        assert (status, out) == (0, "1\n")
        assert "DEBUG" in err


class TableTest:
    """ Test suite for the build-table and query commands.

    """
    @pytest.mark.parametrize("coefficients, rows", [
        ("2,3", None),
        ("1,1,2", ((1, 1, 0), (2, 0, 0))),
        ("7", ((1,),) + ((0,),) * 6),
    ])
    def test_build(self, capsys, tmp_path, coefficients, rows):
        path = tmp_path / "t.tbl"
        status, out, _ = run(capsys, "build-table", "-a", coefficients, "-o", str(path))
        assert status == 0
        table = load_table(path)
        spec = make_spec([int(a) for a in coefficients.split(",")])
        assert len(table.rows) == spec.modulus
        assert all(len(row) == spec.n for row in table.rows)
        if rows is not None:
            assert table.rows == rows
        assert f"modulus: {spec.modulus}" in out
        assert f"unknowns: {spec.n}" in out
        assert f"terms: {term_count(spec)}" in out
        assert "support: " in out

    def test_cap(self, capsys, tmp_path):
        status, _, _ = run(capsys, "build-table", "-a", "7,11", "-o", str(tmp_path / "t.tbl"), "--table-cap", "50")
        assert status == 3

    def test_io_error(self, capsys, tmp_path):
        status, _, _ = run(capsys, "build-table", "-a", "2,3", "-o", str(tmp_path / "missing" / "t.tbl"))
        assert status == 5

    @pytest.mark.parametrize("coefficients, b, expected", [
        ("2,3", "7", "1"),
        ("1,1,2", "6", "16"),
        ("4,6,9", "0", "1"),
    ])
    def test_query(self, capsys, table_file, coefficients, b, expected):
        path = table_file(coefficients)
        capsys.readouterr()
        status, out, _ = run(capsys, "query", "-t", str(path), "-b", b)
        assert (status, out) == (0, expected + "\n")

    def test_query_large(self, capsys, table_file):
        path = table_file("1,1,2")
        capsys.readouterr()
        status, out, _ = run(capsys, "query", "-t", str(path), "-b", str(10**30))
        half = 10**30 // 2
        assert status == 0
        assert int(out) == (half + 1) * (half + 2) // 2 + half * (half + 1) // 2

    @pytest.mark.parametrize("text", [
        "format_version: '1'\ncoefficients: ['2', '3']\nmodulus: '6'\nrows:\n" + "- ['1', '0']\n" * 5,
        "format_version: '1'\ncoefficients: ['2', '3']\nmodulus: '6'\nrows:\n" + "- ['-1', '0']\n" * 6,
        "format_version: '1'\ncoefficients: ['2', '3']\nmodulus: '4'\nrows:\n" + "- ['1', '0']\n" * 4,
        "format_version: [\n",
    ])
    def test_malformed(self, capsys, tmp_path, text):
        path = tmp_path / "bad.tbl"
        path.write_text(text)
        status, out, err = run(capsys, "query", "-t", str(path), "-b", "7")
        assert status == 2
        assert not out
        assert err.startswith("ERROR: ")

    def test_not_utf8(self, capsys, tmp_path):
        path = tmp_path / "bad.tbl"
        path.write_bytes(b"format_version: '1'\ncoefficients: ['\xff\xfe']\n")
        status, out, err = run(capsys, "query", "-t", str(path), "-b", "7")
        assert status == 2
        assert not out
        assert "UTF-8" in err

    def test_missing_file(self, capsys, tmp_path):
        status, _, _ = run(capsys, "query", "-t", str(tmp_path / "none.tbl"), "-b", "7")
        assert status == 5


class VerifyTest:
    """ Test suite for the verify command.

    """
    @pytest.mark.parametrize("coefficients, b_max", [
        ("2,3", "100"),
        ("1,1,2", "200"),
        ("1", "50"),
        ("1,1,1", "60"),
        ("3,5,7", "60"),
    ])
    def test_ok(self, capsys, coefficients, b_max):
        status, out, err = run(capsys, "verify", "-a", coefficients, "--b-max", b_max)
        assert status == 0
        match = re.fullmatch(r"OK ([0-9]+)\n", out)
        assert match
        assert int(match.group(1)) >= 2 * (int(b_max) + 1)
        assert "direct: " + str(int(b_max) + 1) in err

    def test_closed_form_routes(self, capsys):
        status, _, err = run(capsys, "verify", "-a", "2,1,1", "--b-max", "40")
        assert status == 0
        assert "closed-form: 41" in err
        status, _, err = run(capsys, "verify", "-a", "1,1", "--b-max", "40")
        assert "stars-and-bars: 41" in err

    def test_divergence(self, capsys, monkeypatch):
        module = sys.modules["denumerant.api.verify"]
        monkeypatch.setattr(module, "query_table", lambda table, b: 1)
        status, out, _ = run(capsys, "verify", "-a", "2,3", "--b-max", "10")
        assert status == 1
        assert out == "DIVERGENCE b=1 route=table expected=0 actual=1\n"

    def test_oracle_cap(self, capsys):
        status, _, _ = run(capsys, "verify", "-a", "2,3", "--b-max", "101", "--oracle-cap", "100")
        assert status == 3


class BenchTest:
    """ Test suite for the bench command.

    """
    def _rows(self, out):
        return list(csv.DictReader(StringIO(out)))

    def test_columns(self, capsys):
        status, out, _ = run(capsys, "bench", "-a", "2,3,5", "-b", "10,1000,100000")
        assert status == 0
        rows = self._rows(out)
        direct = [row for row in rows if row["route"] == "direct"]
        table = [row for row in rows if row["route"] == "table"]
        assert [row["b"] for row in direct] == ["10", "1000", "100000"]
        assert {row["terms"] for row in direct} == {str(term_count(make_spec([2, 3, 5])))}
        assert {row["terms"] for row in table} == {"3"}
        counts = {(row["route"], row["b"]): row["count"] for row in rows if row["b"]}
        for b in ("10", "1000", "100000"):
            assert counts[("direct", b)] == counts[("table", b)] == counts[("oracle", b)]

    def test_oracle_omitted(self, capsys):
        status, out, _ = run(capsys, "bench", "-a", "2,3", "-b", "5," + str(10**18), "--oracle-cap", "1000")
        assert status == 0
        oracle = [row["b"] for row in self._rows(out) if row["route"] == "oracle"]
        assert oracle == ["5"]

    def test_yaml_file(self, capsys, tmp_path):
        path = tmp_path / "bench.yaml"
        status, out, _ = run(capsys, "bench", "-a", "2,3", "-b", "7", "--format", "yaml", "-o", str(path))
        assert status == 0
        assert not out
        assert "route: direct" in path.read_text()


# Make the module executable.

if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__]))
