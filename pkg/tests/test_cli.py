import json

import pytest

from symsig.cli import parse_group_spec, run
from symsig.groups import (
    BadSpec,
    BinaryDihedral,
    BinaryIcosahedral,
    BinaryTetrahedral,
    Cyclic,
    CyclicOneNA,
)


class TestGroupSpecGrammar:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("A:1", Cyclic(2)),
            ("A:5", Cyclic(6)),
            ("D:3", BinaryDihedral(3)),
            ("E6", BinaryTetrahedral()),
            ("E8", BinaryIcosahedral()),
            ("cyclic:7:3", CyclicOneNA(7, 3)),
        ],
    )
    def test_valid(self, text, expected):
        assert parse_group_spec(text) == expected

    @pytest.mark.parametrize("text", ["E9", "A", "cyclic:4", "D:x", "cyclic:4:2"])
    def test_invalid(self, text):
        with pytest.raises(BadSpec):
            parse_group_spec(text)


def run_to_file(tmp_path, argv):
    out = tmp_path / "out.txt"
    code = run(argv + ["--out", str(out)])
    return code, out.read_text()


class TestSignatureCommand:
    def test_e6_summary_target(self, tmp_path):
        code, text = run_to_file(
            tmp_path,
            ["signature", "--group", "E6", "--module", "0", "--qmax", "300", "--format", "json"],
        )
        assert code == 0
        payload = json.loads(text)
        assert payload["summary"][0]["target"] == "1/24"
        assert payload["meta"]["order"] == 24

    def test_csv_columns(self, tmp_path):
        code, text = run_to_file(
            tmp_path,
            ["signature", "--group", "A:1", "--module", "0", "--qmax", "10", "--format", "csv"],
        )
        assert code == 0
        lines = text.strip().splitlines()
        assert lines[0] == "q,beta,alpha_V_0,ratio_V_0"
        assert lines[1] == "0,1,1,1"
        assert len(lines) == 12

    def test_module_all(self, tmp_path):
        code, text = run_to_file(
            tmp_path,
            ["signature", "--group", "D:2", "--module", "all", "--qmax", "50"],
        )
        payload = json.loads(text)
        assert len(payload["summary"]) == 5

    def test_differential_variant(self, tmp_path):
        code, text = run_to_file(
            tmp_path,
            ["signature", "--group", "D:2", "--variant", "differential", "--qmax", "40"],
        )
        assert json.loads(text)["meta"]["variant"] == "differential"


class TestSympowCommand:
    def test_verify_all_agrees(self, tmp_path):
        code, text = run_to_file(
            tmp_path, ["sympow", "--group", "E7", "--q", "8", "--verify-all"]
        )
        assert code == 0
        rows = json.loads(text)["rows"]
        assert len({tuple(r["multiplicities"]) for r in rows}) == 1

    def test_single_method(self, tmp_path):
        code, text = run_to_file(
            tmp_path, ["sympow", "--group", "cyclic:5:2", "--q", "4", "--method", "eigen"]
        )
        rows = json.loads(text)["rows"]
        assert rows[0]["multiplicities"] == [1, 1, 1, 1, 1]


class TestChartableCommand:
    def test_text_layout(self, tmp_path):
        code, text = run_to_file(tmp_path, ["chartable", "--group", "D:2"])
        lines = text.splitlines()
        assert lines[0].startswith("group D:2")
        assert lines[1].split()[0] == "size"
        assert lines[2].split()[0] == "order"
        assert lines[3].split()[0] == "V_0"

    def test_json(self, tmp_path):
        code, text = run_to_file(
            tmp_path, ["chartable", "--group", "E8", "--format", "json"]
        )
        payload = json.loads(text)
        assert payload["meta"]["order"] == 120
        assert len(payload["rows"]) == 9
        assert sorted(payload["class_sizes"]) == [1, 1, 12, 12, 12, 12, 20, 20, 30]

    def test_csv(self, tmp_path):
        code, text = run_to_file(
            tmp_path, ["chartable", "--group", "A:2", "--format", "csv"]
        )
        lines = text.strip().splitlines()
        assert lines[0] == "label,c0,c1,c2"
        assert lines[1] == "size,1,1,1"


class TestLatticeCommand:
    def test_csv(self, tmp_path):
        code, text = run_to_file(
            tmp_path, ["lattice", "--n", "5", "--a", "2", "--qmax", "10"]
        )
        lines = text.strip().splitlines()
        assert lines[0] == "q,alpha,beta,cum_ratio"
        assert lines[1] == "0,1,1,1"
        assert len(lines) == 12

    def test_json_has_index(self, tmp_path):
        code, text = run_to_file(
            tmp_path,
            ["lattice", "--n", "7", "--a", "3", "--qmax", "5", "--format", "json"],
        )
        assert json.loads(text)["meta"]["index"] == 7


class TestBundlesCommand:
    def test_tq_q2(self, tmp_path):
        code, text = run_to_file(tmp_path, ["bundles", "tq", "--q", "2"])
        payload = json.loads(text)
        assert len(payload["rows"]) == 4
        assert all(r["rank"] == 1 for r in payload["rows"])
        assert payload["meta"]["rank"] == 4

    def test_sym_f2(self, tmp_path):
        code, text = run_to_file(tmp_path, ["bundles", "sym", "--q", "7", "--input", "f2"])
        payload = json.loads(text)
        assert payload["rows"][0]["rank"] == 8

    def test_sym_omega(self, tmp_path):
        code, text = run_to_file(tmp_path, ["bundles", "sym", "--q", "3", "--input", "omega"])
        payload = json.loads(text)
        assert payload["rows"][0]["rank"] == 4

    def test_frk(self, tmp_path):
        code, text = run_to_file(tmp_path, ["bundles", "frk", "--q", "3"])
        payload = json.loads(text)
        assert code == 0 and payload["upper_bound"] == 0

    def test_frk_singular_curve_exits_1(self, tmp_path):
        out = tmp_path / "x.json"
        code = run(["bundles", "frk", "--q", "2", "--curve", "0,0", "--out", str(out)])
        assert code == 1


class TestVerifyCommand:
    def test_single(self, tmp_path):
        code, text = run_to_file(tmp_path, ["verify", "--singularity", "E6"])
        assert code == 0
        payload = json.loads(text)
        assert payload["rows"][0]["ok"]

    def test_all(self, tmp_path):
        code, text = run_to_file(tmp_path, ["verify", "--all"])
        assert code == 0
        rows = json.loads(text)["rows"]
        assert len(rows) == 15
        assert all(r["ok"] for r in rows)

    def test_missing_selector(self, tmp_path):
        assert run(["verify"]) == 2


class TestDeterminismAndConfig:
    def test_identical_argv_identical_output(self, tmp_path):
        argv = ["signature", "--group", "D:3", "--module", "all", "--qmax", "60"]
        _, first = run_to_file(tmp_path, argv)
        _, second = run_to_file(tmp_path, argv)
        assert first == second

    def test_bad_group_is_usage_error(self, tmp_path):
        assert run(["chartable", "--group", "E9"]) == 2

    def test_config_defaults(self, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("qmax=15\nformat=csv\n")
        out = tmp_path / "o.csv"
        code = run(
            [
                "--config",
                str(cfg),
                "signature",
                "--group",
                "A:1",
                "--module",
                "0",
                "--out",
                str(out),
            ]
        )
        assert code == 0
        lines = out.read_text().strip().splitlines()
        assert len(lines) == 17  # header + q = 0..15


class TestGoldenFiles:
    @pytest.mark.parametrize(
        "argv,golden",
        [
            (["chartable", "--group", "E6", "--format", "csv"], "chartable_E6.csv"),
            (["bundles", "tq", "--q", "3"], "bundles_tq3.json"),
        ],
    )
    def test_byte_identical(self, tmp_path, argv, golden):
        import pathlib

        out = tmp_path / "out"
        assert run(argv + ["--out", str(out)]) == 0
        expected = pathlib.Path(__file__).parent / "golden" / golden
        assert out.read_text() == expected.read_text()
