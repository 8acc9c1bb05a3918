import json

import pytest

from locyc.cli import EXIT_HYPOTHESIS, EXIT_INPUT, EXIT_OK, ExperimentConfig, main, run_config
from locyc.errors import InputError
from locyc.graph import complete_graph, format_edge_list, parse_edge_list


@pytest.fixture
def k4_file(tmp_path):
    path = tmp_path / "k4.txt"
    path.write_text(format_edge_list(complete_graph(4)))
    return str(path)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExtractCommand:
    def test_k4_expander(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "extract", "--mode", "expander", "--k", "1", "--graph", k4_file)
        assert code == EXIT_OK
        record = json.loads(out)
        assert record["payload"]["validated"] is True
        assert record["payload"]["certificate"]["length"] == 4

    def test_density_mode(self, capsys, k4_file):
        code, out, _ = run_cli(
            capsys, "extract", "--mode", "density", "--k", "2",
            "--c1", "1.4", "--c2", "1.2", "--graph", k4_file,
        )
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["certificate"]["length"] >= 3

    def test_expansion_violated_exits_1(self, capsys, tmp_path):
        path = tmp_path / "two_triangles.txt"
        path.write_text("6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n")
        code, out, _ = run_cli(capsys, "extract", "--mode", "expander", "--k", "4", "--graph", str(path))
        assert code == EXIT_HYPOTHESIS
        assert "hypothesis_failure" in json.loads(out)["payload"]

    def test_malformed_edge_list_exits_2(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("3 2\n0 1\n2 zz\n")
        code, _, err = run_cli(capsys, "extract", "--mode", "expander", "--k", "1", "--graph", str(path))
        assert code == EXIT_INPUT
        assert "line 3" in err

    def test_out_writes_record(self, capsys, k4_file, tmp_path):
        record_path = tmp_path / "records.jsonl"
        code, _, _ = run_cli(
            capsys, "extract", "--mode", "expander", "--k", "1",
            "--graph", k4_file, "--out", str(record_path),
        )
        assert code == EXIT_OK
        lines = record_path.read_text().splitlines()
        assert len(lines) == 1
        assert json.loads(lines[0])["config"]["subcommand"] == "extract"


class TestAuditCommand:
    def test_k4_dense_exits_1(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "audit", "--c2", "1.2", "--kmax", "4", "--graph", k4_file)
        assert code == EXIT_HYPOTHESIS
        payload = json.loads(out)["payload"]
        assert payload["passed"] is False
        assert payload["worst_excess"] == pytest.approx(1.2)

    def test_sparse_passes(self, capsys, tmp_path):
        path = tmp_path / "path.txt"
        path.write_text("4 3\n0 1\n1 2\n2 3\n")
        code, out, _ = run_cli(capsys, "audit", "--c2", "1.5", "--kmax", "4", "--graph", str(path))
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["passed"] is True


class TestGnpCommand:
    def test_writes_edge_list_with_digest(self, capsys, tmp_path):
        out_path = tmp_path / "g.txt"
        code, out, _ = run_cli(
            capsys, "gnp", "--n", "60", "--p", "0.1", "--seed", "5", "--out", str(out_path)
        )
        assert code == EXIT_OK
        record = json.loads(out)
        g = parse_edge_list(out_path.read_text())
        assert g.n == 60 and g.m == record["payload"]["m"]
        assert len(record["payload"]["sha256"]) == 64

    def test_env_seed_default(self, capsys, monkeypatch, tmp_path):
        monkeypatch.setenv("LOCYC_SEED", "31337")
        code, out, _ = run_cli(capsys, "gnp", "--n", "30", "--p", "0.2")
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["seed"] == 31337


class TestDfsCommand:
    def test_identity_order(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "dfs", "--graph", k4_file)
        payload = json.loads(out)["payload"]
        assert payload["roots"] == [0]
        assert payload["parents"] == [[1, 0], [2, 1], [3, 2]]

    def test_seeded_order(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "dfs", "--graph", k4_file, "--order", "seed:9")
        assert code == EXIT_OK
        assert len(json.loads(out)["payload"]["parents"]) == 3

    def test_order_from_file(self, capsys, k4_file, tmp_path):
        order = tmp_path / "order.txt"
        order.write_text("3 2 1 0\n")
        code, out, _ = run_cli(capsys, "dfs", "--graph", k4_file, "--order", str(order))
        assert code == EXIT_OK
        payload = json.loads(out)["payload"]
        assert payload["roots"] == [3]


class TestGameCommands:
    def test_mb_pipeline(self, capsys):
        code, out, _ = run_cli(
            capsys, "game", "mb", "--n", "300", "--eps", "0.5", "--seed", "4", "--breaker", "random"
        )
        assert code == EXIT_OK
        payload = json.loads(out)["payload"]
        assert payload["protagonist_edges"] == 375

    def test_criterion_mb(self, capsys):
        code, out, _ = run_cli(
            capsys, "game", "criterion", "--which", "mb",
            "--n", "1000", "--eps", "0.2", "--delta", str(25.0**-20),
        )
        assert code == EXIT_OK
        assert json.loads(out)["payload"]["value"] == 0.0

    def test_criterion_cw_family(self, capsys):
        code, out, _ = run_cli(
            capsys, "game", "criterion", "--which", "cw", "--b", "2", "--family", "3,3,3"
        )
        assert code == EXIT_OK
        payload = json.loads(out)["payload"]
        assert payload["value"] == pytest.approx(3 / 27)
        assert payload["verdict"] is True


class TestRamseyCommands:
    def test_lower(self, capsys, tmp_path):
        path = tmp_path / "c20.txt"
        path.write_text("20 20\n" + "\n".join(f"{i} {i + 1}" for i in range(19)) + "\n0 19\n")
        code, out, _ = run_cli(
            capsys, "ramsey", "lower", "--r", "4", "--n-target", "20",
            "--graph", str(path), "--seed", "3",
        )
        assert code == EXIT_OK
        payload = json.loads(out)["payload"]
        assert payload["report"]["pool_size"] == 0
        assert len(payload["report"]["line_counts"]) == 6

    def test_upper(self, capsys):
        code, out, _ = run_cli(
            capsys, "ramsey", "upper", "--n", "400", "--r", "2", "--C", "9.0",
            "--seed", "3", "--k-floor", "8",
        )
        assert code == EXIT_OK
        runs = json.loads(out)["payload"]["runs"]
        assert runs[0]["validated"] is True


class TestParsingAndConfig:
    def test_unknown_flag_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "extract", "--nonsense")
        assert code == EXIT_INPUT
        assert "usage" in err.lower()

    def test_no_subcommand_exits_2(self, capsys):
        code, _, _ = run_cli(capsys)
        assert code == EXIT_INPUT

    def test_unknown_suite_exits_2(self, capsys):
        code, _, _ = run_cli(capsys, "reproduce", "banana")
        assert code == EXIT_INPUT

    def test_config_round_trip(self):
        config = ExperimentConfig("gnp", {"n": "10", "p": "0.5", "seed": "1"})
        assert ExperimentConfig.from_text(config.to_text()).to_dict() == config.to_dict()

    def test_config_file_with_flag_override(self, capsys, tmp_path):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("subcommand=gnp\nn=30\np=0.1\nseed=2\n")
        code, out, _ = run_cli(capsys, "--config", str(cfg))
        assert code == EXIT_OK
        first = json.loads(out)["payload"]["m"]
        code, out, _ = run_cli(capsys, "--config", str(cfg), "gnp", "--n", "30", "--p", "0.1", "--seed", "3")
        assert code == EXIT_OK
        assert json.loads(out)["config"]["seed"] == "3"

    def test_run_config_rejects_unknown_subcommand(self):
        with pytest.raises(InputError):
            run_config(ExperimentConfig("fly-to-the-moon", {}))

    def test_record_embeds_full_config(self, capsys, k4_file):
        code, out, _ = run_cli(capsys, "extract", "--mode", "expander", "--k", "1", "--graph", k4_file)
        record = json.loads(out)
        echo = record["config"]
        assert echo["mode"] == "expander" and echo["k"] == "1"
        assert "generator" in record and "elapsed_s" in record
