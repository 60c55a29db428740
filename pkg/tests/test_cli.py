import json

import pytest

from didom.cli import main, run_batch


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def json_lines(out):
    return [json.loads(line) for line in out.strip().splitlines()]


@pytest.fixture
def p4_file(tmp_path):
    path = tmp_path / "p4.txt"
    path.write_text("4 3\n0 1\n1 2\n2 3\n")
    return path


@pytest.fixture
def lonely_file(tmp_path):
    path = tmp_path / "lonely.txt"
    path.write_text("3 1\n0 1\n")
    return path


class TestSolveCommand:
    def test_value_and_witness(self, capsys, p4_file):
        code, out = run_cli(capsys, "solve", str(p4_file), "gamma_ti")
        assert code == 0
        records = json_lines(out)
        assert records[0]["value"] == {"value": 4, "witness": [1, 1, 1, 1]}
        assert records[-1]["check"] == "summary"

    def test_set_parameter(self, capsys, p4_file):
        code, out = run_cli(capsys, "solve", str(p4_file), "gamma")
        assert code == 0
        assert json_lines(out)[0]["value"]["value"] == 2

    def test_unknown_parameter_is_usage_error(self, p4_file):
        with pytest.raises(SystemExit) as exc:
            main(["solve", str(p4_file), "gamma_xyz"])
        assert exc.value.code == 2

    def test_infeasible_fails(self, capsys, lonely_file):
        code, out = run_cli(capsys, "solve", str(lonely_file), "gamma_t")
        assert code == 1
        assert json_lines(out)[0]["value"]["error"] == "infeasible-structure"

    def test_parse_error_exit(self, capsys, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_text("2 1\n0 0\n")
        assert main(["solve", str(bad), "gamma"]) == 2

    def test_oversized_input_exit(self, capsys, tmp_path):
        big = tmp_path / "big.txt"
        big.write_text("40 0\n")
        assert main(["solve", str(big), "gamma"]) == 3


class TestGridCommands:
    def test_grid_value(self, capsys):
        code, out = run_cli(capsys, "grid", "3", "7")
        assert code == 0
        assert json_lines(out)[0]["value"]["value"] == 16

    def test_grid_witness_matrix(self, capsys):
        code, out = run_cli(capsys, "grid", "2", "4", "--witness")
        assert code == 0
        matrix = json_lines(out)[0]["value"]["witness"]
        assert len(matrix) == 2 and len(matrix[0]) == 4
        assert sum(sum(row) for row in matrix) == 6

    def test_grid_one_by_one_fails(self, capsys):
        code, out = run_cli(capsys, "grid", "1", "1")
        assert code == 1

    def test_grid_cap_exit(self, capsys):
        assert main(["grid", "9", "2"]) == 3

    def test_sweep_two_rows_matches(self, capsys):
        code, out = run_cli(capsys, "grid-sweep", "2", "2", "24")
        assert code == 0
        records = [r for r in json_lines(out) if r["check"] == "grid-sweep"]
        assert len(records) == 23
        assert all(r["value"]["match"] for r in records)

    def test_sweep_three_rows_reports_divergence(self, capsys):
        # The three-row closed form is wrong at n=8: the sweep is
        # exactly the tool that must surface that, via match=false.
        code, out = run_cli(capsys, "grid-sweep", "3", "8", "8")
        assert code == 1
        record = json_lines(out)[0]
        assert record["value"] == {"dp": 18, "closed_form": 19, "match": False}
        assert "counterexample" in record

    def test_failed_record_counterexample_refails(self, capsys):
        # A failed record's counterexample re-parses and re-fails: the
        # embedded labeling validates on the embedded digraph at a weight
        # below the closed form it disproves.
        from didom import Variant, parse_digraph, three_row_closed_form, validate

        _, out = run_cli(capsys, "grid-sweep", "3", "8", "8")
        record = json_lines(out)[0]
        ce = record["counterexample"]
        d = parse_digraph(ce["digraph"])
        labels = tuple(ce["labeling"])
        assert validate(d, labels, Variant.TOTAL_ITALIAN)
        assert sum(labels) < three_row_closed_form(8)

    def test_sweep_csv(self, capsys):
        code, out = run_cli(capsys, "grid-sweep", "2", "2", "4", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "k,n,dp,closed_form,match"
        assert lines[1] == "2,2,3,3,true"
        assert len(lines) == 4

    def test_sweep_csv_without_formula_column(self, capsys):
        code, out = run_cli(capsys, "grid-sweep", "4", "2", "3", "--csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1] == "4,2,6,,"
        assert lines[2] == "4,3,10,,"

    def test_formula(self, capsys):
        code, out = run_cli(capsys, "formula", "p2", "7")
        assert code == 0
        assert json_lines(out)[0]["value"] == 11

    def test_witness_command(self, capsys):
        code, out = run_cli(capsys, "witness", "p3", "5")
        assert code == 0
        value = json_lines(out)[0]["value"]
        assert value["weight"] == value["target"] == 12
        assert value["matrix"][1][1] == 0


class TestVerifyTrees:
    def test_small_run(self, capsys):
        code, out = run_cli(capsys, "verify-trees", "4")
        assert code == 0
        records = json_lines(out)
        checks = {r["check"] for r in records[:-1]}
        assert checks == {
            "total-equals-total-italian-only-at-order-2",
            "total-italian-triples-domination-only-on-out-stars",
        }


class TestCheckProps:
    def test_file_mode(self, capsys, p4_file):
        code, out = run_cli(capsys, "check-props", str(p4_file))
        assert code == 0
        assert json_lines(out)[0]["check"] == "inequality-chain"

    def test_file_with_isolated_vertices_fails(self, capsys, lonely_file):
        code, out = run_cli(capsys, "check-props", str(lonely_file))
        assert code == 1

    def test_random_mode_skips_isolated(self, capsys):
        code, out = run_cli(capsys, "check-props", "--random", "6", "4", "0.2", "11")
        assert code == 0
        records = json_lines(out)
        skipped = [r for r in records if r.get("skipped")]
        assert skipped, "p=0.2 at n=4 should produce at least one isolated digraph"
        assert all(r["pass"] is None for r in skipped)
        assert records[-1]["value"]["skipped"] == len(skipped)

    def test_needs_exactly_one_source(self, capsys, p4_file):
        with pytest.raises(SystemExit) as exc:
            main(["check-props"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            main(["check-props", str(p4_file), "--random", "1", "4", "0.3", "1"])
        assert exc.value.code == 2


class TestCheckLemmas:
    def test_two_rows(self, capsys):
        code, out = run_cli(capsys, "check-lemmas", "2", "4")
        assert code == 0
        names = [r["check"] for r in json_lines(out)[:-1]]
        assert "adjacent-column-sums-ge-3" in names


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        _, first = run_cli(capsys, "check-props", "--random", "4", "5", "0.35", "99")
        _, second = run_cli(capsys, "check-props", "--random", "4", "5", "0.35", "99")
        assert first == second

    def test_run_batch_matches_cli_records(self, capsys, p4_file):
        report = run_batch(["solve", str(p4_file), "gamma_ti"])
        code, out = run_cli(capsys, "solve", str(p4_file), "gamma_ti")
        assert [r.to_dict() for r in report.records] == json_lines(out)[:-1]

    def test_counterexample_round_trip(self):
        # Counterexamples embed the digraph in the interchange format, so
        # they re-parse to the digraph that produced them.
        from didom import format_digraph, parse_digraph, random_digraph

        d = random_digraph(5, 0.4, 3)
        assert parse_digraph(format_digraph(d)) == d


class TestUsage:
    def test_unknown_subcommand(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_missing_file(self, capsys, tmp_path):
        assert main(["solve", str(tmp_path / "nope.txt"), "gamma"]) == 2

    def test_empty_digraph_is_usage_error(self, capsys, tmp_path):
        path = tmp_path / "empty.txt"
        path.write_text("0 0\n")
        assert main(["solve", str(path), "gamma"]) == 2

    def test_verify_trees_minimal_bound(self, capsys):
        # at n_max=2 only the total-equality characterization applies
        code, out = run_cli(capsys, "verify-trees", "2")
        assert code == 0
        checks = {r["check"] for r in json_lines(out)[:-1]}
        assert checks == {"total-equals-total-italian-only-at-order-2"}
