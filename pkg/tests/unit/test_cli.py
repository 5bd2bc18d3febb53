"""Tests for the command-line interface."""

import os
import sys

import pytest
from click.testing import CliRunner

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from graph_mates.cli import cli


@pytest.fixture
def runner(monkeypatch, tmp_path):
    monkeypatch.chdir(tmp_path)
    monkeypatch.setenv('GRAPH_MATES_REPORTS_DIR', str(tmp_path / 'reports'))
    monkeypatch.delenv('GRAPH_MATES_HASHING', raising=False)
    return CliRunner()


class TestCensus:
    def test_generated_census(self, runner):
        result = runner.invoke(cli, ['census', '--gen', 'graphs:6', '--param', 'spec:A', '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        assert "n,parameter,semantics,total,with_mate,classes,uncertainty" in result.stdout
        assert "6,spec:A,joint,112,2,1,0.0178571428571429" in result.stdout

    def test_several_orders_and_parameters(self, runner):
        result = runner.invoke(cli, ['census', '--gen', 'graphs:4-5', '--param', 'spec:Q', '--param', 'snf:A',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        assert "5,spec:Q,joint,21,2,1,0.0952380952380952" in result.stdout
        assert "4,snf:A,joint,6,4,2,0.666666666666667" in result.stdout

    def test_order_range(self, runner):
        result = runner.invoke(cli, ['census', '--gen', 'graphs:4-6', '--param', 'spec:A', '--param', 'snf:L',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        rows = [line.split(',')[:2] for line in result.stdout.splitlines()[1:]]
        assert rows == [[n, p] for n in ('4', '5', '6') for p in ('spec:A', 'snf:L')]
        assert "6,snf:L,joint,112,57," in result.stdout

    def test_hashed_mode_matches(self, runner):
        args = ['census', '--gen', 'graphs:6', '--param', 'snf:L', '--workers', '1', '--quiet']
        exact = runner.invoke(cli, args)
        hashed = runner.invoke(cli, args + ['--hashing', 'hashed'])
        assert hashed.exit_code == 0, hashed.output
        assert "6,snf:L,joint,112,57," in hashed.stdout
        assert exact.stdout.splitlines()[-1] == hashed.stdout.splitlines()[-1]

    def test_input_file_and_output(self, runner, tmp_path):
        path = tmp_path / 'in.g6'
        path.write_text("Bw\nBg\n", encoding='ascii')
        result = runner.invoke(cli, ['census', '--input', str(path), '--param', 'snf:A', '--output', 'out.csv',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        assert "3,snf:A,joint,2,0,0,0" in result.stdout
        assert (tmp_path / 'reports' / 'out.csv').exists()

    def test_mates_file(self, runner, tmp_path):
        result = runner.invoke(cli, ['census', '--gen', 'graphs:6', '--param', 'spec:A', '--mates', 'mates.txt',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        lines = (tmp_path / 'reports' / 'mates.txt').read_text(encoding='ascii').splitlines()
        assert len(lines) == 1

    def test_unknown_invariant_is_usage_error(self, runner):
        result = runner.invoke(cli, ['census', '--gen', 'graphs:4', '--param', 'spec:B', '--quiet'])
        assert result.exit_code == 2

    def test_input_and_gen_together(self, runner, tmp_path):
        path = tmp_path / 'in.g6'
        path.write_text("Bw\n", encoding='ascii')
        result = runner.invoke(cli, ['census', '--input', str(path), '--gen', 'graphs:4', '--param', 'spec:A'])
        assert result.exit_code == 2

    def test_bad_generator_spec(self, runner):
        result = runner.invoke(cli, ['census', '--gen', 'cubic:4', '--param', 'spec:A'])
        assert result.exit_code == 2

    def test_mixed_orders_fail(self, runner, tmp_path):
        path = tmp_path / 'mixed.g6'
        path.write_text("Bw\nC~\n", encoding='ascii')
        result = runner.invoke(cli, ['census', '--input', str(path), '--param', 'spec:A', '--workers', '1', '--quiet'])
        assert result.exit_code == 1

    def test_set_intersection_with_mates_rejected(self, runner):
        result = runner.invoke(cli, ['pair-census', '--gen', 'graphs:5', '--param', 'spec:Q', '--param', 'snf:A',
                                     '--semantics', 'set-intersection', '--mates', 'm.txt', '--quiet'])
        assert result.exit_code == 2


class TestPairCensus:
    def test_joint_pair_with_mates(self, runner, tmp_path):
        result = runner.invoke(cli, ['pair-census', '--gen', 'graphs:6', '--param', 'spec:Q', '--param', 'snf:A',
                                     '--mates', 'pair.txt', '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        assert "6,spec:Q+snf:A,joint,112,2,1," in result.stdout
        lines = (tmp_path / 'reports' / 'pair.txt').read_text(encoding='ascii').splitlines()
        assert len(lines) == 1

    def test_needs_two_invariants(self, runner):
        result = runner.invoke(cli, ['pair-census', '--gen', 'graphs:5', '--param', 'spec:Q'])
        assert result.exit_code == 2


class TestTable:
    def test_grid(self, runner):
        result = runner.invoke(cli, ['table', '--gen', 'graphs:6', '--rows', 'snf:A,spec:Q', '--cols', 'snf:L',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        lines = result.stdout.splitlines()
        assert lines[0] == ",snf:L"
        assert "snf:A,29" in lines

    def test_top_pairs(self, runner):
        result = runner.invoke(cli, ['table', '--gen', 'graphs:5', '--rows', 'spec:A,spec:Q,snf:A', '--top', '2',
                                     '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        lines = result.stdout.splitlines()
        assert lines[0].startswith("n,parameter")
        assert len(lines) == 3


class TestTrees:
    def test_small_orders(self, runner):
        result = runner.invoke(cli, ['trees', '--orders', '4-6', '--param', 'snf:D', '--workers', '1', '--quiet'])
        assert result.exit_code == 0, result.output
        assert "6,snf:D,joint,6,6,1,1" in result.stdout


class TestOtherCommands:
    def test_gen(self, runner):
        result = runner.invoke(cli, ['gen', 'graphs:4'])
        assert result.exit_code == 0, result.output
        assert len(result.stdout.splitlines()) == 6

    def test_gen_to_file(self, runner, tmp_path):
        result = runner.invoke(cli, ['gen', 'trees:7', '--output', 'trees.g6'])
        assert result.exit_code == 0, result.output
        assert len((tmp_path / 'trees.g6').read_text(encoding='ascii').splitlines()) == 11

    def test_matrix(self, runner):
        result = runner.invoke(cli, ['matrix', '--kind', 'DL', '--graph6', 'Bg'])
        assert result.exit_code == 0, result.output
        assert "3 -1 -2" in result.stdout
        assert "snf: 1 5" in result.stdout
        assert "rank: 2" in result.stdout
        assert "cokernel: Z_5 + Z" in result.stdout

    def test_matrix_group_label(self, runner):
        result = runner.invoke(cli, ['matrix', '--kind', 'L', '--graph6', 'Bw'])
        assert result.exit_code == 0, result.output
        assert "charpoly: 1 -6 9 0" in result.stdout
        assert "group: critical" in result.stdout

    def test_matrix_bad_graph6(self, runner):
        result = runner.invoke(cli, ['matrix', '--kind', 'A', '--graph6', 'Bx'])
        assert result.exit_code == 1

    def test_matrix_unknown_kind(self, runner):
        result = runner.invoke(cli, ['matrix', '--kind', 'B', '--graph6', 'Bw'])
        assert result.exit_code == 2

    def test_verify(self, runner):
        result = runner.invoke(cli, ['verify', '--max-order', '4', '--samples', '10'])
        assert result.exit_code == 0, result.output

    def test_setup(self, runner, tmp_path):
        (tmp_path / 'config').mkdir()
        (tmp_path / 'config' / 'config_template.env').write_text("GRAPH_MATES_WORKERS=2\n", encoding='ascii')
        result = runner.invoke(cli, ['setup'])
        assert result.exit_code == 0, result.output
        assert (tmp_path / 'config' / 'config.env').read_text(encoding='ascii') == "GRAPH_MATES_WORKERS=2\n"

    def test_setup_without_template(self, runner):
        result = runner.invoke(cli, ['setup'])
        assert result.exit_code == 1
