"""
Tests for the qtcat command line
"""
import json

import pytest

from qtcatalan.config.settings import settings
from qtcatalan.verify.cli import int_list, json_list, main, pair


@pytest.fixture
def qtcat(tmp_path, monkeypatch, capsys):
    """Run main() against a scratch cache and log file; returns (code, stdout)"""
    monkeypatch.setattr(settings, 'LOG_FILE', str(tmp_path / "qtcat.log"))

    def run(*argv):
        code = main(['--cache-dir', str(tmp_path / "cache"), *argv])
        return code, capsys.readouterr().out

    return run


class TestArgumentTypes:
    """Parsers for list and pair arguments"""

    def test_int_list(self):
        assert int_list("1,2,3") == [1, 2, 3]
        assert int_list("4,") == [4]

    def test_json_list(self):
        assert json_list("[7,5,4]") == [7, 5, 4]
        assert json_list("7,5,4") == [7, 5, 4]
        assert json_list("[]") == []

    def test_pair(self):
        assert pair("15,0") == (15, 0)


class TestPolynomialVerbs:
    """pc, wc, dc, rc and ac output"""

    def test_pc_json(self, qtcat):
        """C^(3)_2 has one term per bidegree of total 3"""
        code, out = qtcat('--json', 'pc', '--m', '3', '--n', '2')
        assert code == 0
        records = json.loads(out)
        assert [(r['q'], r['t'], r['c']) for r in records] == [
            (0, 3, '1'), (1, 2, '1'), (2, 1, '1'), (3, 0, '1'),
        ]

    def test_csv(self, qtcat):
        code, out = qtcat('dc', '--m', '1', '--n', '2', '--csv')
        assert code == 0
        assert out == "d1,d2,coeff\n0,1,1\n1,0,1\n"

    def test_text(self, qtcat):
        code, out = qtcat('wc', '--m', '1', '--n', '1')
        assert code == 0
        assert out.strip() == "1"

    def test_ac_matches_pc(self, qtcat):
        _, ac_out = qtcat('--json', 'ac', '--m', '1', '--n', '3')
        _, pc_out = qtcat('--json', 'pc', '--m', '1', '--n', '3')
        assert json.loads(ac_out) == json.loads(pc_out)

    def test_rc_with_specializations(self, qtcat):
        code, out = qtcat('rc', '--m', '1', '--n', '3', '--check-specializations')
        assert code == 0
        assert "[PASS   ] specialization" in out

    def test_budget_file_skips(self, qtcat, tmp_path):
        budget_file = tmp_path / "budgets.env"
        budget_file.write_text("PC_MAX_N=2\n")
        code, out = qtcat('--budget-file', str(budget_file), 'pc', '--m', '1', '--n', '3')
        assert code == 0
        assert out.startswith("skipped")


class TestInspectionVerbs:
    """dims, stats and phi"""

    def test_dims(self, qtcat):
        code, out = qtcat('--json', 'dims', '--n', '3', '--d1', '2', '--d2', '1')
        assert code == 0
        assert json.loads(out)['dim'] == 1

    @pytest.mark.parametrize("budget, model", [("AC_MAX_N_M1=2", 'isotypic'),
                                               ("FULL_MODEL_MAX_N=2", 'monomial')])
    def test_dims_over_budget(self, qtcat, tmp_path, budget, model):
        """m = 1 is budgeted like any other slope"""
        budget_file = tmp_path / "budgets.env"
        budget_file.write_text(budget + "\n")
        code, out = qtcat('--json', '--budget-file', str(budget_file), 'dims',
                          '--n', '3', '--m', '1', '--d1', '2', '--d2', '1', '--model', model)
        assert code == 0
        result = json.loads(out)
        assert result['verdict'] == 'skipped'
        assert 'dim' not in result

    def test_stats_partition(self, qtcat):
        code, out = qtcat('--json', 'stats', 'partition', '[7,5,4]', '--m', '2', '--n', '5')
        assert code == 0
        stats = json.loads(out)
        assert stats['area'] == 16
        assert stats['coarea'] == 4
        assert stats['c_m'] == stats['h_plus'] == 13
        assert stats['bounce'] == [2, 0, 1, 1, 1, 0]
        assert stats['b_m'] == 9

    def test_stats_partition_without_triangle(self, qtcat):
        _, out = qtcat('--json', 'stats', 'partition', '3,1', '--m', '1')
        stats = json.loads(out)
        assert 'bounce' not in stats
        assert stats['length'] == 2

    def test_stats_word(self, qtcat):
        _, out = qtcat('--json', 'stats', 'word', '[0,2,0,1,1]', '--m', '2')
        stats = json.loads(out)
        assert stats['dinv'] == 13
        assert stats['area'] == 4

    def test_stats_path(self, qtcat):
        _, out = qtcat('stats', 'path', '[3,3,3,3,3,3]', '--m', '2')
        assert "steps: NNNEEEEEE" in out
        assert "b_m: 0" in out

    def test_invalid_word_exit_code(self, qtcat):
        code, _ = qtcat('stats', 'word', '[1,0]', '--m', '1')
        assert code == 2

    def test_phi_values(self, qtcat):
        code, out = qtcat('--json', 'phi', '--n', '3', '--d1', '1', '--d2', '1')
        assert code == 0
        (entry,) = json.loads(out)
        assert entry['points'] == [[0, 0], [0, 1], [1, 0]]
        assert entry['phi']

    def test_phi_injectivity(self, qtcat):
        code, out = qtcat('phi', '--n', '3', '--d1', '2', '--d2', '1', '--injectivity')
        assert code == 0
        assert "rank 1 of 1" in out


class TestCheckVerbs:
    """compare, limit and check"""

    def test_compare(self, qtcat):
        code, out = qtcat('--json', 'compare', '--m', '1', '--n', '2,3', '--which', 'pc,wc,dc')
        assert code == 0
        reports = json.loads(out)
        assert [r['parameters']['n'] for r in reports] == [2, 3]
        assert {r['verdict'] for r in reports} == {'pass'}

    def test_compare_unknown_definition(self, qtcat):
        code, _ = qtcat('compare', '--m', '1', '--n', '3', '--which', 'pc,xc')
        assert code == 2

    def test_limit(self, qtcat):
        code, out = qtcat('limit', '--m', '1', '--a-max', '6', '--n-list', '14,15')
        assert code == 0
        assert out.startswith("[PASS   ] limit")

    def test_lemma44(self, qtcat):
        code, out = qtcat('check', 'lemma44', '--a-max', '20')
        assert code == 0
        assert out.count("lemma44") == 1

    def test_embedding_needs_d1p(self, qtcat):
        code, _ = qtcat('check', 'embedding', '--n', '4', '--d1', '4', '--d2', '2')
        assert code == 2

    def test_coefficients_needs_both_degrees(self, qtcat):
        code, _ = qtcat('check', 'coefficients', '--n', '4', '--d1', '3')
        assert code == 2

    def test_unknown_region(self, qtcat):
        with pytest.raises(SystemExit):
            qtcat('check', 'coefficients', '--region', 'thm99')

    def test_transfactor_seeded(self, qtcat):
        _, first = qtcat('--json', 'check', 'transfactor', '--n', '3', '--count', '5', '--seed', '4')
        _, second = qtcat('--json', 'check', 'transfactor', '--n', '3', '--count', '5', '--seed', '4')
        (a,), (b,) = json.loads(first), json.loads(second)
        assert a['verdict'] == b['verdict'] == 'pass'
        assert a['seed'] == b['seed'] == 4

    def test_slope_free_check_runs_once_per_n(self, qtcat):
        code, out = qtcat('--json', 'check', 'transfactor', '--m', '1,2', '--n', '3',
                          '--count', '3', '--seed', '1')
        assert code == 0
        (report,) = json.loads(out)
        assert 'm' not in report['parameters']

    def test_sloped_check_runs_per_m(self, qtcat):
        code, out = qtcat('--json', 'check', 'specialization', '--m', '1,2', '--n', '2')
        assert code == 0
        assert [r['parameters']['m'] for r in json.loads(out)] == [1, 2]
