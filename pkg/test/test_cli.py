#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""命令行：参数解析、各子命令与退出码"""

import json
import math

from pytest import approx, mark, raises

from cli.commands import main, parse_config, parse_extras
from cli.config import RunConfig
from utils.exceptions import ConfigError


def _run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


class TestParsing:

    def test_extras(self):
        assert parse_extras(['--alpha', '1', '--q=0.5']) == {'alpha': 1, 'q': 0.5}

    @mark.parametrize('tokens', [['alpha', '1'], ['--alpha'], ['--a', '1', '--a', '2']])
    def test_bad_extras(self, tokens):
        with raises(ConfigError):
            parse_extras(tokens)

    def test_eval_config(self):
        config = parse_config(['eval', '--family', 'laguerre', '--alpha', '1', '--n', '1', '--x', '2'])
        assert config.command == 'eval'
        assert config.param('extra') == {'alpha': 1}
        assert config.format == 'json'

    def test_extras_rejected_for_verify(self):
        with raises(ConfigError):
            parse_config(['verify', '--id', 'ser1', '--alpha', '1'])

    def test_run_config_forbids_unknown_keys(self):
        with raises(ConfigError):
            RunConfig.build(command='suite', colour='red')

    @mark.parametrize('values', [
        {'command': 'suite', 'tol': 0.0},
        {'command': 'suite', 'tol': -1e-8},
        {'command': 'suite', 'workers': 0},
        {'command': 'suite', 'format': 'xml'},
        {'command': 'nosuch'},
    ])
    def test_run_config_validation(self, values):
        with raises(ConfigError):
            RunConfig.build(**values)


class TestEval:

    def test_laguerre(self, capsys):
        code, out = _run(capsys, 'eval', '--family', 'laguerre', '--alpha', '1', '--n', '1', '--x', '2')
        assert code == 0
        rows = json.loads(out)
        assert abs(rows[0]['value_re']) < 1e-14

    def test_meixner_degree_zero(self, capsys):
        code, out = _run(capsys, 'eval', '--family', 'meixner', '--beta', '2', '--c', '0.5',
                         '--n', '0', '--x', '3')
        assert code == 0
        assert json.loads(out)[0]['value_re'] == approx(1.0)

    def test_both_methods(self, capsys):
        code, out = _run(capsys, 'eval', '--family', 'jacobi', '--a', '0.5', '--b', '1.5',
                         '--n', '2,4', '--x', '0.3', '--method', 'both')
        assert code == 0
        rows = json.loads(out)
        assert len(rows) == 4
        assert rows[0]['value_re'] == approx(rows[1]['value_re'], rel=1e-12)

    def test_q_family_with_theta(self, capsys):
        code, out = _run(capsys, 'eval', '--family', 'asc', '--a', '0.3', '--b', '-0.2', '--q', '0.5',
                         '--n', '0,1', '--theta', '0.7')
        assert code == 0
        rows = json.loads(out)
        assert rows[0]['value_re'] == approx(1.0)
        # s_1(x) = 2x - (a+b)
        assert rows[1]['value_re'] == approx(2 * math.cos(0.7) - 0.1)

    @mark.parametrize('argv', [
        ['eval', '--family', 'nosuch', '--n', '1', '--x', '1'],
        ['eval', '--family', 'laguerre', '--n', '1', '--x', '1'],
        ['eval', '--family', 'laguerre', '--alpha', '1', '--beta', '2', '--n', '1', '--x', '1'],
        ['eval', '--family', 'laguerre', '--alpha', '-3', '--n', '1', '--x', '1'],
        ['eval', '--family', 'laguerre', '--alpha', '1', '--n', '1', '--theta', '1'],
    ])
    def test_usage_errors(self, capsys, argv):
        code, _ = _run(capsys, *argv)
        assert code == 2


class TestSpectrum:

    def test_x2(self, capsys):
        code, out = _run(capsys, 'spectrum', '--op', 'x2', '--k', '1', '--dim', '50')
        assert code == 0
        values = [row['eigenvalue'] for row in json.loads(out)]
        assert len(values) == 50
        assert values == sorted(values)

    def test_single_dimension(self, capsys):
        code, out = _run(capsys, 'spectrum', '--op', 'x2', '--k', '1', '--dim', '1')
        assert code == 0
        assert json.loads(out)[0]['eigenvalue'] == approx(2.0)

    def test_xc_matches_discrete_spectrum(self, capsys):
        code, out = _run(capsys, 'spectrum', '--op', 'xc', '--k', '1', '--c', '0.5', '--dim', '400',
                         '--tol', '1e-5')
        assert code == 0
        predicted = [row for row in json.loads(out) if row['m'] is not None]
        assert len(predicted) == 5
        assert max(row['deviation'] for row in predicted) <= 1e-5

    def test_ysa(self, capsys):
        code, out = _run(capsys, 'spectrum', '--op', 'ysa', '--k', '0.75', '--q', '0.5', '--dim', '10')
        assert code == 0
        assert len(json.loads(out)) == 10

    @mark.parametrize('argv', [
        ['spectrum', '--op', 'x2', '--k', '1', '--dim', '0'],
        ['spectrum', '--op', 'x2', '--k', '1', '--dim', '6000'],
        ['spectrum', '--op', 'xc', '--k', '1', '--dim', '10'],
        ['spectrum', '--op', 'bogus', '--k', '1', '--dim', '10'],
    ])
    def test_errors(self, capsys, argv):
        code, _ = _run(capsys, *argv)
        assert code == 2


class TestVerify:

    def test_unknown_identity(self, capsys):
        code, _ = _run(capsys, 'verify', '--id', 'nosuch')
        assert code == 2

    def test_list(self, capsys):
        code, out = _run(capsys, 'verify', '--list')
        assert code == 0
        assert len(json.loads(out)) == 21

    def test_default_grid(self, capsys):
        code, out = _run(capsys, 'verify', '--id', 'ser2')
        assert code == 0
        payload = json.loads(out)
        assert payload['summary'][0]['failed'] == 0
        assert all(report['pass'] for report in payload['reports'])

    def test_sample_grid_csv(self, capsys):
        code, out = _run(capsys, 'verify', '--id', 'conv-x2', '--grid', 'sample:5', '--seed', '3',
                         '--format', 'csv')
        assert code == 0
        assert len(out.strip().splitlines()) == 6

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / 'report.json'
        code, out = _run(capsys, 'verify', '--id', 'jg5d', '--output', str(target))
        assert code == 0
        assert out == ''
        assert json.loads(target.read_text(encoding='utf-8'))['summary'][0]['identity'] == 'JG5D'

    def test_domain_error_in_grid(self, capsys, tmp_path):
        grid = tmp_path / 'grid.txt'
        grid.write_text('k=0.75 x=1.2 z=0.3\nk=0.75 x=1.2 z=2.0\n', encoding='utf-8')
        code, _ = _run(capsys, 'verify', '--id', 'gf-lag', '--grid', str(grid))
        assert code == 2

    def test_residual_failure(self, capsys, tmp_path):
        grid = tmp_path / 'grid.txt'
        grid.write_text('k=0.75 c=0.3 m=0 dim=5\n', encoding='utf-8')
        code, _ = _run(capsys, 'verify', '--id', 'expj2', '--grid', str(grid))
        assert code == 1


class TestQuad:

    def test_hermite_kernel(self, capsys):
        code, out = _run(capsys, 'quad', '--id', 'jg5d', '--lam', '1', '--m', '3', '--n', '5')
        assert code == 0
        assert json.loads(out)['reports'][0]['pass'] is True

    def test_laguerre_kernel(self, capsys):
        code, out = _run(capsys, 'quad', '--id', 'jg5c', '--a', '0.5', '--rho', '1.5', '--m', '0', '--n', '0')
        assert code == 0
        report = json.loads(out)['reports'][0]
        expected = math.gamma(1.5) * (2 / 2.5) ** 1.5
        assert report['rhs'][0] == approx(expected, rel=1e-12)

    def test_defaults(self, capsys):
        code, _ = _run(capsys, 'quad', '--id', 'awj')
        assert code == 0

    def test_not_an_integral(self, capsys):
        code, _ = _run(capsys, 'quad', '--id', 'ser1')
        assert code == 2

    def test_unknown_parameter(self, capsys):
        code, _ = _run(capsys, 'quad', '--id', 'jg5d', '--mu', '1')
        assert code == 2
