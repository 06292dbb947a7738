import json
from pathlib import Path

import numpy as np
import pytest

from symlab.equations import catalog_names
from symlab.errors import ConfigError, ValidationFailedError
from symlab.runner.experiment import execute, initial_state, load_experiment, run_experiment
from symlab.runner.selftest import run_selftest

HEAT = {
    'equation': 'heat',
    'grid': {'N': 32, 'L': 2 * np.pi},
    'integrator': {'dt': 0.01, 't_end': 0.2, 'snapshot_stride': 10},
    'ic': 'cos(x)',
}


def write_config(directory, name='heat', **changes):
    data = dict(HEAT, output_dir=str(directory / 'out' / name), **changes)
    path = directory / f'{name}.json'
    path.write_text(json.dumps(data), encoding='utf-8')
    return path


class TestCatalogCommands(object):

    def test_catalog_table(self, runner):
        result = runner.invoke(args=['catalog'])
        lines = result.output.splitlines()
        assert result.exit_code == 0
        assert lines[0] == 'name | dim | label | predicted'
        assert len(lines) == 1 + len(catalog_names())
        assert 'kdv | 1 | P1 | TravelingWave' in lines

    def test_classify_json(self, runner):
        result = runner.invoke(args=['classify', 'burgers', '--json'])
        assert result.exit_code == 0
        document = json.loads(result.output)
        assert document['label'] == 'P3_strong'
        assert document['predicted'] == 'ConstantInSpaceTime'

    def test_classify_text(self, runner):
        result = runner.invoke(args=['classify', 'kdv_burgers'])
        assert result.exit_code == 0
        assert result.output.startswith('kdv_burgers | 1 | P3_weak | SteadySubEquation')
        assert 'steady sub-equation terms' in result.output

    def test_classify_unknown_equation(self, runner):
        result = runner.invoke(args=['classify', 'navier_stokes'])
        assert result.exit_code == 65
        assert 'navier_stokes' in result.output

    def test_export_then_classify_file(self, runner, tmp_path):
        result = runner.invoke(args=['export-catalog', str(tmp_path)])
        assert result.exit_code == 0
        assert len(list(tmp_path.glob('*.json'))) == len(catalog_names())
        result = runner.invoke(args=['classify', str(tmp_path / 'kdv.json')])
        assert result.output.startswith('kdv | 1 | P1 | TravelingWave')

    def test_selftest(self, runner):
        result = runner.invoke(args=['selftest'])
        assert result.exit_code == 0, result.output
        assert 'FAIL' not in result.output


class TestConfigErrors(object):

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(args=['simulate', str(tmp_path / 'missing.json')])
        assert result.exit_code == 64

    def test_bad_json(self, runner, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"equation": "heat",', encoding='utf-8')
        assert runner.invoke(args=['simulate', str(path)]).exit_code == 64

    def test_grid_size_not_power_of_two(self, runner, tmp_path):
        path = write_config(tmp_path, grid={'N': 100, 'L': 10.0})
        result = runner.invoke(args=['simulate', str(path)])
        assert result.exit_code == 64
        assert 'grid.N' in result.output

    def test_fractional_grid_size_is_not_truncated(self, tmp_path):
        with pytest.raises(ConfigError) as info:
            load_experiment(write_config(tmp_path, grid={'N': 256.5, 'L': 10.0}))
        assert 'grid.N: N must be a whole number.' in str(info.value)

        config = load_experiment(write_config(tmp_path, grid={'N': 64.0, 'L': 10.0}))
        assert config.grid.N == 64

    def test_boolean_stride_is_rejected(self, tmp_path):
        integrator = dict(HEAT['integrator'], snapshot_stride=True)
        with pytest.raises(ConfigError) as info:
            load_experiment(write_config(tmp_path, integrator=integrator))
        assert 'integrator.snapshot_stride' in str(info.value)

    def test_classify_only_equation(self, runner, tmp_path):
        path = write_config(tmp_path, equation='ostrovsky')
        result = runner.invoke(args=['simulate', str(path)])
        assert result.exit_code == 65
        assert 'left symbol vanishes at ξ=0' in result.output

    def test_unknown_equation_in_config(self, tmp_path):
        with pytest.raises(ValidationFailedError):
            load_experiment(write_config(tmp_path, equation='navier_stokes'))

    def test_integrator_errors_are_collected(self, tmp_path):
        path = write_config(tmp_path, integrator={'dt': 2.0, 't_end': 1.0, 'scheme': 'RK45'})
        with pytest.raises(ConfigError) as info:
            load_experiment(path)
        assert 'integrator.dt' in str(info.value)
        assert 'integrator.scheme' in str(info.value)

    def test_initial_condition_checks(self, tmp_path):
        config = load_experiment(write_config(tmp_path, ic=['cos(x)', 'sin(x)']))
        with pytest.raises(ValidationFailedError):
            initial_state(config)
        config = load_experiment(write_config(tmp_path, ic='1/(x-x)'))
        with pytest.raises(ValidationFailedError):
            initial_state(config)
        config = load_experiment(write_config(tmp_path, ic='xi'))
        with pytest.raises(ValidationFailedError):
            initial_state(config)


class TestSimulate(object):

    def test_trajectory_files(self, runner, tmp_path):
        path = write_config(tmp_path)
        result = runner.invoke(args=['simulate', str(path)])
        assert result.exit_code == 0, result.output

        out = tmp_path / 'out' / 'heat'
        assert json.loads((out / 'classification.json').read_text())['label'] == 'P2'
        assert json.loads((out / 'validation.json').read_text())['passed']
        assert not (out / 'report.json').exists()

        rows = (out / 'trajectory_u0.csv').read_text().splitlines()
        assert rows[0].startswith('t,x_0,x_1,')
        assert rows[0].endswith(',x_31')
        assert len(rows) == 4
        data = np.loadtxt(out / 'trajectory_u0.csv', delimiter=',', skiprows=1)
        np.testing.assert_allclose(data[:, 0], [0.0, 0.1, 0.2])
        x = np.arange(32) * (2 * np.pi / 32)
        np.testing.assert_allclose(data[-1, 1:], np.exp(-0.2) * np.cos(x), atol=1e-12)

        assert (out / 'plot' / 'plot_snapshots.py').is_file()
        assert len(list((out / 'plot').glob('snapshot_*.csv'))) == 3
        assert not (out / 'coefficients').exists()

    def test_coefficient_dump(self, runner, tmp_path):
        path = write_config(tmp_path)
        assert runner.invoke(args=['simulate', str(path), '--coefficients']).exit_code == 0
        files = sorted((tmp_path / 'out' / 'heat' / 'coefficients').glob('*.csv'))
        assert len(files) == 3
        assert files[0].read_text().splitlines()[0] == 'k,re,im'

    def test_output_override(self, runner, tmp_path, monkeypatch):
        monkeypatch.setenv('SYMLAB_OUTPUT', str(tmp_path / 'override'))
        path = write_config(tmp_path)
        assert runner.invoke(args=['simulate', str(path)]).exit_code == 0
        assert (tmp_path / 'override' / 'heat' / 'trajectory_u0.csv').is_file()

    def test_execute_overrides_the_experiment_kind(self, tmp_path):
        path = write_config(tmp_path, experiment='verify')
        result = execute(path, experiment='simulate', coefficients=True)
        assert result.config.experiment == 'simulate'
        assert result.report is None
        assert len(result.trajectory) == 3
        assert (tmp_path / 'out' / 'heat' / 'coefficients').is_dir()

    def test_blow_up_is_inconclusive(self, tmp_path):
        path = write_config(
            tmp_path, equation={'name': 'square', 'terms': [{'factors': [{}, {}]}]},
            integrator={'dt': 0.01, 't_end': 2.0, 'snapshot_stride': 10}, ic='1')
        result = run_experiment(load_experiment(path))
        assert result.exit_code == 3
        assert result.blow_up
        report = json.loads((tmp_path / 'out' / 'heat' / 'report.json').read_text())
        assert report['verdict'] == 'Inconclusive'
        assert report['blow_up']['time'] > 0.9


class TestVerify(object):

    def test_symmetric_heat_run(self, runner, tmp_path):
        path = write_config(tmp_path, ic='gaussian(L/4, 1)')
        result = runner.invoke(args=['verify', str(path)])
        assert result.exit_code == 0, result.output
        assert 'ConsistentSymmetricPrediction' in result.output

        out = tmp_path / 'out' / 'heat'
        report = json.loads((out / 'report.json').read_text())
        assert report['verdict'] == 'ConsistentSymmetricPrediction'
        assert report['grid'] == {'N': 32, 'L': 2 * np.pi}
        np.testing.assert_allclose(report['axis'], np.pi / 2, atol=1e-8)
        assert (out / 'axis.csv').read_text().splitlines()[0] == 't,lambda,defect'

    def test_batch_reports_worst_outcome(self, runner, tmp_path):
        good = write_config(tmp_path, name='good', experiment='simulate')
        bad = write_config(tmp_path, name='bad', grid={'N': 100})
        result = runner.invoke(args=['batch', str(good), str(bad)])
        assert result.exit_code == 64
        assert 'good: 3 snapshots written' in result.output


class TestSelftest(object):

    def test_every_check_passes(self):
        results = run_selftest()
        assert len(results) >= 4
        assert all(r.passed for r in results), [r for r in results if not r.passed]

    def test_same_seed_same_details(self):
        assert [r.detail for r in run_selftest(7)] == [r.detail for r in run_selftest(7)]


EXAMPLES = sorted((Path(__file__).resolve().parent.parent / 'experiments').glob('*.json'))


class TestExampleExperiments(object):

    @pytest.mark.parametrize('path', EXAMPLES, ids=[p.stem for p in EXAMPLES])
    def test_example_loads(self, path):
        config = load_experiment(path)
        assert config.grid.N == 256
        assert initial_state(config).dimension == config.equation.dimension
