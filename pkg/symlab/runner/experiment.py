"""
Experiment configs and their execution.

An experiment file is a JSON object:

    {
        "equation": "kdv",                       # catalog name or inline equation object
        "experiment": "verify",                  # classify | simulate | verify
        "grid": {"N": 256, "L": 40},
        "integrator": {"dt": 1e-3, "t_end": 5, "snapshot_stride": 100,
                       "dealias_fraction": 0.6667, "scheme": "ETDRK4"},
        "ic": "sech2(L/2, 0.5)/2",               # one expression, or a list per component
        "tolerances": {"sym_tol": 1e-6, "pred_tol": 1e-4},
        "output_dir": "out/kdv",
        "coefficients": false
    }

Missing sections fall back to the application defaults. Unreadable or
malformed files raise ConfigError (exit 64); an unknown or invalid equation
or initial condition raises ValidationFailedError (exit 65).
"""

import json
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from symlab.analysis import verify
from symlab.classifier import classify
from symlab.equations import get_equation, spec_from_dict, validate_spec
from symlab.errors import (
    BlowUpError, ConfigError, EquationError, GridError, SymbolError,
    ValidationFailedError,
)
from symlab.models import Grid, IntegratorConfig, Scheme, Tolerances
from symlab.runner.forms import (
    ExperimentForm, GridForm, IntegratorForm, TolerancesForm, form_errors,
)
from symlab.runner.outputs import (
    prepare_directory, write_axis_track, write_json, write_trajectory_outputs,
)
from symlab.solver import hermitian_project, integrate, transform_forward
from symlab.symbols import evaluate_masked, parse_field

logger = logging.getLogger(__name__)

OUTPUT_ENV = 'SYMLAB_OUTPUT'
IMAGINARY_TOLERANCE = 1e-12

DEFAULTS = {
    'OUTPUT_DIR': 'output',
    'DEFAULT_GRID_N': 256,
    'DEFAULT_GRID_L': 40.0,
    'DEFAULT_DT': 1e-3,
    'DEFAULT_T_END': 5.0,
    'SYM_TOL': 1e-6,
    'PRED_TOL': 1e-4,
}


@dataclass
class ExperimentConfig:
    """
    A validated experiment file.

    Attributes:
        name: Stem of the config file
        experiment: 'classify', 'simulate' or 'verify'
        equation: EquationSpec
        grid: Grid
        integrator: IntegratorConfig
        tolerances: Tolerances
        ic: Initial-condition expressions, one per component
        output_dir: Directory receiving the artifacts
        coefficients: Also dump Fourier coefficients per snapshot
    """
    name: str
    experiment: str
    equation: object
    grid: Grid
    integrator: IntegratorConfig
    tolerances: Tolerances
    ic: tuple
    output_dir: Path
    coefficients: bool = False


@dataclass
class ExperimentResult:
    """What one run produced; exit_code follows the CLI contract."""
    config: ExperimentConfig
    classification: object
    validation: object = None
    trajectory: object = None
    report: object = None
    blow_up: str = None
    exit_code: int = 0
    files: list = field(default_factory=list)

    def summary(self):
        if self.blow_up:
            return f'{self.config.name}: blow-up ({self.blow_up})'
        if self.report is not None:
            return f'{self.config.name}: {self.report.verdict.value}'
        if self.trajectory is not None:
            return f'{self.config.name}: {len(self.trajectory)} snapshots written'
        return f'{self.config.name}: {self.classification.one_line()}'


def _read(path):
    path = Path(path)
    try:
        raw = json.loads(path.read_text(encoding='utf-8'))
    except OSError as exc:
        raise ConfigError(f'cannot read {path}: {exc.strerror or exc}') from exc
    except ValueError as exc:
        raise ConfigError(f'{path} is not valid JSON: {exc}') from exc
    if not isinstance(raw, dict):
        raise ConfigError(f'{path} must hold a JSON object')
    return raw


def _section(raw, key):
    section = raw.get(key) or {}
    if not isinstance(section, dict):
        raise ConfigError(f"'{key}' must be an object")
    return section


def _validated(form_class, section, defaults, errors):
    form = form_class(data={**defaults, **section})
    if not form.validate():
        errors.extend(form_errors(_section_name(form_class), form))
    return form


def _section_name(form_class):
    return form_class.__name__[:-len('Form')].lower()


def _equation(value):
    try:
        if isinstance(value, str):
            return get_equation(value)
        if isinstance(value, dict):
            return spec_from_dict(value)
    except EquationError as exc:
        raise ValidationFailedError(f'invalid equation: {exc}', [str(exc)]) from exc
    raise ValidationFailedError(
        'equation must be a catalog name or an equation object',
        [f'got {type(value).__name__}'])


def _output_dir(raw, name, settings):
    override = os.environ.get(OUTPUT_ENV)
    if override:
        return Path(override) / name
    if raw.get('output_dir'):
        return Path(raw['output_dir'])
    return Path(settings.get('OUTPUT_DIR', DEFAULTS['OUTPUT_DIR'])) / name


def load_experiment(path, settings=None):
    """
    Read and validate an experiment file.

    settings supplies the defaults (an application config or any mapping
    with the DEFAULTS keys).

    Raises:
        ConfigError: unreadable file, bad JSON or invalid settings.
        ValidationFailedError: unknown or malformed equation.
    """
    settings = {**DEFAULTS, **(settings or {})}
    path = Path(path)
    raw = _read(path)

    errors = []
    top = _validated(ExperimentForm, {
        key: raw[key] for key in ('experiment', 'output_dir', 'coefficients') if key in raw
    }, {}, errors)
    grid_form = _validated(GridForm, _section(raw, 'grid'), {
        'N': settings['DEFAULT_GRID_N'], 'L': settings['DEFAULT_GRID_L'],
    }, errors)
    integrator_form = _validated(IntegratorForm, _section(raw, 'integrator'), {
        'dt': settings['DEFAULT_DT'], 't_end': settings['DEFAULT_T_END'],
    }, errors)
    tolerances_form = _validated(TolerancesForm, _section(raw, 'tolerances'), {
        'sym_tol': settings['SYM_TOL'], 'pred_tol': settings['PRED_TOL'],
    }, errors)
    if errors:
        raise ConfigError(f'invalid experiment config {path}: ' + '; '.join(errors))

    try:
        grid = Grid(int(grid_form.N.data), float(grid_form.L.data))
        integrator = IntegratorConfig(
            dt=integrator_form.dt.data,
            t_end=integrator_form.t_end.data,
            snapshot_stride=integrator_form.snapshot_stride.data,
            dealias_fraction=integrator_form.dealias_fraction.data,
            scheme=Scheme(integrator_form.scheme.data),
        )
    except (GridError, ValueError) as exc:
        raise ConfigError(f'invalid experiment config {path}: {exc}') from exc

    if 'equation' not in raw:
        raise ConfigError(f"{path} does not name an equation")
    equation = _equation(raw['equation'])

    ic = raw.get('ic', ())
    if isinstance(ic, (str, int, float)):
        ic = (ic,)
    if not isinstance(ic, (list, tuple)):
        raise ConfigError("'ic' must be an expression or a list of expressions")

    config = ExperimentConfig(
        name=path.stem,
        experiment=top.experiment.data,
        equation=equation,
        grid=grid,
        integrator=integrator,
        tolerances=Tolerances(tolerances_form.sym_tol.data, tolerances_form.pred_tol.data),
        ic=tuple(str(expression) for expression in ic),
        output_dir=_output_dir(raw, path.stem, settings),
        coefficients=bool(top.coefficients.data),
    )
    logger.debug('loaded experiment %s: %s on %s', config.name, config.experiment, equation.name)
    return config


def initial_state(config):
    """
    Spectral state of the initial-condition expressions on the config grid.

    Raises:
        ValidationFailedError: wrong number of expressions, or an expression
            that does not parse or is not a finite real field on the grid.
    """
    spec, grid = config.equation, config.grid
    if len(config.ic) != spec.dimension:
        raise ValidationFailedError(
            f'{spec.name} needs {spec.dimension} initial condition(s), got {len(config.ic)}',
            [f'ic has {len(config.ic)} expression(s)'])

    rows, violations = [], []
    for component, text in enumerate(config.ic):
        try:
            expr = parse_field(text, grid.L)
        except SymbolError as exc:
            violations.append(f'ic[{component}]: {exc}')
            continue
        values, pole, overflow = evaluate_masked(expr, grid.x, period=grid.L)
        if np.any(pole) or np.any(overflow):
            violations.append(f'ic[{component}]: {text} is not finite on the grid')
            continue
        scale = max(float(np.max(np.abs(values))), 1.0)
        if np.max(np.abs(values.imag)) > IMAGINARY_TOLERANCE * scale:
            violations.append(f'ic[{component}]: {text} is not real on the grid')
            continue
        rows.append(values.real)
    if violations:
        raise ValidationFailedError('invalid initial condition', violations)

    state = transform_forward(np.array(rows), grid)
    return state.replace(coeffs=hermitian_project(state.coeffs, grid))


def check_runnable(config):
    """ValidationReport of the equation on the grid; raises when it cannot be simulated."""
    spec = config.equation
    validation = validate_spec(spec, config.grid, config.integrator.dealias_fraction)
    violations = list(validation.violations)
    if spec.classify_only:
        violations.insert(0, f'{spec.name} is classify_only and cannot be simulated')
    if violations:
        raise ValidationFailedError(f'{spec.name} cannot be simulated on this grid', violations)
    return validation


def run_experiment(config):
    """
    Run one experiment and write its artifacts to config.output_dir.

    Returns:
        ExperimentResult. A blow-up is a result (exit 3), not an exception.
    """
    spec = config.equation
    directory = prepare_directory(config.output_dir)
    result = ExperimentResult(config, classify(spec))
    result.files.append(write_json(directory / 'classification.json', result.classification.to_dict()))
    if config.experiment == 'classify':
        return result

    result.validation = check_runnable(config)
    result.files.append(write_json(directory / 'validation.json', result.validation.to_dict()))
    ic = initial_state(config)

    logger.info('%s: %s %s on N=%d, L=%g up to t=%g', config.name, config.experiment,
                spec.name, config.grid.N, config.grid.L, config.integrator.t_end)
    try:
        result.trajectory = integrate(spec, ic, config.integrator)
    except BlowUpError as exc:
        result.trajectory = exc.trajectory
        result.blow_up = str(exc)
        result.exit_code = 3
        result.files += write_trajectory_outputs(exc.trajectory, directory, config.coefficients)
        result.files.append(write_json(directory / 'report.json', {
            'equation': spec.name,
            'verdict': 'Inconclusive',
            'blow_up': {'time': exc.time, 'message': str(exc)},
            'integrator': config.integrator.to_dict(),
        }))
        return result

    result.files += write_trajectory_outputs(result.trajectory, directory, config.coefficients)
    if config.experiment == 'verify':
        result.report = verify(spec, result.classification, result.trajectory, config.tolerances)
        result.exit_code = result.report.exit_code
        report = result.report.to_dict()
        report['grid'] = config.grid.to_dict()
        report['integrator'] = config.integrator.to_dict()
        result.files.append(write_json(directory / 'report.json', report))
        result.files.append(write_axis_track(result.report, directory / 'axis.csv'))
    return result


def execute(path, settings=None, experiment=None, coefficients=False):
    """load_experiment then run_experiment; experiment overrides the file's own kind."""
    config = load_experiment(path, settings)
    if experiment is not None:
        config.experiment = experiment
    config.coefficients = config.coefficients or coefficients
    return run_experiment(config)
