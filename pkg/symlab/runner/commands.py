"""
CLI commands of the runner blueprint.

Registered at the top level of the ``symlab`` command group:

    symlab catalog
    symlab classify <name|file> [--json]
    symlab simulate <config> [--coefficients]
    symlab verify <config> [--coefficients]
    symlab selftest
    symlab export-catalog <dir>
    symlab batch <config>... [--workers N]

Exit codes: 0 consistent, 2 violation, 3 inconclusive or blow-up,
64 unreadable config, 65 invalid equation or initial condition.
"""

import json
import logging
from multiprocessing import Pool
from pathlib import Path

import click
from flask import current_app

from symlab.classifier import classify
from symlab.decorators import EXIT_INCONCLUSIVE, EXIT_OK, exit_code_for, exit_on_error
from symlab.equations import build_catalog, export_catalog, get_equation, load_spec_file
from symlab.errors import SymlabError
from symlab.runner import runner_bp
from symlab.runner.experiment import DEFAULTS, execute
from symlab.runner.selftest import run_selftest

logger = logging.getLogger(__name__)


def _settings():
    """The experiment defaults of the current application as a plain dict."""
    return {key: current_app.config[key] for key in DEFAULTS if key in current_app.config}


def _run_config(path, experiment, coefficients):
    result = execute(path, _settings(), experiment, coefficients)
    click.echo(result.summary())
    if result.report is not None:
        for line in result.report.diagnostics:
            click.echo(f'  {line}')
    click.echo(f'{len(result.files)} file(s) written to {result.config.output_dir}')
    return result.exit_code


@runner_bp.cli.command('catalog')
@exit_on_error
def catalog():
    """List every catalog equation with its classification."""
    click.echo('name | dim | label | predicted')
    for spec in build_catalog():
        click.echo(classify(spec).one_line())
    return EXIT_OK


@runner_bp.cli.command('classify')
@click.argument('equation')
@click.option('--json', 'as_json', is_flag=True, help='Print the full report as JSON.')
@exit_on_error
def classify_command(equation, as_json):
    """Classify a catalog equation or an equation file."""
    if Path(equation).is_file():
        spec = load_spec_file(equation)
    else:
        spec = get_equation(equation)
    report = classify(spec)
    if as_json:
        click.echo(json.dumps(report.to_dict(), indent=2))
        return EXIT_OK

    click.echo(report.one_line())
    for index, component in enumerate(report.components):
        terms = ', '.join(p.value for p in component.terms)
        click.echo(f'  component {index}: left {component.left.value}; terms {terms}')
    if report.steady_terms:
        click.echo('  steady sub-equation terms: ' + '; '.join(report.steady_terms))
    for line in report.citations + report.notes:
        click.echo(f'  {line}')
    return EXIT_OK


@runner_bp.cli.command('simulate')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.option('--coefficients', is_flag=True, help='Also dump Fourier coefficients per snapshot.')
@exit_on_error
def simulate(config_path, coefficients):
    """Integrate the equation of an experiment config and write its trajectory."""
    return _run_config(config_path, 'simulate', coefficients)


@runner_bp.cli.command('verify')
@click.argument('config_path', type=click.Path(dir_okay=False))
@click.option('--coefficients', is_flag=True, help='Also dump Fourier coefficients per snapshot.')
@exit_on_error
def verify_command(config_path, coefficients):
    """Integrate and check the trajectory against the predicted behavior."""
    return _run_config(config_path, 'verify', coefficients)


@runner_bp.cli.command('selftest')
@exit_on_error
def selftest():
    """Run the embedded property checks."""
    results = run_selftest()
    width = max(len(r.name) for r in results)
    for result in results:
        status = 'PASS' if result.passed else 'FAIL'
        click.echo(f'{result.name:<{width}}  {status}  {result.detail}')
    return EXIT_OK if all(r.passed for r in results) else EXIT_INCONCLUSIVE


@runner_bp.cli.command('export-catalog')
@click.argument('directory', type=click.Path(file_okay=False))
@exit_on_error
def export_catalog_command(directory):
    """Write the embedded equation files into DIRECTORY."""
    written = export_catalog(directory)
    click.echo(f'{len(written)} equation file(s) written to {directory}')
    return EXIT_OK


def _run_batch_entry(args):
    """Worker: run one config file and report (path, exit code, summary)."""
    path, settings = args
    try:
        result = execute(path, settings)
        return path, result.exit_code, result.summary()
    except SymlabError as exc:
        return path, exit_code_for(exc), f'{Path(path).stem}: {exc}'


@runner_bp.cli.command('batch')
@click.argument('config_paths', nargs=-1, required=True, type=click.Path(dir_okay=False))
@click.option('--workers', type=click.IntRange(min=1), default=None,
              help='Worker processes (default BATCH_WORKERS).')
@exit_on_error
def batch(config_paths, workers):
    """Run several experiment configs concurrently, one process per trajectory."""
    workers = workers or current_app.config.get('BATCH_WORKERS', 1)
    settings = _settings()
    jobs = [(path, settings) for path in config_paths]
    if workers == 1 or len(jobs) == 1:
        outcomes = [_run_batch_entry(job) for job in jobs]
    else:
        with Pool(processes=min(workers, len(jobs))) as pool:
            outcomes = pool.map(_run_batch_entry, jobs)

    for path, code, summary in outcomes:
        click.echo(f'[{code:>2}] {summary}')
    # Worst outcome wins: 65 > 64 > 3 > 2 > 0.
    return max(code for _, code, _ in outcomes)
