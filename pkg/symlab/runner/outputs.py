"""
Experiment artifacts.

Layout of an output directory (every file is rewritten on each run):

    classification.json        classification report
    validation.json            grid validation (simulate / verify)
    report.json                verification report or blow-up summary
    axis.csv                   t,lambda,defect (verify)
    trajectory_u<c>.csv        t,x_0,...,x_{N-1} per component
    coefficients/u<c>_s<i>.csv k,re,im per component and snapshot (optional)
    plot/snapshot_<i>.csv      x,u<c>... per snapshot
    plot/plot_snapshots.py     matplotlib script drawing the plot files
"""

import json
import logging
import shutil
from pathlib import Path

import numpy as np

from symlab.solver.transforms import transform_inverse

logger = logging.getLogger(__name__)

NUMBER_FORMAT = '%.17g'

PLOT_SCRIPT = '''\
"""Draw every snapshot_*.csv in this directory into snapshots.png."""

import glob
import os

import numpy as np
import matplotlib
matplotlib.use('Agg')
import matplotlib.pyplot as plt

here = os.path.dirname(os.path.abspath(__file__))
files = sorted(glob.glob(os.path.join(here, 'snapshot_*.csv')))
times = np.loadtxt(os.path.join(here, 'times.csv'), delimiter=',', skiprows=1, ndmin=2)

with open(files[0]) as handle:
    columns = handle.readline().strip().split(',')[1:]

fig, axes = plt.subplots(len(columns), 1, figsize=(6.4, 2.4 * len(columns)), squeeze=False)
colors = plt.cm.viridis(np.linspace(0.0, 1.0, len(files)))
for path, color, (_, t) in zip(files, colors, times):
    data = np.loadtxt(path, delimiter=',', skiprows=1, ndmin=2)
    for axis, column in zip(axes[:, 0], range(1, data.shape[1])):
        axis.plot(data[:, 0], data[:, column], color=color, linewidth=1.0, label=f't={t:g}')

for axis, name in zip(axes[:, 0], columns):
    axis.set_xlabel('x')
    axis.set_ylabel(name)
    axis.set_xlim(0.0, None)
if len(files) <= 8:
    axes[0, 0].legend(fontsize=7)

plt.tight_layout(pad=0.5)
plt.savefig(os.path.join(here, 'snapshots.png'), dpi=150)
'''


def prepare_directory(path):
    path = Path(path)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _fresh_subdirectory(directory, name):
    """Empty (or create) a subdirectory so stale snapshot files never survive a rerun."""
    target = Path(directory) / name
    if target.exists():
        shutil.rmtree(target)
    target.mkdir(parents=True)
    return target


def write_json(path, data):
    path = Path(path)
    path.write_text(json.dumps(data, indent=2) + '\n', encoding='utf-8')
    return path


def _savetxt(path, rows, header):
    np.savetxt(path, rows, fmt=NUMBER_FORMAT, delimiter=',', header=header, comments='')
    return Path(path)


def write_trajectory_csv(trajectory, directory):
    """One CSV per component: a row per snapshot with t then the N grid values."""
    directory = prepare_directory(directory)
    grid = trajectory.grid
    header = ','.join(['t'] + [f'x_{n}' for n in range(grid.N)])
    values = np.stack([transform_inverse(state) for state in trajectory])
    times = np.asarray(trajectory.times)[:, np.newaxis]
    return [
        _savetxt(directory / f'trajectory_u{c}.csv', np.hstack([times, values[:, c, :]]), header)
        for c in range(trajectory.dimension)
    ]


def write_coefficients(trajectory, directory):
    """k,re,im per component and snapshot, in FFT storage order."""
    target = _fresh_subdirectory(directory, 'coefficients')
    modes = trajectory.grid.modes
    written = []
    for index, state in enumerate(trajectory):
        for c in range(state.dimension):
            rows = np.column_stack([modes, state.coeffs[c].real, state.coeffs[c].imag])
            written.append(_savetxt(target / f'u{c}_s{index:04d}.csv', rows, 'k,re,im'))
    return written


def write_axis_track(report, path):
    rows = np.column_stack([report.times, report.axis, report.defects])
    return _savetxt(path, rows, 't,lambda,defect')


def write_plot_data(trajectory, directory):
    """x/u columns per snapshot, the snapshot times and the plotting script."""
    target = _fresh_subdirectory(directory, 'plot')
    x = trajectory.grid.x
    header = ','.join(['x'] + [f'u{c}' for c in range(trajectory.dimension)])
    written = []
    for index, state in enumerate(trajectory):
        rows = np.column_stack([x, transform_inverse(state).T])
        written.append(_savetxt(target / f'snapshot_{index:04d}.csv', rows, header))
    indices = np.arange(len(trajectory))
    written.append(_savetxt(
        target / 'times.csv', np.column_stack([indices, trajectory.times]), 'snapshot,t'))
    script = target / 'plot_snapshots.py'
    script.write_text(PLOT_SCRIPT, encoding='utf-8')
    written.append(script)
    return written


def write_trajectory_outputs(trajectory, directory, coefficients=False):
    """Trajectory CSVs and plot data; coefficient dumps when asked for."""
    written = write_trajectory_csv(trajectory, directory)
    written += write_plot_data(trajectory, directory)
    if coefficients:
        written += write_coefficients(trajectory, directory)
    logger.debug('wrote %d trajectory files to %s', len(written), directory)
    return written
