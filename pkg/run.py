"""
Application entry point.

Builds the ``symlab`` command group on top of the application factory.
Environment variables are loaded from a .env file when present.

Usage:
    Installed:   symlab catalog
    From source: python run.py verify experiments/kdv_soliton.json
"""

import click
from flask.cli import FlaskGroup

from symlab import create_app


def _create_app():
    return create_app()


@click.group(cls=FlaskGroup, create_app=_create_app, add_default_commands=False,
             add_version_option=False, load_dotenv=True)
def cli():
    """Symmetry principles for nonlocal evolution equations."""


if __name__ == '__main__':
    cli()
