"""
Runner blueprint.

Carries the command-line front door: catalog listing, classification,
config-driven simulate / verify experiments, the self-test and batch runs.
The blueprint has no routes; its commands are attached to the application's
command group at the top level.
"""

from flask import Blueprint

runner_bp = Blueprint('runner', __name__, cli_group=None)

from . import commands  # noqa: F401, E402
