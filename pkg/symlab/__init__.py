"""
symlab: symmetry principles for nonlocal evolution equations.

Classifies equations P(D) u_t = F(D, u), built from Fourier multipliers and
pseudo-products, by the parity of their symbols, integrates them with a
periodic pseudospectral solver and checks whether symmetric solutions behave
as the principle of their class predicts.

The library functions work without an application; create_app() adds the
configuration, logging and the command-line front door.
"""

import logging
import os

from flask import Flask

from config import config

__version__ = '1.0.0'


def create_app(config_name=None):
    """
    Application factory function.

    Args:
        config_name: Configuration to use ('development', 'testing', 'production')
                    Defaults to SYMLAB_CONFIG env variable or 'development'

    Returns:
        Flask application instance
    """
    if config_name is None:
        config_name = os.environ.get('SYMLAB_CONFIG', 'development')

    # The application logger is the 'symlab' logger, parent of every module logger
    app = Flask('symlab')

    # Load configuration
    app.config.from_object(config[config_name])
    _configure_logging(app)
    config[config_name].init_app(app)

    # Initialize extensions
    _init_extensions(app)

    # Register blueprints
    _register_blueprints(app)

    return app


def _configure_logging(app):
    """Apply LOG_LEVEL to the symlab logger tree."""
    level = app.config.get('LOG_LEVEL', 'INFO')
    app.logger.setLevel(logging.getLevelName(level) if isinstance(level, str) else level)


def _init_extensions(app):
    """Initialize shared singletons with the app instance."""
    from symlab.extensions import fft

    fft.init_app(app)


def _register_blueprints(app):
    """Register all application blueprints."""
    from symlab.runner import runner_bp

    app.register_blueprint(runner_bp)
