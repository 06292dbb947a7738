"""
Configuration module for symlab.

Contains different configuration classes for development, testing, and production environments.
Experiment defaults can be overridden through environment variables (or a .env file).
"""

import os

basedir = os.path.abspath(os.path.dirname(__file__))


class Config:
    """Base configuration class with common settings."""

    # Where experiment artifacts go when a config names no output_dir
    OUTPUT_DIR = os.environ.get('SYMLAB_OUTPUT') or os.path.join(basedir, 'output')

    # Experiment defaults
    DEFAULT_GRID_N = 256
    DEFAULT_GRID_L = 40.0
    DEFAULT_DT = 1e-3
    DEFAULT_T_END = 5.0

    # Verdict tolerances
    SYM_TOL = 1e-6
    PRED_TOL = 1e-4

    # Parallelism
    FFT_WORKERS = int(os.environ.get('SYMLAB_FFT_WORKERS', 1))
    BATCH_WORKERS = int(os.environ.get('SYMLAB_BATCH_WORKERS', os.cpu_count() or 1))

    # Logging
    LOG_LEVEL = os.environ.get('SYMLAB_LOG_LEVEL', 'INFO')
    LOG_DIR = os.environ.get('SYMLAB_LOG_DIR', 'logs')

    @staticmethod
    def init_app(app):
        pass


class DevelopmentConfig(Config):
    """Development configuration with verbose logging."""

    DEBUG = True
    LOG_LEVEL = os.environ.get('SYMLAB_LOG_LEVEL', 'DEBUG')

    @staticmethod
    def init_app(app):
        Config.init_app(app)


class TestingConfig(Config):
    """Testing configuration: single worker, warnings only."""

    TESTING = True
    BATCH_WORKERS = 1
    LOG_LEVEL = 'WARNING'


class ProductionConfig(Config):
    """Production configuration for long batch runs on shared machines."""

    @classmethod
    def init_app(cls, app):
        Config.init_app(app)

        # Log to a rotating file in production
        import logging
        from logging.handlers import RotatingFileHandler

        log_dir = app.config.get('LOG_DIR', cls.LOG_DIR)
        if not os.path.exists(log_dir):
            os.makedirs(log_dir, exist_ok=True)

        file_handler = RotatingFileHandler(
            os.path.join(log_dir, 'symlab.log'),
            maxBytes=10240000,
            backupCount=10
        )
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))
        file_handler.setLevel(logging.INFO)
        app.logger.addHandler(file_handler)
        app.logger.setLevel(logging.INFO)
        app.logger.info('symlab startup')


# Configuration dictionary for easy access
config = {
    'development': DevelopmentConfig,
    'testing': TestingConfig,
    'production': ProductionConfig,
    'default': DevelopmentConfig
}
