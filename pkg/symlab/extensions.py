"""
Shared singletons.

Created without an application and bound to it in create_app(), so library
code can import them at module level and still pick up the configuration:

- fft: the transform backend (scipy.fft, unitary normalisation)
- the pyparsing packrat cache used by the symbol grammar
"""

import logging

from pyparsing import ParserElement
from scipy import fft as sp_fft

logger = logging.getLogger(__name__)


class FFTBackend:
    """
    Unitary FFT pair along the last axis.

    Attributes:
        workers: Threads scipy.fft may use; results do not depend on it
    """

    def __init__(self, app=None):
        self.workers = 1
        if app is not None:
            self.init_app(app)

    def init_app(self, app):
        self.workers = max(1, int(app.config.get('FFT_WORKERS', 1)))
        app.extensions['symlab.fft'] = self
        logger.debug('FFT backend using %d worker(s)', self.workers)

    def forward(self, values):
        return sp_fft.fft(values, axis=-1, norm='ortho', workers=self.workers)

    def inverse(self, coeffs):
        return sp_fft.ifft(coeffs, axis=-1, norm='ortho', workers=self.workers)


# Transform backend for the solver and the analysis tools
fft = FFTBackend()

# Memoising parser for the symbol grammar
ParserElement.enable_packrat()
