"""
Classifier package.

Labels equations P1, P2, P3_strong, P3_weak or Unclassified from the parity of
their symbols and audits the flux hypothesis of the local-flux principle.
"""

from symlab.classifier.flux import FluxCheck, check_flux_invertibility
from symlab.classifier.principles import classify

__all__ = ['classify', 'check_flux_invertibility', 'FluxCheck']
