"""
Equations package.

Pseudo-product equations, their parity structure, grid validation and the
embedded catalog.
"""

from symlab.equations.catalog import build_catalog, catalog_names, export_catalog, get_equation
from symlab.equations.loader import load_spec_file, spec_from_dict
from symlab.equations.structure import (
    even_terms, extract_local_flux, is_local_flux_term, odd_terms, symbol_parity,
    term_parity,
)
from symlab.equations.validation import max_dealias_fraction, validate_spec

__all__ = [
    'build_catalog', 'catalog_names', 'export_catalog', 'get_equation',
    'load_spec_file', 'spec_from_dict', 'even_terms', 'extract_local_flux',
    'is_local_flux_term', 'odd_terms', 'symbol_parity', 'term_parity',
    'max_dealias_fraction', 'validate_spec',
]
