"""
Catalog of named equations.

The entries ship as JSON files inside the package (``equations/data``),
are parsed once per process and can be exported back to disk.
"""

import json
import logging
from functools import lru_cache
from importlib import resources
from pathlib import Path

from symlab.errors import EquationNotFoundError
from symlab.equations.loader import spec_from_dict

logger = logging.getLogger(__name__)

CATALOG_PACKAGE = 'symlab.equations.data'


def _catalog_files():
    root = resources.files(CATALOG_PACKAGE)
    return sorted(
        (entry for entry in root.iterdir() if entry.name.endswith('.json')),
        key=lambda entry: entry.name,
    )


@lru_cache(maxsize=1)
def _load():
    specs = {}
    for entry in _catalog_files():
        spec = spec_from_dict(json.loads(entry.read_text(encoding='utf-8')))
        specs[spec.name] = spec
    logger.info('Loaded %d catalog equations', len(specs))
    return specs


def build_catalog():
    """All catalog equations, ordered by name."""
    return list(_load().values())


def catalog_names():
    return list(_load())


def get_equation(name):
    """Look up a catalog equation by name."""
    try:
        return _load()[name]
    except KeyError:
        known = ', '.join(_load())
        raise EquationNotFoundError(f"no catalog equation named '{name}' (known: {known})") from None


def export_catalog(directory):
    """Write every embedded equation file into directory; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for entry in _catalog_files():
        target = directory / entry.name
        target.write_text(entry.read_text(encoding='utf-8'), encoding='utf-8')
        written.append(target)
    logger.info('Exported %d equation files to %s', len(written), directory)
    return written
