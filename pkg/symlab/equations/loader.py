"""Build EquationSpec objects from JSON-compatible dictionaries and files."""

import json
import logging
from pathlib import Path

from symlab.errors import EquationError, SymbolError
from symlab.models.equation import EquationSpec, Factor, PseudoProductTerm, ZeroModePolicy
from symlab.symbols import parse_symbol

logger = logging.getLogger(__name__)


def _symbol(text, where):
    try:
        return parse_symbol(str(text))
    except SymbolError as exc:
        raise EquationError(f'{where}: {exc}') from exc


def _term(data, where):
    if not isinstance(data, dict):
        raise EquationError(f'{where}: a term must be an object, got {type(data).__name__}')
    factors = data.get('factors') or []
    if not factors:
        raise EquationError(f'{where}: a term needs at least one factor')
    try:
        coefficient = float(data.get('coefficient', 1.0))
        component_of = [int(f.get('component', 0)) for f in factors]
    except (TypeError, ValueError, AttributeError) as exc:
        raise EquationError(f'{where}: {exc}') from exc
    return PseudoProductTerm(
        coefficient=coefficient,
        outer=_symbol(data.get('outer', '1'), f'{where}.outer'),
        factors=tuple(
            Factor(_symbol(f.get('inner', '1'), f'{where}.factors[{j}].inner'), component)
            for j, (f, component) in enumerate(zip(factors, component_of))
        ),
    )


def spec_from_dict(data):
    """
    Build an EquationSpec from its dictionary form.

    ``terms`` is a list with one list of terms per component; a scalar
    equation may give the flat list of its terms instead. Component bounds
    and symbol values on a grid are not checked here (see validate_spec).

    Raises:
        EquationError: missing fields, malformed terms or unparsable symbols.
    """
    if not isinstance(data, dict):
        raise EquationError('equation must be an object')
    name = str(data.get('name') or 'inline')
    try:
        dimension = int(data.get('dimension', 1))
    except (TypeError, ValueError):
        raise EquationError(f'{name}: dimension must be an integer') from None
    if dimension < 1:
        raise EquationError(f'{name}: dimension must be positive, got {dimension}')

    left = data.get('left') or ['1'] * dimension
    if isinstance(left, str):
        left = [left]
    if len(left) != dimension:
        raise EquationError(f'{name}: {len(left)} left symbols for dimension {dimension}')

    rows = data.get('terms') or []
    if dimension == 1 and rows and isinstance(rows[0], dict):
        rows = [rows]
    if len(rows) != dimension:
        raise EquationError(f'{name}: {len(rows)} term rows for dimension {dimension}')

    try:
        zero_mode = ZeroModePolicy(data.get('zero_mode', 'strict'))
    except ValueError:
        raise EquationError(f"{name}: zero_mode must be 'strict' or 'exempt'") from None

    return EquationSpec(
        name=name,
        dimension=dimension,
        left=tuple(_symbol(p, f'{name}.left[{c}]') for c, p in enumerate(left)),
        terms=tuple(
            tuple(_term(term, f'{name}.terms[{c}][{k}]') for k, term in enumerate(row))
            for c, row in enumerate(rows)
        ),
        notes=str(data.get('notes', '')),
        classify_only=bool(data.get('classify_only', False)),
        zero_mode=zero_mode,
        local_form=bool(data.get('local_form', False)),
    )


def load_spec_file(path):
    """Read one equation file."""
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding='utf-8'))
    except (OSError, ValueError) as exc:
        raise EquationError(f'cannot read equation file {path}: {exc}') from exc
    logger.debug('loaded equation file %s', path)
    return spec_from_dict(data)
