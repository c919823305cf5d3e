"""
Input parsing for Gram matrices and cell parameters given on the command line
"""
import logging

from modules.core.lattice import gram_from_cell
from modules.core.models import CellParameters, SymMat2, SymMat3
from modules.core.numeric import to_scalar
from modules.shared.errors import ParseError

logger = logging.getLogger(__name__)


def parse_numbers(text, row=None):
    fields = [f for f in str(text).replace(';', ',').split(',')]
    try:
        return [to_scalar(f) for f in fields]
    except (ValueError, TypeError, ZeroDivisionError) as e:
        raise ParseError(f"could not read numbers from {text!r}: {e}", row=row) from e


def parse_gram(text, row=None):
    """
    Accepts 6 entries (s11,s22,s33,s12,s13,s23), 3 entries (s11,s22,s12),
    or a full 3x3 / 2x2 matrix in row-major order (';' may separate rows).
    """
    values = parse_numbers(text, row)
    try:
        if len(values) == 6:
            return SymMat3.from_entries(values)
        if len(values) == 3:
            return SymMat2.from_entries(values)
        if len(values) == 9:
            return SymMat3.from_matrix([values[0:3], values[3:6], values[6:9]])
        if len(values) == 4:
            return SymMat2.from_matrix([values[0:2], values[2:4]])
    except ValueError as e:
        raise ParseError(str(e), row=row) from e
    raise ParseError(f"expected 3, 4, 6 or 9 numbers, got {len(values)}", row=row)


def parse_cell(text, row=None):
    values = parse_numbers(text, row)
    if len(values) != 6:
        raise ParseError(f"cell parameters need 6 numbers (a,b,c,alpha,beta,gamma), got {len(values)}", row=row)
    return CellParameters(*values)


def gram_from_inputs(matrices=(), cells=()):
    """Gram matrices from positional matrix strings followed by --cell strings"""
    grams = [parse_gram(text) for text in matrices]
    grams.extend(gram_from_cell(parse_cell(text)) for text in cells)
    logger.debug(f"Parsed {len(grams)} input form(s)")
    return grams


def require_count(grams, count, what):
    if len(grams) != count:
        raise ParseError(f"{what} needs exactly {count} input form(s), got {len(grams)}")
    return grams
