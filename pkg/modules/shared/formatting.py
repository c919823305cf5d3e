"""
Number rendering for command output, JSON files and CSV exports
"""
from fractions import Fraction

from modules.core.numeric import to_scalar

FLOAT_FORMAT = '.17g'


def format_scalar(x):
    """JSON-ready value: integers stay ints, other rationals become 'p/q' strings, floats stay floats"""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return float(x)


def render_scalar(x):
    """Text form; floats use a fixed 17-significant-digit rendering"""
    value = format_scalar(x)
    if isinstance(value, float):
        return format(value, FLOAT_FORMAT)
    return str(value)


def parse_scalar(value):
    """Inverse of format_scalar/render_scalar in the active numeric mode"""
    if isinstance(value, (int, float)) and not isinstance(value, bool):
        return to_scalar(value)
    return to_scalar(str(value))


def format_matrix(rows):
    return [[format_scalar(x) for x in row] for row in rows]


def render_line(values):
    return ','.join(render_scalar(x) for x in values)
