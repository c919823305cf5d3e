"""
Numeric Mode Configuration
Exact rationals by default, tolerance-aware floats on request.

Every comparison made by the reduction, enumeration and matching code goes
through the active number context so the same algorithms run in both modes.
"""
import logging
import math
from contextlib import contextmanager
from decimal import Decimal
from fractions import Fraction

EXACT = 'exact'
FLOAT = 'float'
DEFAULT_TOLERANCE = 1e-9

logger = logging.getLogger(__name__)


class NumberTypeclass:
    """Arithmetic context: coercion, comparisons and square roots"""
    name = None

    def coerce(self, x):
        raise NotImplementedError

    def zero(self):
        return self.coerce(0)

    def is_zero(self, x):
        return x == 0

    def positive(self, x):
        return x > 0

    def negative(self, x):
        return self.positive(-x)

    def eq(self, a, b):
        return self.is_zero(a - b)

    def lt(self, a, b):
        return self.positive(b - a)

    def le(self, a, b):
        return not self.positive(a - b)

    def sqrt(self, x):
        raise NotImplementedError


class RationalNumbers(NumberTypeclass):
    name = EXACT

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, float):
            if not math.isfinite(x):
                raise ValueError(f"non-finite value {x!r}")
            # shortest decimal that round-trips, read exactly
            return Fraction(repr(x))
        if isinstance(x, str):
            text = x.strip()
            if not text:
                raise ValueError("empty numeric field")
            return Fraction(text)
        if isinstance(x, Decimal):
            return Fraction(x)
        # numpy scalars and friends
        return Fraction(str(x))

    def sqrt(self, x):
        x = self.coerce(x)
        if x < 0:
            raise ValueError("square root of a negative number")
        num, den = x.numerator, x.denominator
        rn, rd = math.isqrt(num), math.isqrt(den)
        if rn * rn == num and rd * rd == den:
            return Fraction(rn, rd)
        return math.sqrt(x)


class RealFiniteTolerance(NumberTypeclass):
    name = FLOAT

    def __init__(self, tolerance=DEFAULT_TOLERANCE):
        if tolerance <= 0:
            raise ValueError("tolerance must be positive")
        self.tolerance = float(tolerance)

    def coerce(self, x):
        if isinstance(x, str):
            value = float(Fraction(x.strip()))
        else:
            value = float(x)
        if not math.isfinite(value):
            raise ValueError(f"non-finite value {x!r}")
        return value

    def is_zero(self, x):
        return abs(x) <= self.tolerance

    def positive(self, x):
        return x > self.tolerance

    def sqrt(self, x):
        return math.sqrt(x)


_active = RationalNumbers()


def get_numeric():
    """Return the active number context"""
    return _active


def make_numeric(mode=EXACT, tolerance=None):
    if mode == EXACT:
        return RationalNumbers()
    if mode == FLOAT:
        return RealFiniteTolerance(DEFAULT_TOLERANCE if tolerance is None else float(tolerance))
    raise ValueError(f"unknown numeric mode {mode!r}")


def set_numeric_mode(mode=EXACT, tolerance=None):
    global _active
    _active = make_numeric(mode, tolerance)
    logger.debug(f"Numeric mode set to {_active.name}")
    return _active


@contextmanager
def numeric_mode(mode=EXACT, tolerance=None):
    """Temporarily switch the number context"""
    global _active
    previous = _active
    _active = make_numeric(mode, tolerance)
    try:
        yield _active
    finally:
        _active = previous


def to_scalar(x):
    return _active.coerce(x)


def is_exact():
    return _active.name == EXACT
