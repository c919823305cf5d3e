"""
Small exact linear algebra over tuples (n <= 4).
Closed-form determinants up to n = 3; everything else goes through sympy's
DomainMatrix over QQ.
"""
from fractions import Fraction
from functools import reduce
from math import gcd

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix


def _qq_matrix(m):
    rows = [[QQ(Fraction(x).numerator, Fraction(x).denominator) for x in row] for row in m]
    return DomainMatrix(rows, (len(rows), len(rows[0])), QQ)


def _fraction(e):
    return Fraction(int(e.numerator), int(e.denominator))


def transpose(m):
    return tuple(zip(*m))


def mat_mul(a, b):
    cols = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def vec_mat(v, m):
    """Row vector times matrix"""
    return tuple(sum(v[k] * m[k][j] for k in range(len(v))) for j in range(len(m[0])))


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def det(m):
    n = len(m)
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return _fraction(_qq_matrix(m).det())


def inverse(m):
    """Exact inverse; integer entries stay integers when det is +-1"""
    d = det(m)
    if d == 0:
        raise ZeroDivisionError("singular matrix")
    inv = [[_fraction(e) for e in row] for row in _qq_matrix(m).inv().to_list()]
    if d in (1, -1):
        return tuple(tuple(int(x) for x in row) for row in inv)
    return tuple(tuple(row) for row in inv)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def content(v):
    return reduce(gcd, (abs(int(x)) for x in v), 0)


def is_primitive(v):
    return content(v) == 1


def is_integral(values):
    return all(Fraction(x).denominator == 1 for x in values)


def neg(v):
    return tuple(-x for x in v)


def add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def scale(c, v):
    return tuple(c * x for x in v)


def rank(rows):
    if not rows:
        return 0
    return _qq_matrix(rows).rank()
