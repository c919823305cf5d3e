"""
Core value types: Gram matrices, cell parameters and unimodular matrices
"""
from dataclasses import dataclass, fields
from functools import cached_property
from itertools import permutations, product
from typing import ClassVar

from modules.core import linalg
from modules.core.numeric import get_numeric, to_scalar
from modules.shared.errors import InvalidCellParameters, NotUnimodular


class _SymMatOps:
    """Operations shared by SymMat2 and SymMat3; entries are stored upper-triangular"""
    n: ClassVar[int]
    _index: ClassVar[tuple]

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, to_scalar(getattr(self, f.name)))

    @cached_property
    def rows(self):
        m = [[None] * self.n for _ in range(self.n)]
        for (i, j), value in zip(self._index, self.entries()):
            m[i][j] = value
            m[j][i] = value
        return tuple(tuple(row) for row in m)

    def entries(self):
        return tuple(getattr(self, f.name) for f in fields(self))

    def entry(self, i, j):
        return self.rows[i][j]

    def diagonal(self):
        return tuple(self.rows[i][i] for i in range(self.n))

    def inner(self, u, v):
        m = self.rows
        return sum(u[i] * m[i][j] * v[j] for i in range(self.n) for j in range(self.n) if u[i] and v[j])

    def det(self):
        return linalg.det(self.rows)

    def leading_minors(self):
        m = self.rows
        return tuple(linalg.det(tuple(row[:k] for row in m[:k])) for k in range(1, self.n + 1))

    def trace(self):
        return sum(self.diagonal())

    def scaled(self, c):
        c = to_scalar(c)
        return type(self)(*(c * x for x in self.entries()))

    def __add__(self, other):
        self._check_same(other)
        return type(self)(*(a + b for a, b in zip(self.entries(), other.entries())))

    def __sub__(self, other):
        self._check_same(other)
        return type(self)(*(a - b for a, b in zip(self.entries(), other.entries())))

    def max_abs(self):
        return max(abs(x) for x in self.entries())

    def _check_same(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")

    @classmethod
    def from_matrix(cls, rows):
        if len(rows) != cls.n or any(len(r) != cls.n for r in rows):
            raise ValueError(f"{cls.__name__} needs a {cls.n}x{cls.n} matrix")
        num = get_numeric()
        for i in range(cls.n):
            for j in range(i + 1, cls.n):
                if not num.eq(to_scalar(rows[i][j]), to_scalar(rows[j][i])):
                    raise ValueError("matrix is not symmetric")
        return cls(*(rows[i][j] for i, j in cls._index))

    @classmethod
    def from_entries(cls, values):
        values = tuple(values)
        if len(values) != len(cls._index):
            raise ValueError(f"{cls.__name__} needs {len(cls._index)} entries, got {len(values)}")
        return cls(*values)

    @classmethod
    def identity(cls):
        return cls.from_matrix(linalg.identity(cls.n))

    @classmethod
    def diag(cls, *values):
        m = [[0] * cls.n for _ in range(cls.n)]
        for i, v in enumerate(values):
            m[i][i] = v
        return cls.from_matrix(m)


@dataclass(frozen=True)
class SymMat3(_SymMatOps):
    s11: object
    s22: object
    s33: object
    s12: object
    s13: object
    s23: object

    n: ClassVar[int] = 3
    _index: ClassVar[tuple] = ((0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2))

    def quad(self, v):
        x, y, z = v
        return (self.s11 * x * x + self.s22 * y * y + self.s33 * z * z
                + 2 * (self.s12 * x * y + self.s13 * x * z + self.s23 * y * z))


@dataclass(frozen=True)
class SymMat2(_SymMatOps):
    s11: object
    s22: object
    s12: object

    n: ClassVar[int] = 2
    _index: ClassVar[tuple] = ((0, 0), (1, 1), (0, 1))

    def quad(self, v):
        x, y = v
        return self.s11 * x * x + self.s22 * y * y + 2 * self.s12 * x * y


def sym_from_matrix(rows):
    return {2: SymMat2, 3: SymMat3}[len(rows)].from_matrix(rows)


def sym_from_entries(values):
    values = tuple(values)
    if len(values) == 6:
        return SymMat3.from_entries(values)
    if len(values) == 3:
        return SymMat2.from_entries(values)
    raise ValueError(f"expected 3 or 6 Gram entries, got {len(values)}")


@dataclass(frozen=True)
class CellParameters:
    """Lengths in Angstrom, angles in degrees"""
    a: object
    b: object
    c: object
    alpha: object
    beta: object
    gamma: object

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, to_scalar(getattr(self, f.name)))
        if min(self.a, self.b, self.c) <= 0:
            raise InvalidCellParameters(f"cell lengths must be positive: {self.lengths()}")
        if any(not 0 < angle < 180 for angle in self.angles()):
            raise InvalidCellParameters(f"cell angles must lie in (0, 180): {self.angles()}")

    def lengths(self):
        return (self.a, self.b, self.c)

    def angles(self):
        return (self.alpha, self.beta, self.gamma)


@dataclass(frozen=True)
class UnimodularMat:
    rows: tuple

    def __post_init__(self):
        try:
            rows = tuple(tuple(_as_int(x) for x in row) for row in self.rows)
        except (TypeError, ValueError) as e:
            raise NotUnimodular(f"non-integer entry: {e}") from e
        n = len(rows)
        if n not in (2, 3) or any(len(r) != n for r in rows):
            raise NotUnimodular(f"expected a 2x2 or 3x3 matrix, got {self.rows}")
        d = linalg.det(rows)
        if d not in (1, -1):
            raise NotUnimodular(f"determinant {d} is not +-1 for {rows}")
        object.__setattr__(self, 'rows', rows)

    @property
    def n(self):
        return len(self.rows)

    def det(self):
        return linalg.det(self.rows)

    def inverse(self):
        return UnimodularMat(linalg.inverse(self.rows))

    def transpose(self):
        return UnimodularMat(linalg.transpose(self.rows))

    def __matmul__(self, other):
        return UnimodularMat(linalg.mat_mul(self.rows, other.rows))

    def act(self, v):
        """v -> v g for a row vector v"""
        return linalg.vec_mat(v, self.rows)

    def flattened(self):
        return tuple(x for row in self.rows for x in row)

    @classmethod
    def identity(cls, n=3):
        return cls(linalg.identity(n))

    @classmethod
    def signed_permutations(cls, n=3):
        """All 2^n n! signed permutation matrices, identity first"""
        result = []
        for perm in permutations(range(n)):
            for signs in product((1, -1), repeat=n):
                result.append(cls(tuple(tuple(signs[i] if j == perm[i] else 0 for j in range(n)) for i in range(n))))
        return result


def _as_int(x):
    if isinstance(x, bool):
        raise TypeError("boolean entry")
    if isinstance(x, int):
        return x
    if int(x) != x:
        raise ValueError(f"{x!r} is not an integer")
    return int(x)
