"""
C-type domain value types
"""
from dataclasses import dataclass
from math import gcd
from functools import reduce

from modules.vonorm.models import PhiSet


def sym_positions(n):
    """Upper-triangular positions in Gram-entry order (diagonal first)"""
    return tuple((i, i) for i in range(n)) + tuple((i, j) for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class ConeInequality:
    """trace(S C) >= 0 with C = v^T v - u^T u"""
    coeff: tuple
    u: tuple
    v: tuple

    @classmethod
    def from_pair(cls, u, v):
        n = len(u)
        coeff = tuple(v[i] * v[j] - u[i] * u[j] for i, j in sym_positions(n))
        return cls(coeff, tuple(u), tuple(v))

    @property
    def n(self):
        return len(self.u)

    def functional(self):
        """Linear functional on Gram entries (s11, .., s12, ..): off-diagonal terms count twice"""
        return tuple(c if i == j else 2 * c for (i, j), c in zip(sym_positions(self.n), self.coeff))

    def direction(self):
        """Functional divided by its content; equal directions mean positive multiples"""
        f = self.functional()
        g = reduce(gcd, (abs(x) for x in f), 0)
        return tuple(x // g for x in f) if g else f

    def pairing(self, w):
        """trace(C w^T w)"""
        return sum(f * w[i] * w[j] for (i, j), f in zip(sym_positions(self.n), self.functional()))

    def evaluate(self, gram):
        return gram.quad(self.v) - gram.quad(self.u)

    def is_zero(self):
        return not any(self.coeff)


@dataclass(frozen=True)
class CTypeDomain:
    phi: PhiSet
    modulus: int
    facet_inequalities: tuple
    interior: object = None
    neighbors: tuple = ()

    @property
    def n(self):
        return self.phi.n

