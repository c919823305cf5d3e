"""
Vonorm value types: coset classes, vonorm tables and Voronoi vector sets
"""
from dataclasses import dataclass, field
from itertools import product


@dataclass(frozen=True, order=True)
class CosetClass:
    """Nonzero class of Z^n / rZ^n, identified with its negative unless asked otherwise"""
    representative: tuple
    modulus: int
    identified_with_negation: bool = True

    @classmethod
    def of(cls, v, r, identified_with_negation=True):
        u = tuple(x % r for x in v)
        if not any(u):
            raise ValueError(f"{tuple(v)} lies in {r}Z^n")
        if identified_with_negation:
            u = min(u, tuple((-x) % r for x in u))
        return cls(u, r, identified_with_negation)

    @property
    def n(self):
        return len(self.representative)


def coset_classes(n, r):
    """All canonical classes in lexicographic order"""
    seen = set()
    for u in product(range(r), repeat=n):
        if any(u):
            seen.add(CosetClass.of(u, r))
    return sorted(seen)


@dataclass(frozen=True)
class VonormEntry:
    value: object
    witness: tuple


@dataclass(frozen=True)
class VonormTable:
    modulus: int
    n: int
    entries: dict = field(hash=False)

    def __len__(self):
        return len(self.entries)

    def values(self):
        return [entry.value for entry in self.entries.values()]

    def sorted_values(self):
        return sorted(self.values())

    def lookup(self, v):
        return self.entries[CosetClass.of(v, self.modulus)]

    def value_of(self, v):
        """vo(v + rZ^n); zero on the trivial class"""
        if all(x % self.modulus == 0 for x in v):
            return 0
        return self.lookup(v).value


@dataclass(frozen=True)
class PhiSet:
    vectors: frozenset
    modulus: int

    def __post_init__(self):
        vectors = frozenset(tuple(int(x) for x in v) for v in self.vectors)
        for v in vectors:
            if not any(v):
                raise ValueError("Voronoi vector sets never contain 0")
            if tuple(-x for x in v) not in vectors:
                raise ValueError(f"set is not closed under negation: {v}")
        if len({len(v) for v in vectors}) > 1:
            raise ValueError("mixed dimensions in vector set")
        object.__setattr__(self, 'vectors', vectors)

    @classmethod
    def from_pairs(cls, vectors, modulus):
        """Build from one vector per +- pair"""
        full = set()
        for v in vectors:
            v = tuple(v)
            full.add(v)
            full.add(tuple(-x for x in v))
        return cls(frozenset(full), modulus)

    @property
    def n(self):
        return len(next(iter(self.vectors))) if self.vectors else 0

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, v):
        return tuple(v) in self.vectors

    def __iter__(self):
        return iter(self.sorted_vectors())

    def sorted_vectors(self):
        return sorted(self.vectors)

    def positive_halves(self):
        """One vector per +- pair: the one whose first nonzero coordinate is positive"""
        return [v for v in self.sorted_vectors() if next(x for x in v if x) > 0]

    def issubset(self, other):
        return self.vectors <= other.vectors

    def swapped(self, remove, add):
        """Copy with the +- pairs of remove taken out and those of add put in"""
        drop = {tuple(v) for v in remove} | {tuple(-x for x in v) for v in remove}
        put = {tuple(v) for v in add} | {tuple(-x for x in v) for v in add}
        return PhiSet(frozenset((self.vectors - drop) | put), self.modulus)
