"""Profiles with a variable number of states, stored as ranking multiplicities.

A :class:`MultiProfile` keeps each distinct ranking once with the number of
states carrying it.  Columns are kept in lexicographic order of their index
tuples so that equal multi-profiles compare and hash equal.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from scx.errors import DomainError, InputError
from scx.profile import AlternativeSet, Profile, Ranking, natural_key


@dataclass(frozen=True)
class MultiProfile:
    alts: AlternativeSet
    columns: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        m = self.alts.m
        cols = []
        for order, k in self.columns:
            order = tuple(order)
            if sorted(order) != list(range(m)):
                raise InputError(f"column {order} is not a permutation of {m} alternatives")
            if not isinstance(k, int) or k < 1:
                raise InputError(f"multiplicities must be positive integers, got {k!r}")
            cols.append((order, k))
        if len({order for order, _ in cols}) != len(cols):
            raise InputError("multi-profile columns must be pairwise distinct")
        if sum(k for _, k in cols) < 2:
            raise InputError("a multi-profile needs at least 2 states in total")
        object.__setattr__(self, "columns", tuple(sorted(cols)))

    @classmethod
    def from_labels(cls, columns: Sequence[tuple[Sequence[str], int]], alts=None) -> MultiProfile:
        if alts is None:
            alts = AlternativeSet(tuple(sorted(columns[0][0], key=natural_key)))
        elif not isinstance(alts, AlternativeSet):
            alts = AlternativeSet(tuple(alts))
        return cls(alts, tuple((tuple(alts.index(x) for x in col), k) for col, k in columns))

    @property
    def K(self) -> int:
        return len(self.columns)

    @property
    def n(self) -> int:
        return sum(k for _, k in self.columns)

    @property
    def m(self) -> int:
        return self.alts.m

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(k for _, k in self.columns)

    def rankings(self) -> list[Ranking]:
        return [Ranking(self.alts, order) for order, _ in self.columns]

    def majority(self) -> list[list[int]]:
        """Multiplicity-weighted pairwise counts."""
        m = self.m
        counts = [[0] * m for _ in range(m)]
        for order, k in self.columns:
            for i, a in enumerate(order):
                for b in order[i + 1:]:
                    counts[a][b] += k
        return counts


def convert(p: Profile) -> MultiProfile:
    counts = Counter(p.states)
    return MultiProfile(p.alts, tuple(counts.items()))


def expand(mp: MultiProfile) -> Profile:
    states = tuple(order for order, k in mp.columns for _ in range(k))
    return Profile(mp.alts, states)


def replicate(mp: MultiProfile, k: int) -> MultiProfile:
    if k < 1:
        raise InputError("replication factor must be >= 1")
    return MultiProfile(mp.alts, tuple((order, c * k) for order, c in mp.columns))


def fraction_map(mp: MultiProfile) -> dict[Ranking, Fraction]:
    """Share of states carrying each ranking, as exact fractions."""
    n = mp.n
    return {Ranking(mp.alts, order): Fraction(k, n) for order, k in mp.columns}


def _as_multi(x: MultiProfile | Profile) -> MultiProfile:
    return convert(x) if isinstance(x, Profile) else x


def anonymous_equal(a: MultiProfile | Profile, b: MultiProfile | Profile) -> bool:
    a, b = _as_multi(a), _as_multi(b)
    if a.alts != b.alts:
        raise InputError("anonymity is only defined over a common alternative set")
    return fraction_map(a) == fraction_map(b)


def strict_condorcet_variable(mp: MultiProfile | Profile) -> frozenset[str]:
    mp = _as_multi(mp)
    maj = mp.majority()
    for a in range(mp.m):
        if all(maj[a][b] > maj[b][a] for b in range(mp.m) if b != a):
            return frozenset({mp.alts.names[a]})
    raise DomainError("multi-profile has no strict Condorcet winner")

