"""Alternatives, strict rankings, state-dependent profiles and pairwise majorities.

A profile is stored as one order tuple per state: ``states[i][r]`` is the index
of the alternative ranked ``r + 1`` in state ``i + 1``.  Alternatives are
addressed by label in the public functions and by their index in the declared
``AlternativeSet`` order internally; that order also breaks ties wherever a
rule needs a deterministic pick.
"""

from __future__ import annotations

import enum
import itertools
import math
import random
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

from scx.errors import InputError, ResourceLimitError

DEFAULT_NAMES = ("x", "y", "z", "w", "v")
DEFAULT_VISIT_LIMIT = 10**7


def default_names(m: int) -> tuple[str, ...]:
    if m <= len(DEFAULT_NAMES):
        return DEFAULT_NAMES[:m]
    return tuple(f"a{i + 1}" for i in range(m))


def natural_key(label: str):
    return [int(tok) if tok.isdigit() else tok for tok in re.split(r"(\d+)", label)]


@dataclass(frozen=True)
class AlternativeSet:
    names: tuple[str, ...]

    def __post_init__(self):
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) < 2:
            raise InputError("an alternative set needs at least two alternatives")
        if len(set(names)) != len(names):
            raise InputError(f"duplicate alternative labels in {names}")
        for name in names:
            if not isinstance(name, str) or not name or any(c.isspace() for c in name):
                raise InputError(f"invalid alternative label {name!r}")

    @classmethod
    def default(cls, m: int) -> AlternativeSet:
        return cls(default_names(m))

    @property
    def m(self) -> int:
        return len(self.names)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.names)}

    def index(self, x: str | int) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            if 0 <= x < len(self.names):
                return x
            raise InputError(f"alternative index {x} out of range")
        try:
            return self._index[x]
        except KeyError:
            raise InputError(f"unknown alternative {x!r}; expected one of {' '.join(self.names)}") from None

    def ordered(self, labels) -> list[str]:
        """Return ``labels`` sorted by declared order."""
        return sorted(labels, key=self.index)

    def __iter__(self):
        return iter(self.names)

    def __len__(self):
        return len(self.names)


def _check_order(order: Sequence[int], m: int) -> tuple[int, ...]:
    order = tuple(order)
    if sorted(order) != list(range(m)):
        raise InputError(f"ranking {order} is not a permutation of {m} alternatives")
    return order


@dataclass(frozen=True)
class Ranking:
    """A strict ranking; ``order[0]`` is the most preferred alternative index."""

    alts: AlternativeSet
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", _check_order(self.order, self.alts.m))

    @classmethod
    def from_labels(cls, alts: AlternativeSet, labels: Sequence[str]) -> Ranking:
        return cls(alts, tuple(alts.index(x) for x in labels))

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        ranks = [0] * len(self.order)
        for pos, a in enumerate(self.order):
            ranks[a] = pos + 1
        return tuple(ranks)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.alts.names[a] for a in self.order)

    def prefers(self, x, y) -> bool:
        return self.ranks[self.alts.index(x)] < self.ranks[self.alts.index(y)]

    def __str__(self):
        return ">".join(self.labels)


def rank_of(r: Ranking, x: str | int) -> int:
    """1-based rank of ``x`` in ``r``; rank 1 is the top."""
    return r.ranks[r.alts.index(x)]


@dataclass(frozen=True)
class Profile:
    """Preference profile: one strict ranking per state of nature (n >= 2)."""

    alts: AlternativeSet
    states: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        states = tuple(_check_order(s, self.alts.m) for s in self.states)
        if len(states) < 2:
            raise InputError(f"a profile needs at least 2 states, got {len(states)}")
        object.__setattr__(self, "states", states)

    @classmethod
    def trusted(cls, alts: AlternativeSet, states: tuple[tuple[int, ...], ...]) -> Profile:
        # Skips validation; callers guarantee permutations and n >= 2.
        p = object.__new__(cls)
        object.__setattr__(p, "alts", alts)
        object.__setattr__(p, "states", states)
        return p

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[str]], alts: AlternativeSet | Sequence[str] | None = None) -> Profile:
        """Build a profile from per-state label lists, most preferred first.

        Without ``alts`` the declared order is the natural sort of the labels.
        """
        columns = [list(c) for c in columns]
        if not columns:
            raise InputError("a profile needs at least 2 states, got 0")
        if alts is None:
            alts = AlternativeSet(tuple(sorted(columns[0], key=natural_key)))
        elif not isinstance(alts, AlternativeSet):
            alts = AlternativeSet(tuple(alts))
        states = []
        for col in columns:
            if len(col) != alts.m:
                raise InputError(f"state {col} does not rank all {alts.m} alternatives")
            states.append(tuple(alts.index(x) for x in col))
        return cls(alts, tuple(states))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[str]], alts=None) -> Profile:
        """Build from the matrix view: row r holds the rank-(r+1) alternative of each state."""
        return cls.from_columns([list(col) for col in zip(*rows)], alts)

    @property
    def m(self) -> int:
        return self.alts.m

    @property
    def n(self) -> int:
        return len(self.states)

    def ranking(self, i: int) -> Ranking:
        """Ranking of 1-based state ``i``."""
        if not 1 <= i <= self.n:
            raise InputError(f"state index {i} out of range 1..{self.n}")
        return Ranking(self.alts, self.states[i - 1])

    @property
    def rankings(self) -> list[Ranking]:
        return [Ranking(self.alts, s) for s in self.states]

    @cached_property
    def ranks(self) -> tuple[tuple[int, ...], ...]:
        """``ranks[i][a]`` is the 1-based rank of alternative ``a`` in state ``i``."""
        out = []
        for order in self.states:
            r = [0] * len(order)
            for pos, a in enumerate(order):
                r[a] = pos + 1
            out.append(tuple(r))
        return tuple(out)

    @cached_property
    def majority(self) -> tuple[tuple[int, ...], ...]:
        """``majority[a][b]`` counts states ranking ``a`` above ``b``."""
        m = self.m
        counts = [[0] * m for _ in range(m)]
        for r in self.ranks:
            for a in range(m):
                ra = r[a]
                row = counts[a]
                for b in range(m):
                    if ra < r[b]:
                        row[b] += 1
        return tuple(tuple(row) for row in counts)

    @cached_property
    def first_counts(self) -> tuple[int, ...]:
        counts = [0] * self.m
        for order in self.states:
            counts[order[0]] += 1
        return tuple(counts)

    def columns(self) -> list[list[str]]:
        names = self.alts.names
        return [[names[a] for a in order] for order in self.states]

    def label(self, a: int) -> str:
        return self.alts.names[a]

    def labels(self, indices) -> frozenset[str]:
        return frozenset(self.alts.names[a] for a in indices)

    def __str__(self):
        cols = self.columns()
        width = max(len(x) for x in self.alts.names)
        return "\n".join(" ".join(c[r].ljust(width) for c in cols).rstrip() for r in range(self.m))


def majority_count(p: Profile, x, y) -> int:
    """Number of states in which ``x`` is ranked above ``y``."""
    a, b = p.alts.index(x), p.alts.index(y)
    if a == b:
        raise InputError("majority_count needs two distinct alternatives")
    return p.majority[a][b]


def strict_condorcet_winner_index(p: Profile) -> int | None:
    maj = p.majority
    for a in range(p.m):
        row = maj[a]
        if all(row[b] > maj[b][a] for b in range(p.m) if b != a):
            return a
    return None


def strict_condorcet_loser_index(p: Profile) -> int | None:
    maj = p.majority
    for a in range(p.m):
        if all(maj[b][a] > maj[a][b] for b in range(p.m) if b != a):
            return a
    return None


def weak_condorcet_winner_indices(p: Profile) -> list[int]:
    maj, n = p.majority, p.n
    return [a for a in range(p.m) if all(2 * maj[a][b] >= n for b in range(p.m) if b != a)]


def plurality_winner_indices(p: Profile) -> list[int]:
    counts = p.first_counts
    top = max(counts)
    return [a for a, c in enumerate(counts) if c == top]


def strict_condorcet_winner(p: Profile) -> str | None:
    a = strict_condorcet_winner_index(p)
    return None if a is None else p.label(a)


def strict_condorcet_loser(p: Profile) -> str | None:
    a = strict_condorcet_loser_index(p)
    return None if a is None else p.label(a)


def weak_condorcet_winners(p: Profile) -> frozenset[str]:
    return p.labels(weak_condorcet_winner_indices(p))


def pareto_undominated_set(p: Profile) -> frozenset[str]:
    """Alternatives that no rival beats in every state."""
    maj, n = p.majority, p.n
    return p.labels(b for b in range(p.m) if not any(maj[a][b] == n for a in range(p.m) if a != b))


class Domain(str, enum.Enum):
    FULL = "full"
    STRICT_CONDORCET = "strict-condorcet"
    WEAK_CONDORCET = "weak-condorcet"
    UNIQUE_WEAK_CONDORCET = "unique-weak-condorcet"
    UNIQUE_PLURALITY = "unique-plurality"

    def includes(self, other: Domain) -> bool:
        """Whether every profile of ``other`` is a member of this domain."""
        return other in _CONTAINS[self]

    @classmethod
    def parse(cls, name: str | Domain) -> Domain:
        try:
            return cls(name)
        except ValueError:
            valid = ", ".join(d.value for d in cls)
            raise InputError(f"unknown domain {name!r}; valid domains: {valid}") from None


# A strict winner is the unique weak winner, so the strict domain nests inside both weak ones.
_CONTAINS = {
    Domain.FULL: frozenset(Domain),
    Domain.WEAK_CONDORCET: frozenset({Domain.WEAK_CONDORCET, Domain.UNIQUE_WEAK_CONDORCET, Domain.STRICT_CONDORCET}),
    Domain.UNIQUE_WEAK_CONDORCET: frozenset({Domain.UNIQUE_WEAK_CONDORCET, Domain.STRICT_CONDORCET}),
    Domain.STRICT_CONDORCET: frozenset({Domain.STRICT_CONDORCET}),
    Domain.UNIQUE_PLURALITY: frozenset({Domain.UNIQUE_PLURALITY}),
}


def in_domain(p: Profile, d: Domain) -> bool:
    d = Domain.parse(d)
    if d is Domain.FULL:
        return True
    if d is Domain.STRICT_CONDORCET:
        return strict_condorcet_winner_index(p) is not None
    if d is Domain.WEAK_CONDORCET:
        return bool(weak_condorcet_winner_indices(p))
    if d is Domain.UNIQUE_WEAK_CONDORCET:
        return len(weak_condorcet_winner_indices(p)) == 1
    return len(plurality_winner_indices(p)) == 1


def profile_space_size(m: int, n: int) -> int:
    return math.factorial(m) ** n


def enumerate_profiles(
    m: int,
    n: int,
    domain: Domain = Domain.FULL,
    *,
    alts: AlternativeSet | None = None,
    limit: int | None = DEFAULT_VISIT_LIMIT,
) -> Iterator[Profile]:
    """Yield every profile of the domain once.

    State 1 varies slowest; each state runs through the permutations in
    lexicographic order of their index tuples.
    """
    if m < 2 or n < 2:
        raise InputError(f"need m >= 2 and n >= 2, got m={m}, n={n}")
    domain = Domain.parse(domain)
    size = profile_space_size(m, n)
    if limit is not None and size > limit:
        raise ResourceLimitError(f"(m!)^n = {size} profiles exceeds the visit ceiling {limit}")
    alts = alts or AlternativeSet.default(m)
    if alts.m != m:
        raise InputError(f"alternative set has {alts.m} members, expected {m}")
    perms = list(itertools.permutations(range(m)))
    for states in itertools.product(perms, repeat=n):
        p = Profile.trusted(alts, states)
        if domain is Domain.FULL or in_domain(p, domain):
            yield p


def random_profile(rng: random.Random, m: int, n: int, alts: AlternativeSet | None = None) -> Profile:
    alts = alts or AlternativeSet.default(m)
    base = range(m)
    return Profile.trusted(alts, tuple(tuple(rng.sample(base, m)) for _ in range(n)))


def sample_profile(
    rng: random.Random, m: int, n: int, domain: Domain = Domain.FULL, alts=None, max_tries: int = 10_000
) -> Profile:
    """Uniform draw from the domain by rejection."""
    for _ in range(max_tries):
        p = random_profile(rng, m, n, alts)
        if in_domain(p, domain):
            return p
    raise ResourceLimitError(f"no {Domain.parse(domain).value} profile found in {max_tries} draws")


def replicate(p: Profile, k: int) -> Profile:
    """The k-fold replication: the state list repeated ``k`` times."""
    if k < 1:
        raise InputError("replication factor must be >= 1")
    return Profile.trusted(p.alts, p.states * k)


def restriction(order: Sequence[int], a: int, b: int) -> bool:
    """True when ``a`` precedes ``b`` in ``order``."""
    return order.index(a) < order.index(b)
