"""Naive quantifier-expansion oracles for every axiom.

These loop directly over the definitions: every ordered alternative pair, every
state, every ordered pair of profiles.  They avoid the cached majority matrix
and exist to cross-check the optimized checkers on tiny domains and to replay
witnesses.  Alternatives are indices; choice sets are sets of indices.
"""

from __future__ import annotations

from typing import Iterator, Sequence

from scx.profile import Profile


def _above(order: Sequence[int], a: int, b: int) -> bool:
    return order.index(a) < order.index(b)


def _count(p: Profile, a: int, b: int) -> int:
    return sum(1 for order in p.states if _above(order, a, b))


def _pairs(m: int):
    for a in range(m):
        for b in range(m):
            if a != b:
                yield a, b


def wdc_violations(p: Profile, ch) -> Iterator[tuple[int, int]]:
    for a, b in _pairs(p.m):
        if all(_above(order, a, b) for order in p.states) and b in ch:
            yield a, b


def _top_two(p: Profile, a: int, b: int) -> bool:
    return all(
        _above(order, a, w) and _above(order, b, w)
        for order in p.states
        for w in range(p.m)
        if w not in (a, b)
    )


def mpt_violations(p: Profile, ch) -> Iterator[tuple[int, int]]:
    for a, b in _pairs(p.m):
        if _top_two(p, a, b) and _count(p, a, b) > _count(p, b, a) and set(ch) != {a}:
            yield a, b


def rfp_violations(p: Profile, ch) -> Iterator[tuple[int, int]]:
    for a, b in _pairs(p.m):
        if _top_two(p, a, b) and set(ch) not in ({a}, {b}):
            yield a, b


def naive_winner(p: Profile) -> int | None:
    for a in range(p.m):
        if all(_count(p, a, b) > _count(p, b, a) for b in range(p.m) if b != a):
            return a
    return None


def naive_loser(p: Profile) -> int | None:
    for a in range(p.m):
        if all(_count(p, b, a) > _count(p, a, b) for b in range(p.m) if b != a):
            return a
    return None


def cwp_violations(p: Profile, ch) -> Iterator[tuple[int, int]]:
    w = naive_winner(p)
    if w is None or set(ch) == {w}:
        return
    for c in sorted(ch):
        if c != w:
            yield w, c


def acl_violations(p: Profile, ch) -> Iterator[int]:
    loser = naive_loser(p)
    if loser is not None and loser in ch:
        yield loser


def giia_violations(p: Profile, q: Profile, fp, fq) -> Iterator[tuple[int, int]]:
    for a, b in _pairs(p.m):
        same = all(_above(s, a, b) == _above(t, a, b) for s, t in zip(p.states, q.states))
        if same and a in fp and b not in fp and b in fq:
            yield a, b


def improves(p: Profile, q: Profile, a: int) -> bool:
    """{i | a beats y in p} is a subset of {i | a beats y in q} for every rival y."""
    for y in range(p.m):
        if y == a:
            continue
        before = {i for i, s in enumerate(p.states) if _above(s, a, y)}
        after = {i for i, s in enumerate(q.states) if _above(s, a, y)}
        if not before <= after:
            return False
    return True


def wm_violations(p: Profile, q: Profile, fp, fq) -> Iterator[int]:
    for a in sorted(fp):
        if improves(p, q, a) and a not in fq:
            yield a


def demotion(p: Profile, q: Profile, i: int, y: int) -> bool:
    """q differs from p only in state i, where y drops exactly one rank."""
    if any(s != t for k, (s, t) in enumerate(zip(p.states, q.states)) if k != i):
        return False
    s, t = p.states[i], q.states[i]
    if [c for c in s if c != y] != [c for c in t if c != y]:
        return False
    return t.index(y) == s.index(y) + 1


def dm_violations(p: Profile, q: Profile, fp, fq) -> Iterator[tuple[int, int, int]]:
    for a in sorted(fp):
        if a in fq:
            continue
        for i in range(p.n):
            for y in range(p.m):
                if y != a and demotion(p, q, i, y):
                    yield a, i, y


SINGLE = {
    "wdc": wdc_violations,
    "mpt": mpt_violations,
    "resolute-for-pairs": rfp_violations,
    "condorcet-winner": cwp_violations,
    "anti-condorcet-loser": acl_violations,
}

PAIRED = {
    "giia": giia_violations,
    "weak-monotonicity": wm_violations,
    "down-monotonicity": dm_violations,
}
