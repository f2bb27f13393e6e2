import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import columns_profile
from oracles import strict_winner
from scx.errors import DomainError, InputError
from scx.profile import AlternativeSet, Domain, Profile, Ranking, enumerate_profiles, random_profile
from scx.rules import eval_strict_condorcet
from scx.variable import (
    MultiProfile,
    anonymous_equal,
    convert,
    expand,
    fraction_map,
    replicate,
    strict_condorcet_variable,
)
from strategies import profiles

XYZ = AlternativeSet(("x", "y", "z"))


def _mp(*cols, alts=XYZ):
    return MultiProfile.from_labels([(list(c), k) for c, k in cols], alts)


def _r(labels, alts=XYZ):
    return Ranking.from_labels(alts, labels)


def test_fraction_map_examples(ex2):
    assert fraction_map(_mp(("xyz", 2), ("yxz", 1))) == {_r("xyz"): Fraction(2, 3), _r("yxz"): Fraction(1, 3)}
    a = ex2[0].alts
    got = fraction_map(convert(ex2[0]))
    assert got == {
        _r(["x1", "x2", "x3"], a): Fraction(2, 5),
        _r(["x2", "x3", "x1"], a): Fraction(1, 5),
        _r(["x3", "x2", "x1"], a): Fraction(2, 5),
    }
    assert fraction_map(replicate(convert(ex2[0]), 3)) == got


def test_anonymous_equal_examples(ex2):
    mp = _mp(("xyz", 2), ("yxz", 1))
    assert anonymous_equal(mp, replicate(mp, 2))
    assert not anonymous_equal(_mp(("xyz", 2)), _mp(("yxz", 2)))
    assert not anonymous_equal(convert(ex2[0]), convert(ex2[1]))


def test_anonymous_equal_alternative_mismatch(ex2, unanimous):
    with pytest.raises(InputError):
        anonymous_equal(ex2[0], unanimous)


def test_strict_condorcet_variable_examples(ex2, ex6):
    assert strict_condorcet_variable(convert(ex2[0])) == {"x2"}
    assert strict_condorcet_variable(_mp(("xyz", 3), ("zyx", 2))) == {"x"}
    assert strict_condorcet_variable(replicate(convert(ex6), 3)) == {"x"}
    with pytest.raises(DomainError):
        strict_condorcet_variable(_mp(("xyz", 1), ("yzx", 1), ("zxy", 1)))


def test_convert_and_expand(ex2):
    mp = convert(ex2[0])
    assert mp.K == 3 and mp.n == 5
    assert sorted(mp.multiplicities) == [1, 2, 2]
    by_top = {r.labels[0]: k for r, (_, k) in zip(mp.rankings(), mp.columns)}
    assert by_top == {"x1": 2, "x2": 1, "x3": 2}
    e = expand(_mp(("xyz", 2)))
    assert e.n == 2 and e.states[0] == e.states[1]


def test_multiprofile_validation():
    with pytest.raises(InputError):
        _mp(("xyz", 1))
    with pytest.raises(InputError):
        _mp(("xyz", 0), ("yxz", 2))
    with pytest.raises(InputError):
        MultiProfile(XYZ, (((0, 1, 2), 1), ((0, 1, 2), 1)))


@settings(max_examples=200)
@given(profiles())
def test_round_trip_preserves_majority(p):
    mp = convert(p)
    assert mp.majority() == [list(row) for row in p.majority]
    back = expand(mp)
    assert anonymous_equal(back, p)
    assert back.majority == p.majority
    assert mp.K <= mp.n and mp.K <= len(set(p.states))


@settings(max_examples=200)
@given(profiles(), st.integers(1, 5))
def test_replication_invariance(p, k):
    w = strict_winner(p.columns())
    mp = replicate(convert(p), k)
    assert anonymous_equal(mp, p)
    if w is None:
        with pytest.raises(DomainError):
            strict_condorcet_variable(mp)
    else:
        assert strict_condorcet_variable(mp) == {w}


def test_matches_fixed_n_rule_exhaustively():
    for n in (2, 3, 4):
        for p in enumerate_profiles(3, n, Domain.STRICT_CONDORCET):
            assert strict_condorcet_variable(convert(p)) == eval_strict_condorcet(p)


def test_anonymity_across_state_permutations():
    rng = random.Random(4)
    for _ in range(500):
        p = random_profile(rng, 3, rng.choice((3, 5, 7)))
        states = list(p.states)
        rng.shuffle(states)
        q = Profile(p.alts, tuple(states))
        assert anonymous_equal(p, q)
        if strict_winner(p.columns()):
            assert strict_condorcet_variable(p) == strict_condorcet_variable(q)


def test_distinct_column_bound():
    p = columns_profile(*["xyz", "xzy", "yxz", "yzx", "zxy", "zyx"] * 2)
    mp = convert(p)
    assert mp.K == 6 and mp.n == 12
