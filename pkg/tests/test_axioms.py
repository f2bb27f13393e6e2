import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import columns_profile
from scx import axioms, corpus
from scx.axioms import (
    AXIOMS,
    CfTable,
    Mode,
    check,
    check_anti_condorcet_loser,
    check_condorcet_winner_property,
    check_down_monotonicity,
    check_giia,
    check_mpt,
    check_resolute_for_pairs,
    check_wdc,
    check_weak_monotonicity,
    giia_buckets,
    naive_check,
    replay,
)
from scx.errors import DomainError, InputError, ResourceLimitError
from scx.profile import Domain, enumerate_profiles
from scx.rules import catalog_rules, get_rule

LAST = get_rule("last-of-state-one")
SSDR1 = get_rule("s-sdr:1")
SC = get_rule("strict-condorcet")
FS = get_rule("first-somewhere")


def test_wdc_examples():
    assert check_wdc(SSDR1, 3, 2).passed
    rep = check_wdc(LAST, 3, 2)
    assert rep.verdict == "fail"
    w = rep.witness
    assert w.profiles[0] == columns_profile("xyz", "xyz")
    assert w.choices[0] == {"z"}
    assert w.pair[1] == "z"
    assert check_wdc(SC, 3, 3, Domain.STRICT_CONDORCET).passed


def test_giia_examples(ex2, ex3):
    rep = check_giia(get_rule("plurality-least-index"), profiles=list(ex2))
    assert rep.verdict == "fail"
    assert rep.witness.profiles == ex2
    assert rep.witness.pair == ("x1", "x2")
    rep = check_giia(get_rule("weak-condorcet"), profiles=list(ex3))
    assert rep.witness.pair == ("x", "w")
    assert check_giia(LAST, 3, 2).passed


def test_mpt_examples():
    assert check_mpt(SC, 3, 3, Domain.STRICT_CONDORCET).passed
    for rule in (LAST, SSDR1):
        rep = check_mpt(rule, 3, 3)
        assert rep.verdict == "fail"
        p = rep.witness.profiles[0]
        x, y = rep.witness.pair
        for r in p.rankings:
            assert set(r.labels[:2]) == {x, y}
        assert rep.witness.choices[0] != {x}


def test_monotonicity_examples():
    for rule in (SSDR1, FS):
        assert check_weak_monotonicity(rule, 3, 2).passed
        assert check_down_monotonicity(rule, 3, 2).passed
    assert check_weak_monotonicity(LAST, 3, 2).verdict == "fail"
    assert check_down_monotonicity(LAST, 3, 2).verdict == "fail"


def test_down_monotonicity_witness_shape():
    w = check_down_monotonicity(LAST, 3, 2).witness
    p, q = w.profiles
    x, y = w.pair
    i = w.state
    assert w.alternative == x
    assert x in w.choices[0] and x not in w.choices[1]
    diff = [k for k in range(p.n) if p.states[k] != q.states[k]]
    assert diff == [i - 1]
    assert p.ranking(i).ranks[p.alts.index(y)] + 1 == q.ranking(i).ranks[q.alts.index(y)]


def test_resolute_for_pairs_examples():
    pairs, _, _ = corpus.note_profiles()
    rep = check_resolute_for_pairs(FS, profiles=[pairs])
    assert rep.verdict == "fail"
    assert rep.witness.choices[0] == {"x", "y"}
    assert check_resolute_for_pairs(get_rule("s-sdr:2"), 3, 3).passed


def test_condorcet_winner_property_examples(ex5, ex6):
    rep = check_condorcet_winner_property(get_rule("borda"), profiles=[ex6])
    assert rep.verdict == "fail"
    assert rep.witness.choices[0] == {"y"}
    assert rep.witness.pair == ("x", "y")
    assert check_condorcet_winner_property(get_rule("plurality"), profiles=[ex5]).verdict == "fail"
    assert check_condorcet_winner_property(SC, 3, 3, Domain.STRICT_CONDORCET).passed


def test_anti_condorcet_loser_examples(ex5):
    rep = check_anti_condorcet_loser(get_rule("plurality"), profiles=[ex5])
    assert rep.verdict == "fail"
    assert rep.witness.alternative == "x"
    assert check_anti_condorcet_loser(SC, 3, 3, Domain.STRICT_CONDORCET).passed


def test_borda_never_picks_loser_random():
    rep = check_anti_condorcet_loser(get_rule("borda"), 3, 5, mode=Mode.random(1, 10**5))
    assert rep.passed
    assert rep.profiles_checked == 10**5


def test_oracle_equivalence_m3_n2():
    for rule in catalog_rules(2):
        space = list(enumerate_profiles(3, 2, rule.domain))
        for axiom in AXIOMS:
            rep = check(axiom, rule, 3, 2, rule.domain)
            expected = naive_check(axiom, rule, space)
            assert rep.witness == expected, (rule.name, axiom)
            if expected is not None:
                assert replay(axiom, rule, rep.witness)


def test_random_tables_match_oracle():
    space = list(enumerate_profiles(3, 2))
    rng = random.Random(42)
    for k in range(30):
        table = CfTable.random(space, rng, resolute=k % 2 == 1)
        for axiom in AXIOMS:
            assert check(axiom, table, profiles=space).witness == naive_check(axiom, table, space)


def test_giia_bucketing_invariant():
    space = list(enumerate_profiles(3, 2))
    for a, b in itertools.combinations(range(3), 2):
        where = {}
        for key, members in giia_buckets(space, a, b).items():
            for k in members:
                where[k] = key
        assert len(where) == len(space)
        for i, j in itertools.combinations(range(len(space)), 2):
            p, q = space[i], space[j]
            same = all((r.ranks[a] < r.ranks[b]) == (s.ranks[a] < s.ranks[b])
                       for r, s in zip(p.rankings, q.rankings))
            assert same == (where[i] == where[j])


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from(AXIOMS), st.sampled_from(["plurality", "borda", "last-of-state-one"]))
def test_random_mode_reproducible_and_sound(seed, axiom, name):
    rule = get_rule(name)
    mode = Mode.random(seed, 300)
    a = check(axiom, rule, 3, 4, mode=mode)
    b = check(axiom, rule, 3, 4, mode=mode)
    assert a == b
    if a.witness is not None:
        assert replay(axiom, rule, a.witness)
        assert a.witness.choices == b.witness.choices


def test_search_finds_plurality_giia_violation():
    w = axioms.search(get_rule("plurality"), "giia", 3, 7, Domain.UNIQUE_PLURALITY, seed=5, budget=10**4)
    assert w is not None
    assert replay("giia", get_rule("plurality"), w)


def test_exhaustive_failures_replay():
    for rule in catalog_rules(3):
        for axiom in AXIOMS:
            rep = check(axiom, rule, 3, 3, rule.domain)
            if not rep.passed:
                assert replay(axiom, rule, rep.witness), (rule.name, axiom)


def test_domain_mismatch_raises():
    with pytest.raises(InputError):
        check_giia(SC, 3, 2, Domain.FULL)
    cycle = columns_profile("xyz", "yzx", "zxy")
    with pytest.raises(InputError):
        check_giia(SC, profiles=[cycle])
    with pytest.raises(InputError):
        check("transitivity", SC, 3, 2)


def test_mixed_explicit_domain_rejected(ex2, ex5):
    with pytest.raises(InputError):
        check_wdc(get_rule("plurality"), profiles=[ex2[0], ex5])


def test_resource_ceiling():
    with pytest.raises(ResourceLimitError):
        check_giia(SSDR1, 5, 7)
    with pytest.raises(ResourceLimitError):
        check_down_monotonicity(SSDR1, 3, 3, limit=1000)


def test_table_missing_profile():
    t = CfTable.from_rule(SSDR1, [columns_profile("xyz", "xyz")])
    with pytest.raises(DomainError):
        t(columns_profile("xyz", "zyx"))
