import itertools
import math

import pytest
from hypothesis import given, settings

from conftest import columns_profile
from strategies import profiles
from oracles import all_columns, pareto_undominated, strict_loser, strict_winner
from scx.errors import InputError, ResourceLimitError
from scx.profile import (
    AlternativeSet,
    Domain,
    Profile,
    Ranking,
    enumerate_profiles,
    in_domain,
    majority_count,
    pareto_undominated_set,
    rank_of,
    strict_condorcet_loser,
    strict_condorcet_winner,
    weak_condorcet_winners,
)
from scx.theorems import prop2_profiles


def test_rank_of_top_and_bottom():
    r = Ranking.from_labels(AlternativeSet(("x", "y", "z")), "xyz")
    assert rank_of(r, "x") == 1
    assert rank_of(r, "z") == 3


def test_rank_of_example5_state3(ex5):
    assert rank_of(ex5.ranking(3), "x") == 4


def test_rank_of_unknown_alternative():
    r = Ranking.from_labels(AlternativeSet(("x", "y", "z")), "xyz")
    with pytest.raises(InputError):
        rank_of(r, "q")


def test_ranking_must_be_permutation():
    with pytest.raises(InputError):
        Ranking(AlternativeSet(("x", "y", "z")), (0, 0, 1))


def test_alternative_labels_validated():
    with pytest.raises(InputError):
        AlternativeSet(("x", "x", "y"))
    with pytest.raises(InputError):
        AlternativeSet(("x", "a b", "y"))


def test_profile_needs_two_states():
    with pytest.raises(InputError):
        columns_profile("xyz")


def test_majority_count_examples(ex2, ex3):
    r1, _ = ex2
    assert majority_count(r1, "x2", "x1") == 3
    assert majority_count(ex3[0], "x", "w") == 2
    assert ex3[0].n == 4


def test_majority_count_same_alternative(unanimous):
    with pytest.raises(InputError):
        majority_count(unanimous, "x", "x")


def test_strict_winner_examples(ex2, unanimous, cycle):
    assert strict_condorcet_winner(ex2[0]) == "x2"
    assert strict_condorcet_winner(ex2[1]) == "x2"
    assert strict_condorcet_winner(unanimous) == "x"
    assert strict_condorcet_winner(cycle) is None


def test_weak_winners_examples(ex3):
    r, rp = ex3
    assert weak_condorcet_winners(r) == {"x"}
    assert weak_condorcet_winners(rp) == {"x", "w"}
    p1, p2 = prop2_profiles()
    assert weak_condorcet_winners(p1) == {"x"}
    assert weak_condorcet_winners(p2) == {"y"}


def test_strict_loser_examples(ex5, unanimous, cycle):
    assert strict_condorcet_loser(ex5) == "x"
    assert strict_condorcet_loser(unanimous) == "z"
    assert strict_condorcet_loser(cycle) is None


def test_pareto_examples(unanimous, cycle, ex6):
    assert pareto_undominated_set(unanimous) == {"x"}
    assert pareto_undominated_set(cycle) == {"x", "y", "z"}
    expected = pareto_undominated(ex6.columns())
    assert pareto_undominated_set(ex6) == expected
    assert "x" in expected


def test_enumeration_counts():
    assert sum(1 for _ in enumerate_profiles(3, 2)) == 36
    assert sum(1 for _ in enumerate_profiles(3, 3)) == 216


def test_enumeration_strict_condorcet_count_matches_brute_force():
    expected = sum(1 for cols in all_columns("xyz", 2) if strict_winner(cols) is not None)
    assert expected == 12
    assert sum(1 for _ in enumerate_profiles(3, 2, Domain.STRICT_CONDORCET)) == expected


def test_enumeration_order_and_distinctness():
    perms = list(itertools.permutations(range(3)))
    got = [p.states for p in enumerate_profiles(3, 2)]
    assert got == [(a, b) for a in perms for b in perms]
    assert len(set(got)) == math.factorial(3) ** 2
    assert got == [p.states for p in enumerate_profiles(3, 2)]


def test_enumeration_resource_guard():
    with pytest.raises(ResourceLimitError):
        next(enumerate_profiles(5, 7))
    with pytest.raises(ResourceLimitError):
        next(enumerate_profiles(3, 3, limit=100))


def test_enumeration_allows_two_alternatives():
    assert sum(1 for _ in enumerate_profiles(2, 3)) == 8


def test_in_domain_examples(ex2, cycle):
    assert in_domain(ex2[0], Domain.STRICT_CONDORCET)
    assert not in_domain(cycle, Domain.STRICT_CONDORCET)
    assert in_domain(prop2_profiles()[0], Domain.UNIQUE_WEAK_CONDORCET)


def test_strict_winner_matches_brute_force_exhaustively():
    for n in (2, 3, 4):
        for p in enumerate_profiles(3, n):
            cols = p.columns()
            assert strict_condorcet_winner(p) == strict_winner(cols)
            assert strict_condorcet_loser(p) == strict_loser(cols)


def test_majority_first_places_imply_strict_domain():
    # More than n/2 first places forces a strict winner.
    for n in (2, 3, 4):
        for p in enumerate_profiles(3, n):
            if 2 * max(p.first_counts) > n:
                assert in_domain(p, Domain.STRICT_CONDORCET)


def test_domain_lattice():
    assert Domain.FULL.includes(Domain.UNIQUE_PLURALITY)
    assert Domain.WEAK_CONDORCET.includes(Domain.STRICT_CONDORCET)
    assert Domain.UNIQUE_WEAK_CONDORCET.includes(Domain.STRICT_CONDORCET)
    assert not Domain.STRICT_CONDORCET.includes(Domain.FULL)
    for n in (2, 3, 4):
        for p in enumerate_profiles(3, n, Domain.STRICT_CONDORCET):
            assert in_domain(p, Domain.UNIQUE_WEAK_CONDORCET)


def test_from_rows_matches_matrix_view(ex5):
    assert ex5.columns()[2] == ["y", "z", "w", "x"]
    assert ex5.alts.names == ("x", "y", "z", "w")


@settings(max_examples=200)
@given(profiles())
def test_majority_antisymmetry(p):
    for x, y in itertools.permutations(p.alts.names, 2):
        assert majority_count(p, x, y) + majority_count(p, y, x) == p.n


@settings(max_examples=200)
@given(profiles())
def test_strict_winner_is_weak_winner_and_undominated(p):
    w = strict_condorcet_winner(p)
    if w is not None:
        assert weak_condorcet_winners(p) == {w}
        assert w in pareto_undominated_set(p)


@given(profiles())
def test_ranks_form_permutations(p):
    for r in p.rankings:
        assert sorted(rank_of(r, x) for x in p.alts) == list(range(1, p.m + 1))
