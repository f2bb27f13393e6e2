"""Executable, desk-scale verification of the characterization results.

Every procedure here works on finite enumerated domains and returns a
:class:`ClaimReport`.  Nothing is proved for all n; the reports certify the
claims at the (m, n) they were run with.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from scx import axioms
from scx.axioms import CfTable, Witness
from scx.errors import ClaimFailure, InputError
from scx.profile import (
    Domain,
    Profile,
    enumerate_profiles,
    random_profile,
    strict_condorcet_loser_index,
    strict_condorcet_winner_index,
    weak_condorcet_winner_indices,
)
from scx.rules import borda_index_scores, catalog_rules, get_rule, s_sdr


@dataclass
class ClaimReport:
    claim: str
    passed: bool
    counts: dict = field(default_factory=dict)
    witness: Witness | None = None
    details: list[str] = field(default_factory=list)

    def summary(self) -> str:
        counts = ", ".join(f"{k}={v}" for k, v in self.counts.items())
        return f"{'PASS' if self.passed else 'FAIL'} {self.claim}" + (f" ({counts})" if counts else "")


def _sub_seed(seed: int, k: int) -> int:
    return seed * 1_000_003 + k


# --------------------------------------------------------------- Theorem 2


def build_companion_profile(p: Profile, x, y) -> Profile:
    """Lift x and y to ranks 1 and 2 in every state, keeping every other relative order."""
    a, b = p.alts.index(x), p.alts.index(y)
    if a == b:
        raise InputError("companion profile needs two distinct alternatives")
    if p.m < 3:
        raise InputError("companion profile needs at least 3 alternatives")
    states = []
    for order in p.states:
        lead = [c for c in order if c in (a, b)]
        rest = [c for c in order if c not in (a, b)]
        states.append(tuple(lead + rest))
    return Profile.trusted(p.alts, tuple(states))


@dataclass
class PropagationState:
    candidates: dict[Profile, set[int]]
    pinned: int = 0
    mpt_pins: int = 0
    giia_exclusions: int = 0
    mismatches: list[Profile] = field(default_factory=list)

    @property
    def all_pinned(self) -> bool:
        return self.pinned == len(self.candidates) and not self.mismatches


def propagate_theorem2(m: int, n: int) -> PropagationState:
    """Run the forced MPT pins and GIIA exclusions over the strict-Condorcet domain.

    Every profile starts with all alternatives as candidates.  For a profile
    with winner x and each rival y the companion profile is pinned to {x} by
    MPT, and GIIA then removes y from the profile's candidates.
    """
    domain = list(enumerate_profiles(m, n, Domain.STRICT_CONDORCET))
    cands = {p: set(range(m)) for p in domain}
    state = PropagationState(cands)
    for p in domain:
        x = strict_condorcet_winner_index(p)
        for y in range(m):
            if y == x:
                continue
            c = build_companion_profile(p, x, y)
            if c not in cands:
                raise ClaimFailure(f"companion profile left the strict Condorcet domain:\n{c}")
            # MPT hypothesis on the companion: x, y on top everywhere and x has the strict majority.
            if not (axioms.top_pair(c) == tuple(sorted((x, y))) and c.majority[x][y] > c.majority[y][x]):
                raise ClaimFailure(f"MPT does not apply to the companion profile:\n{c}")
            if cands[c] != {x}:
                cands[c] &= {x}
                state.mpt_pins += 1
                if not cands[c]:
                    raise ClaimFailure(f"inconsistent pins on\n{c}")
            if y in cands[p]:
                cands[p].discard(y)
                state.giia_exclusions += 1
            if not cands[p]:
                raise ClaimFailure(f"every alternative excluded on\n{p}")
    for p, cs in cands.items():
        if len(cs) == 1:
            state.pinned += 1
            if cs != {strict_condorcet_winner_index(p)}:
                state.mismatches.append(p)
        else:
            state.mismatches.append(p)
    return state


def verify_theorem2_uniqueness(m: int, n: int) -> ClaimReport:
    st = propagate_theorem2(m, n)
    return ClaimReport(
        "thm2",
        st.all_pinned,
        {"m": m, "n": n, "profiles": len(st.candidates), "pinned": st.pinned,
         "mpt_pins": st.mpt_pins, "giia_exclusions": st.giia_exclusions, "mismatches": len(st.mismatches)},
    )


# --------------------------------------------------------------- Theorem 1


def verify_theorem1_forward(j: int, m: int, n: int) -> bool:
    rule = s_sdr(j)
    return (axioms.check_wdc(rule, m, n).passed and axioms.check_giia(rule, m, n).passed)


@dataclass
class SalientStateCertificate:
    j: int
    per_alternative_j: dict[str, int]
    verified_equal: bool


def _step_one_j(table: CfTable, x: int, m: int, n: int) -> int | None:
    # Smallest j such that some profile with x first exactly in states 1..j
    # and last in all the others is mapped to {x}.
    best = None
    for p, chosen in table.assignment.items():
        top = []
        ok = True
        for order in p.states:
            if order[0] == x:
                top.append(True)
            elif order[-1] == x:
                top.append(False)
            else:
                ok = False
                break
        if not ok:
            continue
        j = sum(top)
        if j == 0 or top != [True] * j + [False] * (n - j):
            continue
        if chosen == {p.label(x)} and (best is None or j < best):
            best = j
    return best


def extract_salient_state(cf: CfTable) -> SalientStateCertificate | None:
    """Certify which state dictates a WDC + GIIA choice function on the full domain.

    Returns None when the table fails either axiom.
    """
    profiles = cf.profiles
    if not profiles:
        raise InputError("empty choice table")
    m, n, alts = profiles[0].m, profiles[0].n, profiles[0].alts
    full = list(enumerate_profiles(m, n, alts=alts))
    if len(full) != len(cf) or not all(cf.covers(p) for p in full):
        raise InputError(f"choice table is not total on all {len(full)} profiles at m={m}, n={n}")
    if not axioms.check_wdc(cf, profiles=full).passed or not axioms.check_giia(cf, profiles=full).passed:
        return None
    per_j = {alts.names[x]: _step_one_j(cf, x, m, n) for x in range(m)}
    for j in range(1, n + 1):
        if all(cf(p) == {p.label(p.states[j - 1][0])} for p in full):
            return SalientStateCertificate(j, per_j, all(v == j for v in per_j.values()))
    raise ClaimFailure("table satisfies WDC and GIIA but matches no state-salient rule")


# ------------------------------------------------ Proposition 1, Observation


def _sampled_tables(profiles: Sequence[Profile], samples: int, seed: int) -> Iterable[CfTable]:
    for k in range(samples):
        rng = random.Random(_sub_seed(seed, k))
        resolute = k % 2 == 1
        yield CfTable.random(profiles, rng, resolute=resolute, name=f"sample[{k}]{'-resolute' if resolute else ''}")


def _catalog_tables(profiles: Sequence[Profile], n: int) -> Iterable[CfTable]:
    for rule in catalog_rules(n):
        if rule.domain is Domain.FULL:
            yield CfTable.from_rule(rule, profiles, rule.name)


def verify_prop1_equivalence(m: int, n: int, samples: int, seed: int) -> ClaimReport:
    profiles = list(enumerate_profiles(m, n))
    tested = discrepancies = both_pass = 0
    details = []
    for table in [*_catalog_tables(profiles, n), *_sampled_tables(profiles, samples, seed)]:
        wm = axioms.check_weak_monotonicity(table, profiles=profiles)
        dm = axioms.check_down_monotonicity(table, profiles=profiles)
        tested += 1
        if wm.passed != dm.passed:
            discrepancies += 1
            details.append(f"{table.name}: weak-monotonicity {wm.verdict}, down-monotonicity {dm.verdict}")
        elif wm.passed:
            both_pass += 1
    return ClaimReport("prop1", discrepancies == 0,
                       {"m": m, "n": n, "tables": tested, "both_pass": both_pass, "discrepancies": discrepancies},
                       details=details)


def verify_observation(m: int, n: int, samples: int, seed: int) -> ClaimReport:
    profiles = list(enumerate_profiles(m, n))
    tested = vacuous = held = failures = 0
    details = []
    witness = None
    for table in [*_catalog_tables(profiles, n), *_sampled_tables(profiles, samples, seed)]:
        tested += 1
        premises = (axioms.check_resolute_for_pairs(table, profiles=profiles).passed
                    and axioms.check_weak_monotonicity(table, profiles=profiles).passed)
        if not premises:
            vacuous += 1
            continue
        giia = axioms.check_giia(table, profiles=profiles)
        if giia.passed:
            held += 1
        else:
            failures += 1
            witness = witness or giia.witness
            details.append(f"{table.name}: premises hold but GIIA fails")
    return ClaimReport("observation", failures == 0,
                       {"m": m, "n": n, "tables": tested, "premises_hold": held + failures, "vacuous": vacuous,
                        "implication_failures": failures},
                       witness, details)


# ----------------------------------------------------------- Proposition 2

PROP2_R1 = [["x", "x", "x", "z", "y", "y"], ["z", "z", "z", "y", "z", "x"], ["y", "y", "y", "x", "x", "z"]]
PROP2_R2 = [["x", "x", "z", "z", "y", "y"], ["y", "y", "x", "y", "z", "z"], ["z", "z", "y", "x", "x", "x"]]


def prop2_profiles() -> tuple[Profile, Profile]:
    alts = ("x", "y", "z")
    return Profile.from_rows(PROP2_R1, alts), Profile.from_rows(PROP2_R2, alts)


def verify_prop2_violation() -> Witness:
    r1, r2 = prop2_profiles()
    w1, w2 = weak_condorcet_winner_indices(r1), weak_condorcet_winner_indices(r2)
    if [r1.label(a) for a in w1] != ["x"] or [r2.label(a) for a in w2] != ["y"]:
        raise ClaimFailure(f"unexpected weak Condorcet winners {w1}, {w2}")
    x, y = 0, 1
    if any((s.index(x) < s.index(y)) != (t.index(x) < t.index(y)) for s, t in zip(r1.states, r2.states)):
        raise ClaimFailure("the two profiles disagree on {x, y}")
    rule = get_rule("weak-condorcet")
    report = axioms.check_giia(rule, profiles=[r1, r2])
    if report.passed or report.witness.pair != ("x", "y"):
        raise ClaimFailure("expected a GIIA violation on the pair (x, y)")
    return report.witness


# ------------------------------------------------------------------ Borda


def verify_borda_loser_exclusion(trials: int, m_range=(3, 4, 5), n_range=(3, 5, 7), seed: int = 0) -> ClaimReport:
    rng = random.Random(seed)
    losers = violations = 0
    witness = None
    for _ in range(trials):
        m, n = rng.choice(m_range), rng.choice(n_range)
        p = random_profile(rng, m, n)
        loser = strict_condorcet_loser_index(p)
        if loser is None:
            continue
        losers += 1
        scores = borda_index_scores(p)
        if scores[loser] == max(scores) or not 2 * scores[loser] < n * (m + 1):
            violations += 1
            if witness is None:
                witness = Witness((p,), alternative=p.label(loser), note="strict Condorcet loser is a Borda winner")
    return ClaimReport("borda-loser", violations == 0,
                       {"trials": trials, "losers": losers, "violations": violations}, witness)


def verify_borda_sum_identity(trials: int, seed: int = 0, m_range=(3, 4, 5), n_range=(2, 3, 4, 5, 6, 7)) -> ClaimReport:
    rng = random.Random(seed)
    violations = 0
    witness = None
    for _ in range(trials):
        m, n = rng.choice(m_range), rng.choice(n_range)
        p = random_profile(rng, m, n)
        if 2 * sum(borda_index_scores(p)) != n * m * (m + 1):
            violations += 1
            witness = witness or Witness((p,), note="Borda scores do not sum to nm(m+1)/2")
    return ClaimReport("borda-sum", violations == 0, {"trials": trials, "violations": violations}, witness)


def strict_domain_size(m: int, n: int) -> int:
    return sum(1 for _ in enumerate_profiles(m, n, Domain.STRICT_CONDORCET))

