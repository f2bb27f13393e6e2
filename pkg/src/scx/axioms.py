"""Axiom checkers over enumerated or sampled profile domains.

Each checker returns an :class:`AxiomReport`.  In exhaustive mode the witness
is the first violation in enumeration order, keyed by (profile index, partner
index, alternatives); the naive oracles in :mod:`scx.oracle` produce the same
witness, which the test-suite checks.  Random mode draws profiles from a
seeded generator and a pass there only means no violation was found within
the budget.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

from scx import oracle
from scx.errors import DomainError, InputError
from scx.profile import (
    DEFAULT_VISIT_LIMIT,
    AlternativeSet,
    Domain,
    Profile,
    enumerate_profiles,
    in_domain,
    profile_space_size,
    random_profile,
    strict_condorcet_loser_index,
    strict_condorcet_winner_index,
)
from scx.errors import ResourceLimitError
from scx.rules import ChoiceRule

AXIOMS = (
    "wdc",
    "giia",
    "mpt",
    "weak-monotonicity",
    "down-monotonicity",
    "resolute-for-pairs",
    "condorcet-winner",
    "anti-condorcet-loser",
)
SINGLE_PROFILE = frozenset(oracle.SINGLE)


class CfTable:
    """A choice function given as an explicit lookup table."""

    def __init__(self, assignment: Mapping[Profile, Iterable[str]], name: str = "table"):
        self.name = name
        self.assignment: dict[Profile, frozenset[str]] = {}
        for p, chosen in assignment.items():
            chosen = frozenset(chosen)
            if not chosen:
                raise InputError("a choice function never returns the empty set")
            for x in chosen:
                p.alts.index(x)
            self.assignment[p] = chosen

    @classmethod
    def from_rule(cls, rule, profiles: Iterable[Profile], name: str | None = None) -> CfTable:
        return cls({p: rule(p) for p in profiles}, name or f"table[{rule.name}]")

    @classmethod
    def random(cls, profiles: Iterable[Profile], rng: random.Random, resolute: bool = False, name: str = "random-table") -> CfTable:
        """Uniform draw: each profile gets a uniformly random nonempty subset (or singleton)."""
        table = {}
        for p in profiles:
            if resolute:
                table[p] = frozenset({p.label(rng.randrange(p.m))})
            else:
                mask = rng.randrange(1, 2**p.m)
                table[p] = p.labels(a for a in range(p.m) if mask >> a & 1)
        return cls(table, name)

    @property
    def profiles(self) -> list[Profile]:
        return list(self.assignment)

    def __call__(self, p: Profile) -> frozenset[str]:
        try:
            return self.assignment[p]
        except KeyError:
            raise DomainError("profile is outside the table's domain") from None

    def covers(self, p: Profile) -> bool:
        return p in self.assignment

    def __len__(self):
        return len(self.assignment)


@dataclass(frozen=True)
class Mode:
    kind: str = "exhaustive"
    seed: int | None = None
    budget: int | None = None

    @classmethod
    def random(cls, seed: int, budget: int) -> Mode:
        if budget < 1:
            raise InputError("random mode needs a budget >= 1")
        return cls("random", seed, budget)

    def __str__(self):
        if self.kind == "exhaustive":
            return "exhaustive"
        return f"random(seed={self.seed}, budget={self.budget})"


EXHAUSTIVE = Mode()


@dataclass(frozen=True)
class Witness:
    profiles: tuple[Profile, ...]
    pair: tuple[str, ...] | None = None
    alternative: str | None = None
    state: int | None = None
    choices: tuple[frozenset, ...] = field(default=(), compare=False)
    note: str = field(default="", compare=False)


@dataclass
class AxiomReport:
    axiom: str
    rule: str
    mode: Mode
    domain: str
    verdict: str
    witness: Witness | None
    profiles_checked: int
    m: int | None = None
    n: int | None = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def summary(self) -> str:
        size = f"m={self.m}, n={self.n}, " if self.m else ""
        line = f"{self.verdict.upper()} {self.axiom} for {self.rule} on {self.domain} ({size}{self.mode}, {self.profiles_checked} profiles)"
        if self.passed and self.mode.kind == "random":
            line += ": no violation found within budget"
        return line


# ---------------------------------------------------------------- witnesses


def _labels(p: Profile, idx: Iterable[int]) -> tuple[str, ...]:
    return tuple(p.label(a) for a in idx)


def _single_witness(axiom: str, p: Profile, chosen: frozenset[str], detail) -> Witness:
    if axiom == "anti-condorcet-loser":
        x = p.label(detail)
        return Witness((p,), alternative=x, choices=(chosen,), note=f"{x} is chosen but is the strict Condorcet loser")
    a, b = _labels(p, detail)
    notes = {
        "wdc": f"{a} beats {b} in every state yet {b} is chosen",
        "mpt": f"{a} and {b} fill the top two ranks everywhere and {a} has the majority, but the choice is not {{{a}}}",
        "resolute-for-pairs": f"{a} and {b} fill the top two ranks everywhere, but the choice is not a singleton from them",
        "condorcet-winner": f"{a} is the strict Condorcet winner, but {b} is chosen alongside or instead",
    }
    return Witness((p,), pair=(a, b), choices=(chosen,), note=notes[axiom])


def _paired_witness(axiom: str, p: Profile, q: Profile, fp, fq, detail) -> Witness:
    if axiom == "giia":
        a, b = _labels(p, detail)
        return Witness((p, q), pair=(a, b), choices=(fp, fq),
                       note=f"same {{{a},{b}}} restriction; {a} chosen and {b} rejected in the first, {b} chosen in the second")
    if axiom == "weak-monotonicity":
        x = p.label(detail)
        return Witness((p, q), alternative=x, choices=(fp, fq),
                       note=f"{x} only gains against every rival in the second profile but is dropped")
    a, i, y = detail
    x, y = p.label(a), p.label(y)
    return Witness((p, q), pair=(x, y), alternative=x, state=i + 1, choices=(fp, fq),
                   note=f"{y} drops one rank in state {i + 1}; {x} is dropped from the choice")


# ------------------------------------------------------ optimized predicates


def _idx(p: Profile, chosen: frozenset[str]) -> frozenset[int]:
    return frozenset(p.alts.index(x) for x in chosen)


def _wdc(p: Profile, ch):
    maj, n = p.majority, p.n
    targets = sorted(ch)
    for a in range(p.m):
        row = maj[a]
        for b in targets:
            if b != a and row[b] == n:
                return a, b
    return None


def top_pair(p: Profile) -> tuple[int, int] | None:
    """The two alternatives filling ranks 1 and 2 in every state, if any."""
    first = p.states[0]
    pair = {first[0], first[1]}
    for order in p.states:
        if order[0] not in pair or order[1] not in pair:
            return None
    a, b = sorted(pair)
    return a, b


def _mpt(p: Profile, ch):
    pair = top_pair(p)
    if pair is None:
        return None
    a, b = pair
    maj = p.majority
    if maj[a][b] < maj[b][a]:
        a, b = b, a
    elif maj[a][b] == maj[b][a]:
        return None
    return None if ch == {a} else (a, b)


def _rfp(p: Profile, ch):
    pair = top_pair(p)
    if pair is None or (len(ch) == 1 and ch <= set(pair)):
        return None
    return pair


def _cwp(p: Profile, ch):
    w = strict_condorcet_winner_index(p)
    if w is None or ch == {w}:
        return None
    return w, min(c for c in ch if c != w)


def _acl(p: Profile, ch):
    loser = strict_condorcet_loser_index(p)
    return loser if loser is not None and loser in ch else None


_SINGLE: dict[str, Callable] = {
    "wdc": _wdc,
    "mpt": _mpt,
    "resolute-for-pairs": _rfp,
    "condorcet-winner": _cwp,
    "anti-condorcet-loser": _acl,
}


def _pair_mask(p: Profile, a: int, b: int) -> int:
    mask = 0
    for i, r in enumerate(p.ranks):
        if r[a] < r[b]:
            mask |= 1 << i
    return mask


def giia_buckets(profiles: Sequence[Profile], a: int, b: int) -> dict[int, list[int]]:
    """Group profile indices by the per-state direction of the pair {a, b}.

    Two profiles share a bucket exactly when their restrictions to {a, b}
    agree in every state.
    """
    buckets: dict[int, list[int]] = {}
    for k, p in enumerate(profiles):
        buckets.setdefault(_pair_mask(p, a, b), []).append(k)
    return buckets


def _first_giia(profiles, choices):
    m = profiles[0].m
    best = None
    for a in range(m):
        for b in range(a + 1, m):
            for members in giia_buckets(profiles, a, b).values():
                # first index with (x chosen, y rejected) and first with y chosen, both orientations
                first = {}
                for k in members:
                    ch = choices[k]
                    for x, y in ((a, b), (b, a)):
                        if x in ch and y not in ch:
                            first.setdefault(("keep", x), k)
                        if y in ch:
                            first.setdefault(("hit", x), k)
                for x, y in ((a, b), (b, a)):
                    if ("keep", x) in first and ("hit", x) in first:
                        cand = (first[("keep", x)], first[("hit", x)], x, y)
                        if best is None or cand < best:
                            best = cand
    if best is None:
        return None
    return best[0], best[1], (best[2], best[3])


def _beat_mask(p: Profile, a: int) -> int:
    m = p.m
    mask = 0
    for i, r in enumerate(p.ranks):
        ra = r[a]
        for y in range(m):
            if ra < r[y]:
                mask |= 1 << (i * m + y)
    return mask


def _first_wm(profiles, choices):
    m = profiles[0].m
    best = None
    for a in range(m):
        # beat-vector groups: mask -> [first index choosing a, first index dropping a]
        groups: dict[int, list] = {}
        for k, p in enumerate(profiles):
            g = groups.setdefault(_beat_mask(p, a), [None, None])
            slot = 0 if a in choices[k] else 1
            if g[slot] is None:
                g[slot] = k
        keep = [(mask, g[0]) for mask, g in groups.items() if g[0] is not None]
        drop = [(mask, g[1]) for mask, g in groups.items() if g[1] is not None]
        for m1, k1 in keep:
            for m2, k2 in drop:
                if m1 & ~m2 == 0:
                    cand = (k1, k2, a)
                    if best is None or cand < best:
                        best = cand
    if best is None:
        return None
    return best[0], best[1], best[2]


def _first_dm(profiles, choices):
    index = {p.states: k for k, p in enumerate(profiles)}
    for k, p in enumerate(profiles):
        ch = choices[k]
        best = None
        for i, order in enumerate(p.states):
            for pos in range(p.m - 1):
                y = order[pos]
                swapped = list(order)
                swapped[pos], swapped[pos + 1] = swapped[pos + 1], y
                states = p.states[:i] + (tuple(swapped),) + p.states[i + 1:]
                k2 = index.get(states)
                if k2 is None:
                    continue
                for a in sorted(ch):
                    if a != y and a not in choices[k2]:
                        cand = (k2, a, i, y)
                        if best is None or cand < best:
                            best = cand
        if best is not None:
            k2, a, i, y = best
            return k, k2, (a, i, y)
    return None


_PAIRED = {
    "giia": _first_giia,
    "weak-monotonicity": _first_wm,
    "down-monotonicity": _first_dm,
}


# ------------------------------------------------------------ random partners


def _giia_partner(rng, p, ch):
    pairs = [(a, b) for a in sorted(ch) for b in range(p.m) if b not in ch]
    if not pairs:
        return None
    a, b = rng.choice(pairs)
    states = []
    for order in p.states:
        perm = rng.sample(range(p.m), p.m)
        if (perm.index(a) < perm.index(b)) != (order.index(a) < order.index(b)):
            ia, ib = perm.index(a), perm.index(b)
            perm[ia], perm[ib] = b, a
        states.append(tuple(perm))
    return Profile.trusted(p.alts, tuple(states)), (a, b)


def _wm_partner(rng, p, ch):
    a = rng.choice(sorted(ch))
    states = []
    for order in p.states:
        rest = [c for c in order if c != a]
        pos = order.index(a)
        new_pos = pos - rng.randint(0, pos)
        above, below = rest[:new_pos], rest[new_pos:]
        rng.shuffle(above)
        rng.shuffle(below)
        states.append(tuple(above + [a] + below))
    return Profile.trusted(p.alts, tuple(states)), a


def _dm_partner(rng, p, ch):
    a = rng.choice(sorted(ch))
    i = rng.randrange(p.n)
    order = p.states[i]
    spots = [pos for pos in range(p.m - 1) if order[pos] != a]
    pos = rng.choice(spots)
    y = order[pos]
    swapped = list(order)
    swapped[pos], swapped[pos + 1] = swapped[pos + 1], y
    states = p.states[:i] + (tuple(swapped),) + p.states[i + 1:]
    return Profile.trusted(p.alts, states), (a, i, y)


# ------------------------------------------------------------------ drivers


def estimated_visits(axiom: str, m: int, n: int) -> int:
    size = profile_space_size(m, n)
    if axiom == "down-monotonicity":
        return size * n * (m - 1)
    if axiom == "weak-monotonicity":
        return size + min(size, 2 ** ((m - 1) * n)) ** 2
    return size


def _check_axiom_name(axiom: str) -> str:
    if axiom not in AXIOMS:
        raise InputError(f"unknown axiom {axiom!r}; valid axioms: {', '.join(AXIOMS)}")
    return axiom


def _domain_profiles(rule, m, n, domain, profiles, axiom, limit, alts):
    if profiles is not None:
        profiles = list(profiles)
        if not profiles:
            raise InputError("empty profile domain")
        first = profiles[0]
        for p in profiles:
            if p.alts != first.alts or p.n != first.n:
                raise InputError("all profiles of a domain must share alternatives and n")
            if not rule.covers(p):
                raise InputError(f"rule {rule.name} is not defined on a supplied profile")
        return profiles, f"explicit[{len(profiles)}]"
    if m is None or n is None:
        raise InputError("give m and n, or an explicit list of profiles")
    domain = Domain.parse(domain)
    if isinstance(rule, ChoiceRule) and not rule.domain.includes(domain):
        raise InputError(f"rule {rule.name} is defined on {rule.domain.value}, which does not contain {domain.value}")
    if limit is not None and estimated_visits(axiom, m, n) > limit:
        raise ResourceLimitError(
            f"{axiom} at m={m}, n={n} needs about {estimated_visits(axiom, m, n)} visits; ceiling is {limit}")
    out = list(enumerate_profiles(m, n, domain, alts=alts, limit=None))
    if not isinstance(rule, ChoiceRule):
        for p in out:
            if not rule.covers(p):
                raise InputError(f"rule {rule.name} does not cover the {domain.value} domain at m={m}, n={n}")
    return out, domain.value


def check(
    axiom: str,
    rule,
    m: int | None = None,
    n: int | None = None,
    domain: Domain | str = Domain.FULL,
    mode: Mode = EXHAUSTIVE,
    *,
    profiles: Iterable[Profile] | None = None,
    alts: AlternativeSet | None = None,
    limit: int | None = DEFAULT_VISIT_LIMIT,
) -> AxiomReport:
    """Check ``axiom`` for ``rule`` (a catalog rule or a :class:`CfTable`)."""
    axiom = _check_axiom_name(axiom)
    if mode.kind == "random":
        return _check_random(axiom, rule, m, n, Domain.parse(domain), mode, alts)
    space, label = _domain_profiles(rule, m, n, domain, profiles, axiom, limit, alts)
    choices = [_idx(p, rule(p)) for p in space]
    witness = None
    if axiom in _SINGLE:
        pred = _SINGLE[axiom]
        for k, p in enumerate(space):
            detail = pred(p, choices[k])
            if detail is not None:
                witness = _single_witness(axiom, p, rule(p), detail)
                break
    else:
        found = _PAIRED[axiom](space, choices)
        if found is not None:
            k1, k2, detail = found
            p, q = space[k1], space[k2]
            witness = _paired_witness(axiom, p, q, rule(p), rule(q), detail)
    return AxiomReport(axiom, rule.name, mode, label, "fail" if witness else "pass", witness, len(space),
                       space[0].m, space[0].n)


def _check_random(axiom, rule, m, n, domain, mode, alts):
    if m is None or n is None:
        raise InputError("random mode needs m and n")
    if isinstance(rule, ChoiceRule) and not rule.domain.includes(domain):
        raise InputError(f"rule {rule.name} is defined on {rule.domain.value}, which does not contain {domain.value}")
    rng = random.Random(mode.seed)
    table_rule = not isinstance(rule, ChoiceRule)

    def admissible(p):
        return in_domain(p, domain) and (not table_rule or rule.covers(p))

    checked = 0
    witness = None
    for _ in range(mode.budget):
        p = random_profile(rng, m, n, alts)
        if not admissible(p):
            continue
        checked += 1
        fp = rule(p)
        ch = _idx(p, fp)
        if axiom in _SINGLE:
            detail = _SINGLE[axiom](p, ch)
            if detail is not None:
                witness = _single_witness(axiom, p, fp, detail)
                break
            continue
        partner = {"giia": _giia_partner, "weak-monotonicity": _wm_partner, "down-monotonicity": _dm_partner}[axiom]
        made = partner(rng, p, ch)
        if made is None:
            continue
        q, detail = made
        if not admissible(q):
            continue
        fq = rule(q)
        cq = _idx(q, fq)
        if axiom == "giia":
            violated = detail[1] in cq
        elif axiom == "weak-monotonicity":
            violated = detail not in cq
        else:
            violated = detail[0] not in cq
        if violated:
            witness = _paired_witness(axiom, p, q, fp, fq, detail)
            break
    return AxiomReport(axiom, rule.name, mode, domain.value, "fail" if witness else "pass", witness, checked, m, n)


def search(rule, axiom: str, m: int, n: int, domain=Domain.FULL, seed: int = 0, budget: int = 10**5, alts=None) -> Witness | None:
    """Seeded stochastic counterexample search; returns the first witness or None."""
    return check(axiom, rule, m, n, domain, Mode.random(seed, budget), alts=alts).witness


# ------------------------------------------------------------ oracle access


def naive_check(axiom: str, rule, profiles: Sequence[Profile]) -> Witness | None:
    """First violation by direct quantifier expansion over ``profiles`` (tiny domains only)."""
    axiom = _check_axiom_name(axiom)
    profiles = list(profiles)
    outs = [rule(p) for p in profiles]
    chs = [_idx(p, f) for p, f in zip(profiles, outs)]
    if axiom in oracle.SINGLE:
        gen = oracle.SINGLE[axiom]
        for p, f, ch in zip(profiles, outs, chs):
            for detail in gen(p, ch):
                return _single_witness(axiom, p, f, detail)
        return None
    gen = oracle.PAIRED[axiom]
    for k1, p in enumerate(profiles):
        best = None
        for k2, q in enumerate(profiles):
            for detail in gen(p, q, chs[k1], chs[k2]):
                key = (detail[0], detail[1], detail[2]) if axiom == "down-monotonicity" else detail
                if best is None or key < best[0]:
                    best = (key, k2, detail)
            if best is not None:
                break
        if best is not None:
            _, k2, detail = best
            return _paired_witness(axiom, p, profiles[k2], outs[k1], outs[k2], detail)
    return None


def replay(axiom: str, rule, witness: Witness) -> bool:
    """Re-evaluate ``rule`` on the witness profiles and confirm the stated violation."""
    axiom = _check_axiom_name(axiom)
    p = witness.profiles[0]
    fp = _idx(p, rule(p))
    if axiom in oracle.SINGLE:
        if len(witness.profiles) != 1:
            return False
        found = list(oracle.SINGLE[axiom](p, fp))
        if axiom == "anti-condorcet-loser":
            return p.alts.index(witness.alternative) in found if witness.alternative else False
        return tuple(p.alts.index(x) for x in witness.pair) in found
    if len(witness.profiles) != 2:
        return False
    q = witness.profiles[1]
    if q.alts != p.alts or q.n != p.n:
        return False
    fq = _idx(q, rule(q))
    found = list(oracle.PAIRED[axiom](p, q, fp, fq))
    if axiom == "giia":
        return tuple(p.alts.index(x) for x in witness.pair) in found
    if axiom == "weak-monotonicity":
        return p.alts.index(witness.alternative) in found
    x, y = (p.alts.index(v) for v in witness.pair)
    return (x, witness.state - 1, y) in found


def check_wdc(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("wdc", rule, m, n, domain, mode, **kw)


def check_giia(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("giia", rule, m, n, domain, mode, **kw)


def check_mpt(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("mpt", rule, m, n, domain, mode, **kw)


def check_weak_monotonicity(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("weak-monotonicity", rule, m, n, domain, mode, **kw)


def check_down_monotonicity(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("down-monotonicity", rule, m, n, domain, mode, **kw)


def check_resolute_for_pairs(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("resolute-for-pairs", rule, m, n, domain, mode, **kw)


def check_condorcet_winner_property(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("condorcet-winner", rule, m, n, domain, mode, **kw)


def check_anti_condorcet_loser(rule, m=None, n=None, domain=Domain.FULL, mode=EXHAUSTIVE, **kw) -> AxiomReport:
    return check("anti-condorcet-loser", rule, m, n, domain, mode, **kw)
