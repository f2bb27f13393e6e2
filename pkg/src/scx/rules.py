"""Choice rules over fixed-n profiles and the name-indexed rule catalog.

Every rule maps a profile to a nonempty ``frozenset`` of alternative labels.
Parameterised rules carry the parameter in their catalog name, e.g. ``s-sdr:3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from scx.errors import DomainError, InputError
from scx.profile import (
    Domain,
    Profile,
    in_domain,
    plurality_winner_indices,
    strict_condorcet_winner_index,
    weak_condorcet_winner_indices,
)


def _require_rule_size(p: Profile) -> None:
    if p.m < 3:
        raise InputError(f"choice rules need at least 3 alternatives, got {p.m}")


def eval_s_sdr(j: int, p: Profile) -> frozenset[str]:
    """State-salient rule: the top alternative of state ``j`` (1-based)."""
    if not 1 <= j <= p.n:
        raise InputError(f"salient state {j} out of range 1..{p.n}")
    return frozenset({p.label(p.states[j - 1][0])})


def eval_strict_condorcet(p: Profile) -> frozenset[str]:
    a = strict_condorcet_winner_index(p)
    if a is None:
        raise DomainError("profile has no strict Condorcet winner")
    return frozenset({p.label(a)})


def eval_weak_condorcet(p: Profile) -> frozenset[str]:
    winners = weak_condorcet_winner_indices(p)
    if not winners:
        raise DomainError("profile has no weak Condorcet winner")
    return p.labels(winners)


def eval_plurality(p: Profile, least_index: bool = False) -> frozenset[str]:
    """Alternatives ranked first in the most states.

    With ``least_index`` ties go to the earliest alternative in declared order.
    """
    winners = plurality_winner_indices(p)
    if least_index:
        winners = winners[:1]
    return p.labels(winners)


@dataclass(frozen=True)
class BordaTally:
    scores: dict[str, int]
    n: int
    m: int

    @property
    def total(self) -> int:
        return sum(self.scores.values())

    def expected_total(self) -> int:
        return self.n * self.m * (self.m + 1) // 2

    def winners(self) -> frozenset[str]:
        top = max(self.scores.values())
        return frozenset(x for x, s in self.scores.items() if s == top)


def borda_index_scores(p: Profile) -> list[int]:
    base = p.n * (p.m + 1)
    sums = [0] * p.m
    for r in p.ranks:
        for a, rk in enumerate(r):
            sums[a] += rk
    return [base - s for s in sums]


def borda_scores(p: Profile) -> BordaTally:
    scores = borda_index_scores(p)
    return BordaTally({p.label(a): s for a, s in enumerate(scores)}, p.n, p.m)


def eval_borda(p: Profile) -> frozenset[str]:
    scores = borda_index_scores(p)
    top = max(scores)
    return p.labels(a for a, s in enumerate(scores) if s == top)


def eval_last_of_state_one(p: Profile) -> frozenset[str]:
    return frozenset({p.label(p.states[0][-1])})


def eval_first_somewhere(p: Profile) -> frozenset[str]:
    return p.labels({order[0] for order in p.states})


@dataclass(frozen=True)
class ChoiceRule:
    name: str
    domain: Domain
    evaluate: Callable[[Profile], frozenset]
    resolute: bool = False

    def __call__(self, p: Profile) -> frozenset[str]:
        _require_rule_size(p)
        return self.evaluate(p)

    def covers(self, p: Profile) -> bool:
        return in_domain(p, self.domain)


def s_sdr(j: int) -> ChoiceRule:
    if j < 1:
        raise InputError(f"salient state must be >= 1, got {j}")
    return ChoiceRule(f"s-sdr:{j}", Domain.FULL, lambda p: eval_s_sdr(j, p), resolute=True)


RULES: dict[str, ChoiceRule] = {
    r.name: r
    for r in (
        ChoiceRule("strict-condorcet", Domain.STRICT_CONDORCET, eval_strict_condorcet, resolute=True),
        ChoiceRule("weak-condorcet", Domain.WEAK_CONDORCET, eval_weak_condorcet),
        ChoiceRule("plurality", Domain.FULL, eval_plurality),
        ChoiceRule("plurality-least-index", Domain.FULL, lambda p: eval_plurality(p, least_index=True), resolute=True),
        ChoiceRule("borda", Domain.FULL, eval_borda),
        ChoiceRule("last-of-state-one", Domain.FULL, eval_last_of_state_one, resolute=True),
        ChoiceRule("first-somewhere", Domain.FULL, eval_first_somewhere),
    )
}


def rule_names() -> list[str]:
    return ["s-sdr:J", *RULES]


def get_rule(name: str, param: int | None = None) -> ChoiceRule:
    """Look up a catalog rule; ``s-sdr`` takes its state either as ``s-sdr:J`` or via ``param``."""
    base, _, suffix = name.partition(":")
    if base == "s-sdr":
        if suffix:
            try:
                param = int(suffix)
            except ValueError:
                raise InputError(f"bad salient state in {name!r}") from None
        if param is None:
            raise InputError("s-sdr needs a salient state: use s-sdr:J or --param J")
        return s_sdr(param)
    if suffix or param is not None:
        raise InputError(f"rule {base!r} takes no parameter")
    try:
        return RULES[name]
    except KeyError:
        raise InputError(f"unknown rule {name!r}; valid rules: {', '.join(rule_names())}") from None


def catalog_rules(n: int) -> list[ChoiceRule]:
    """Every catalog rule, with one s-sdr instance per state of an n-state profile."""
    return [*(s_sdr(j) for j in range(1, n + 1)), *RULES.values()]
