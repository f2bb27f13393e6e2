"""Choice rules, axiom checkers and theorem checks for state-dependent preference profiles."""

from scx.axioms import AxiomReport, CfTable, Mode, Witness, check, naive_check, replay, search
from scx.errors import ClaimFailure, DomainError, InputError, ParseError, ResourceLimitError, ScxError
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
from scx.rules import ChoiceRule, borda_scores, get_rule
from scx.variable import MultiProfile

__version__ = "0.1.0"
