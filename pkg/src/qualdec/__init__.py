"""Qualitative decision engine.

Evaluates acts under uncertainty by Sugeno integrals over finite ordinal
scales, checks decision-theoretic axioms on explicit preference
relations by exhaustive search, and constructively synthesizes
(scale, utility, capacity) representations from admissible relations.
"""

from .scale import Scale
from .capacity import (
    Capacity,
    CapacityError,
    CapacityTraits,
    PossibilityDistribution,
    classify_capacity,
    necessity_capacity,
    possibility_capacity,
    random_monotone_capacity,
    validate_capacity,
)
from .acts import (
    Act,
    DecisionFrame,
    act_space,
    binary_act,
    compound_act,
    constant_act,
    ensure_extremes,
    is_comonotonic,
    level_set,
    pointwise_combine,
    pointwise_leq,
)
from .evaluate import (
    binary_act_value,
    expected_utility,
    optimistic_utility,
    pessimistic_utility,
    sugeno_levelcut,
    sugeno_median,
    sugeno_outcome,
)
from .preference import (
    Axiom,
    AxiomVerdict,
    BudgetExceededError,
    LikelihoodRelation,
    LikelihoodVerdict,
    PreferenceRelation,
    RankingError,
    check_axiom,
    induced_likelihood,
    induced_outcome_order,
    is_comparative_possibility,
    is_comparative_probability,
    is_null_event,
    likelihood_from_capacity,
    replay_witness,
)
from .synthesis import (
    AxiomRefusalError,
    DominanceDemo,
    PossibilisticRepresentation,
    Representation,
    RepresentationError,
    eu_dominance_demo,
    find_sure_thing_violation,
    induce_preorder,
    sure_thing_demo_frame,
    synthesize_possibilistic,
    synthesize_representation,
    verify_representation,
)

__version__ = "0.1.0"
