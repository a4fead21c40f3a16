"""Theorem suites: each evaluates a hypothesis and a condition battery on one structure and issues a verdict.

A suite's verdict is ``DISCREPANCY`` exactly when its hypothesis holds and its
condition values are not all equal. Implication suites list the antecedent both
as the hypothesis and as condition 1, so a false antecedent never counts
against them.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from semigroups.congruences import (
    cpr_corollary_conditions,
    hstar_corollary_conditions,
    lemma7_condition,
    pi_inverse_corollary_conditions,
    theorem8_conditions,
)
from semigroups.predicates import (
    lemma3_condition,
    left_pi_t_simple_direct,
    nil_extension_search,
    pi_t_simple_direct,
    right_pi_inverse_def,
    structure_predicate,
    theorem2_conditions,
    theorem4_conditions,
    theorem5_conditions,
    theorem6_condition,
    theorem7_conditions,
    theorem51_conditions,
    weak_commutativity_conditions,
)
from semigroups.results import GatedConditions, PredicateResult, conjunction
from semigroups.structures import OrderedSemigroup

logger = logging.getLogger(__name__)

EQUIVALENT = "equivalent"
HYPOTHESIS_NOT_MET = "hypothesis_not_met"
DISCREPANCY = "DISCREPANCY"
VERDICTS = (EQUIVALENT, HYPOTHESIS_NOT_MET, DISCREPANCY)


class UnknownSuiteError(KeyError):
    """Raised for a theorem id outside the suite registry."""

    def __init__(self, theorem_id: str):
        self.theorem_id = theorem_id
        super().__init__(theorem_id)

    def __str__(self) -> str:
        return f"unknown theorem id {self.theorem_id!r}; expected one of {', '.join(SUITES)} or 'all'"


@dataclass(frozen=True)
class SuiteOutcome:
    hypothesis: tuple[tuple[str, PredicateResult], ...]
    conditions: tuple[tuple[int, PredicateResult], ...]
    observations: tuple[str, ...] = ()


@dataclass(frozen=True)
class ConditionOutcome:
    index: int
    holds: bool
    witness: dict

    def to_dict(self) -> dict:
        return {"index": self.index, "holds": self.holds, "witness": self.witness}


@dataclass(frozen=True)
class EquivalenceReport:
    theorem: str
    structure_key: str
    hypothesis: tuple[tuple[str, bool], ...]
    conditions: tuple[ConditionOutcome, ...]
    verdict: str
    observations: tuple[str, ...] = ()

    @property
    def is_discrepancy(self) -> bool:
        return self.verdict == DISCREPANCY

    def one_line(self) -> str:
        values = "".join("1" if c.holds else "0" for c in self.conditions)
        return f"{self.theorem}: {self.verdict} [{values}]"

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "structure_key": self.structure_key,
            "hypothesis": dict(self.hypothesis),
            "conditions": [c.to_dict() for c in self.conditions],
            "verdict": self.verdict,
            "observations": list(self.observations),
        }


@dataclass(frozen=True)
class Suite:
    id: str
    title: str
    kind: str
    evaluate: Callable[[OrderedSemigroup], SuiteOutcome]


def _numbered(results, numbers=None) -> tuple[tuple[int, PredicateResult], ...]:
    numbers = numbers or range(1, len(results) + 1)
    return tuple(zip(numbers, results))


def _from_gated(gated: GatedConditions, observations=()) -> SuiteOutcome:
    return SuiteOutcome(gated.hypothesis, _numbered(gated.conditions), tuple(observations))


def _implication(hypothesis, antecedent: PredicateResult, consequent: PredicateResult, observations=()) -> SuiteOutcome:
    return SuiteOutcome(tuple(hypothesis), ((1, antecedent), (2, consequent)), tuple(observations))


def _readings_differ(index: int, plain: PredicateResult, other: PredicateResult, reading: str) -> list[str]:
    if plain.holds == other.holds:
        return []
    return [f"condition ({index}) is {plain.holds} as stated but {other.holds} {reading}"]


def _regular(S: OrderedSemigroup) -> tuple[str, PredicateResult]:
    return ("regular", structure_predicate(S, "regular"))


def _pi_regular(S: OrderedSemigroup) -> tuple[str, PredicateResult]:
    return ("pi-regular", structure_predicate(S, "pi-regular"))


def _thm2(S):
    return SuiteOutcome((), _numbered(theorem2_conditions(S)))


def _thm4(S):
    plain, complete = theorem4_conditions(S), theorem4_conditions(S, require_complete=True)
    notes = []
    for i in (0, 4):
        notes += _readings_differ(i + 1, plain[i], complete[i], "with complete semilattice congruences")
    return SuiteOutcome((), _numbered(plain), tuple(notes))


def _thm5(S):
    plain, strict = theorem5_conditions(S), theorem5_conditions(S, strict=True)
    notes = []
    for i in (1, 4):
        notes += _readings_differ(i + 1, plain[i], strict[i], "when every exponent is required")
    return SuiteOutcome((_pi_regular(S),), _numbered(plain), tuple(notes))


def _thm6(S):
    definition = right_pi_inverse_def(S)
    notes = _readings_differ(1, definition, right_pi_inverse_def(S, strict=True), "when every generated power is required")
    for note in notes:
        logger.info("thm6 on %s: %s", S.key, note)
    return SuiteOutcome((_pi_regular(S),), ((1, definition), (2, theorem6_condition(S))), tuple(notes))


def _thm7_open(S):
    return SuiteOutcome((_regular(S),), _numbered(theorem7_conditions(S)))


def _thm8(S):
    plain = theorem8_conditions(S)
    complete = theorem8_conditions(S, require_complete=True)
    notes = _readings_differ(3, plain.conditions[2], complete.conditions[2], "with complete semilattice congruences")
    return _from_gated(plain, notes)


def _thm51(S):
    return SuiteOutcome((_regular(S),), _numbered(theorem51_conditions(S)))


def _thm_wc(S):
    antecedent, consequent = weak_commutativity_conditions(S)
    notes = []
    if antecedent.holds and not nil_extension_search(S, "simple").holds:
        notes.append("antecedent holds but S is not a nil-extension of a simple π-regular kernel")
    return _implication((("antecedent", antecedent),), antecedent, consequent, notes)


def _lemma3(S):
    hypothesis = _pi_regular(S)
    return _implication((hypothesis,), hypothesis[1], lemma3_condition(S))


def _lemma7(S):
    hypothesis = ("right-pi-inverse", right_pi_inverse_def(S))
    return _implication((hypothesis,), hypothesis[1], lemma7_condition(S))


def _cor1(S):
    conditions = theorem2_conditions(S)
    return SuiteOutcome((), _numbered(tuple(conditions[i - 1] for i in (8, 5, 4, 6, 7))))


def _cor_pi_inverse(S):
    return SuiteOutcome((), _numbered(pi_inverse_corollary_conditions(S)))


def _cor_pi_t_simple(S):
    right_inverse, left_t_simple = right_pi_inverse_def(S), left_pi_t_simple_direct(S)
    hypothesis = (("right-pi-inverse", right_inverse), ("left-pi-t-simple", left_t_simple))
    return _implication(hypothesis, conjunction(right_inverse, left_t_simple), pi_t_simple_direct(S))


def _cor_hstar(S):
    plain = hstar_corollary_conditions(S)
    complete = hstar_corollary_conditions(S, require_complete=True)
    notes = _readings_differ(3, plain.conditions[2], complete.conditions[2], "with complete semilattice congruences")
    return _from_gated(plain, notes)


def _cor_cpr(S):
    return _from_gated(cpr_corollary_conditions(S))


SUITES: dict[str, Suite] = {
    suite.id: suite
    for suite in (
        Suite("thm2", "left π-t-simple: eight equivalent conditions", "equivalence", _thm2),
        Suite("thm4", "semilattices of left π-t-simple ordered semigroups", "equivalence", _thm4),
        Suite("thm5", "right π-inverse: five equivalent conditions", "equivalence", _thm5),
        Suite("thm6", "right π-inverse through ℒ* ⊆ ℛ* on idempotents", "equivalence", _thm6),
        Suite("thm7-open", "left simple π-regular via ℒ*-related idempotents", "equivalence", _thm7_open),
        Suite("thm8", "ℛ* as a semilattice congruence", "equivalence", _thm8),
        Suite("thm51", "right inverse regular ordered semigroups", "equivalence", _thm51),
        Suite("thm-wc", "weak commutativity gives left π-t-simplicity", "implication", _thm_wc),
        Suite("lemma3", "(Sa^m] generated by an ordered idempotent", "implication", _lemma3),
        Suite("lemma7", "a'a^m ℛ* b'b^n whenever a ℒ* b", "implication", _lemma7),
        Suite("cor1", "nil-extensions of left simple ordered semigroups", "equivalence", _cor1),
        Suite("cor-pi-inverse", "π-inverse as left and right π-inverse", "equivalence", _cor_pi_inverse),
        Suite("cor-pi-t-simple", "right π-inverse left π-t-simple is π-t-simple", "implication", _cor_pi_t_simple),
        Suite("cor-hstar", "ℒ* = ℛ* = ℋ* on π-inverse ordered semigroups", "equivalence", _cor_hstar),
        Suite("cor-cpr", "completely π-regular left weakly commutative", "equivalence", _cor_cpr),
    )
}

SUITE_IDS: tuple[str, ...] = tuple(SUITES)


def get_suite(theorem_id: str) -> Suite:
    try:
        return SUITES[theorem_id]
    except KeyError:
        raise UnknownSuiteError(theorem_id) from None


def resolve_suite_ids(requested) -> tuple[str, ...]:
    """Expand ``all`` and comma lists into registry order, rejecting unknown ids."""
    if isinstance(requested, str):
        requested = [part for part in requested.split(",") if part.strip()]
    ids = [part.strip() for part in requested]
    if not ids or "all" in ids:
        return SUITE_IDS
    for theorem_id in ids:
        get_suite(theorem_id)
    return tuple(theorem_id for theorem_id in SUITE_IDS if theorem_id in ids)


def verify(S: OrderedSemigroup, theorem_id: str) -> EquivalenceReport:
    suite = get_suite(theorem_id)
    outcome = suite.evaluate(S)
    hypothesis_holds = all(result.holds for _, result in outcome.hypothesis)
    values = {result.holds for _, result in outcome.conditions}
    if not hypothesis_holds:
        verdict = HYPOTHESIS_NOT_MET
    elif len(values) > 1:
        verdict = DISCREPANCY
    else:
        verdict = EQUIVALENT

    report = EquivalenceReport(
        theorem=theorem_id,
        structure_key=S.key,
        hypothesis=tuple((name, result.holds) for name, result in outcome.hypothesis),
        conditions=tuple(
            ConditionOutcome(index, result.holds, _witness_of(result)) for index, result in outcome.conditions
        ),
        verdict=verdict,
        observations=outcome.observations,
    )
    if report.is_discrepancy:
        logger.warning("DISCREPANCY in %s on %s: %s", theorem_id, S.key, report.one_line())
    return report


def _witness_of(result: PredicateResult) -> dict:
    data = result.as_dict()
    data.pop("holds")
    return data
