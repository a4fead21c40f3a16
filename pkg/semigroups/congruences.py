"""Congruences, semilattice congruences and semilattice decompositions into ordered subsemigroups."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Iterator

from django.conf import settings

from semigroups.predicates import (
    left_pi_inverse_def,
    pi_inverse_def,
    pi_t_simple_direct,
    right_pi_inverse_def,
    right_pi_t_simple_direct,
    structure_predicate,
)
from semigroups.relations import Partition, inverse_bits, regularity_profile, starred
from semigroups.results import GatedConditions, PredicateResult, Witness, conjunction
from semigroups.structures import OrderedSemigroup, check_cap, iter_bits

PARTITION_MAX = max(1, int(getattr(settings, "ORDSGP_PARTITION_MAX", 10)))

ClassPredicate = Callable[[OrderedSemigroup], PredicateResult]


class CongruenceClassNotClosed(RuntimeError):
    """A semilattice congruence class that is not closed under the product; the congruence checks are broken."""

    def __init__(self, S: OrderedSemigroup, block):
        self.structure_key = S.key
        self.block = block
        super().__init__(f"semilattice class {block} of {S.key} is not product-closed")


@dataclass(frozen=True)
class CongruenceCertificate:
    partition: Partition
    is_left_congruence: bool
    is_right_congruence: bool
    is_semilattice: bool
    is_complete: bool
    congruence_counterexample: tuple[int, ...] | None = None
    semilattice_counterexample: tuple[int, ...] | None = None
    complete_counterexample: tuple[int, ...] | None = None

    @property
    def is_congruence(self) -> bool:
        return self.is_left_congruence and self.is_right_congruence

    def as_dict(self) -> dict:
        def listed(value):
            return None if value is None else list(value)

        return {
            "classes": self.partition.as_lists(),
            "is_congruence": self.is_congruence,
            "is_semilattice": self.is_semilattice,
            "is_complete": self.is_complete,
            "congruence_counterexample": listed(self.congruence_counterexample),
            "semilattice_counterexample": listed(self.semilattice_counterexample),
            "complete_counterexample": listed(self.complete_counterexample),
        }


def classify_partition(S: OrderedSemigroup, partition: Partition) -> CongruenceCertificate:
    """Check compatibility on both sides, the semilattice laws and completeness.

    Counterexamples: ``(a, b, c)`` with a ρ b but not ca ρ cb (or ac ρ bc),
    ``(a,)`` with a, a² unrelated or ``(a, b)`` with ab, ba unrelated, and
    ``(a, b)`` with a ≤ b but a, ab unrelated.
    """
    if partition.size != S.order:
        raise ValueError(f"partition over {partition.size} elements used with a structure of order {S.order}")
    rel = partition.related
    left = right = True
    congruence_cex = None
    for a, b in product(S.elements, repeat=2):
        if a >= b or not rel(a, b):
            continue
        for c in S.elements:
            if left and not rel(S.mul(c, a), S.mul(c, b)):
                left = False
                congruence_cex = congruence_cex or (a, b, c)
            if right and not rel(S.mul(a, c), S.mul(b, c)):
                right = False
                congruence_cex = congruence_cex or (a, b, c)

    laws_cex = None
    for a in S.elements:
        if not rel(a, S.mul(a, a)):
            laws_cex = (a,)
            break
    if laws_cex is None:
        for a, b in product(S.elements, repeat=2):
            if not rel(S.mul(a, b), S.mul(b, a)):
                laws_cex = (a, b)
                break
    semilattice = left and right and laws_cex is None

    complete_cex = None
    for a, b in product(S.elements, repeat=2):
        if S.leq[a][b] and not rel(a, S.mul(a, b)):
            complete_cex = (a, b)
            break

    return CongruenceCertificate(
        partition=partition,
        is_left_congruence=left,
        is_right_congruence=right,
        is_semilattice=semilattice,
        is_complete=semilattice and complete_cex is None,
        congruence_counterexample=congruence_cex,
        semilattice_counterexample=congruence_cex if not (left and right) else laws_cex,
        complete_counterexample=complete_cex,
    )


def restricted_growth_strings(n: int) -> Iterator[tuple[int, ...]]:
    """All set partitions of ``0..n-1`` as restricted-growth strings, in lexicographic order."""
    labels = [0] * n

    def extend(position: int, top: int) -> Iterator[tuple[int, ...]]:
        if position == n:
            yield tuple(labels)
            return
        for label in range(top + 2):
            labels[position] = label
            yield from extend(position + 1, max(top, label))

    yield from extend(1, 0)


@lru_cache(maxsize=16)
def _partitions_finest_first(n: int) -> tuple[Partition, ...]:
    ranked = sorted(restricted_growth_strings(n), key=lambda rgs: (-(max(rgs) + 1), rgs))
    return tuple(Partition.from_labels(rgs) for rgs in ranked)


@lru_cache(maxsize=4096)
def enumerate_semilattice_congruences(S: OrderedSemigroup) -> tuple[Partition, ...]:
    """Semilattice congruences, finest first; ties broken by restricted-growth string."""
    check_cap("partition enumeration", S.order, PARTITION_MAX)
    return tuple(p for p in _partitions_finest_first(S.order) if classify_partition(S, p).is_semilattice)


@lru_cache(maxsize=16384)
def semilattice_decomposition(
    S: OrderedSemigroup, class_predicate: ClassPredicate, *, require_complete: bool = False
) -> PredicateResult:
    """The coarsest semilattice congruence whose classes, as ordered semigroups in their own right, all pass ``class_predicate``."""
    for partition in reversed(enumerate_semilattice_congruences(S)):
        if require_complete and not classify_partition(S, partition).is_complete:
            continue
        witnesses = []
        for block in partition.classes:
            if not S.is_closed(block.bits):
                raise CongruenceClassNotClosed(S, block)
            if not class_predicate(S.substructure(block.bits)).holds:
                break
            witnesses.append(Witness(block.members()))
        else:
            return PredicateResult.success(witnesses, partition)
    return PredicateResult.failure()


def _as_result(ok: bool, counterexample) -> PredicateResult:
    return PredicateResult.success() if ok else PredicateResult.failure(counterexample or ())


def _contained(inner: Partition, outer: Partition) -> PredicateResult:
    for a, b in product(range(inner.size), repeat=2):
        if inner.related(a, b) and not outer.related(a, b):
            return PredicateResult.failure((a, b))
    return PredicateResult.success()


def _star_congruence(S: OrderedSemigroup, kind: str) -> tuple[PredicateResult, PredicateResult]:
    certificate = classify_partition(S, starred(S, kind))
    return (
        _as_result(certificate.is_congruence, certificate.congruence_counterexample),
        _as_result(certificate.is_semilattice, certificate.semilattice_counterexample),
    )


@lru_cache(maxsize=16384)
def theorem8_conditions(S: OrderedSemigroup, require_complete: bool = False) -> GatedConditions:
    congruence, semilattice = _star_congruence(S, "R")
    return GatedConditions(
        hypothesis=(("right-pi-inverse", right_pi_inverse_def(S)),),
        conditions=(
            congruence,
            _contained(starred(S, "L"), starred(S, "R")),
            semilattice_decomposition(S, right_pi_t_simple_direct, require_complete=require_complete),
            semilattice,
        ),
    )


def _all_equal(S: OrderedSemigroup) -> PredicateResult:
    l_star, r_star, h_star = starred(S, "L"), starred(S, "R"), starred(S, "H")
    for a, b in product(S.elements, repeat=2):
        if not (l_star.related(a, b) == r_star.related(a, b) == h_star.related(a, b)):
            return PredicateResult.failure((a, b))
    return PredicateResult.success()


@lru_cache(maxsize=16384)
def hstar_corollary_conditions(S: OrderedSemigroup, require_complete: bool = False) -> GatedConditions:
    congruence, semilattice = _star_congruence(S, "H")
    return GatedConditions(
        hypothesis=(("pi-inverse", pi_inverse_def(S)),),
        conditions=(
            congruence,
            _all_equal(S),
            semilattice_decomposition(S, pi_t_simple_direct, require_complete=require_complete),
            semilattice,
        ),
    )


@lru_cache(maxsize=16384)
def cpr_corollary_conditions(S: OrderedSemigroup) -> GatedConditions:
    congruence, _ = _star_congruence(S, "R")
    return GatedConditions(
        hypothesis=(
            ("right-pi-inverse", right_pi_inverse_def(S)),
            ("left-pi-regular", structure_predicate(S, "left-pi-regular")),
        ),
        conditions=(
            congruence,
            _contained(starred(S, "L"), starred(S, "R")),
            semilattice_decomposition(S, right_pi_t_simple_direct),
            conjunction(
                structure_predicate(S, "completely-pi-regular"),
                structure_predicate(S, "left-weakly-commutative"),
            ),
        ),
    )


def corollary_suites(S: OrderedSemigroup) -> dict[str, GatedConditions]:
    return {
        "cor-hstar": hstar_corollary_conditions(S),
        "cor-cpr": cpr_corollary_conditions(S),
    }


def pi_inverse_corollary_conditions(S: OrderedSemigroup) -> tuple[PredicateResult, PredicateResult]:
    """π-inverse, against being both left and right π-inverse."""
    return pi_inverse_def(S), conjunction(left_pi_inverse_def(S), right_pi_inverse_def(S))


def lemma7_condition(S: OrderedSemigroup) -> PredicateResult:
    """``a ℒ* b`` gives ``a'a^m ℛ* b'b^n`` for every choice of inverses of the smallest regular powers."""
    l_star, r_star = starred(S, "L"), starred(S, "R")
    profile = regularity_profile(S)
    inverses = inverse_bits(S)
    witnesses = []
    for a, b in product(S.elements, repeat=2):
        if not l_star.related(a, b):
            continue
        p, q = profile[a].regular_power, profile[b].regular_power
        for a_inv in iter_bits(inverses[p]):
            for b_inv in iter_bits(inverses[q]):
                if not r_star.related(S.mul(a_inv, p), S.mul(b_inv, q)):
                    return PredicateResult.failure((a, b, a_inv, b_inv))
        witnesses.append(Witness((a, b), None, (p, q)))
    return PredicateResult.success(witnesses)
