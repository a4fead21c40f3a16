from __future__ import annotations

import logging

from django.db import transaction

from semigroups.congruences import classify_partition, enumerate_semilattice_congruences
from semigroups.predicates import (
    KERNEL_TAGS,
    PREDICATE_NAMES,
    left_pi_t_simple_direct,
    nil_extension_search,
    structure_predicate,
)
from semigroups.relations import GREEN_KINDS, green, ordered_idempotents, regularity_profile, starred
from semigroups.structures import IDEAL_KINDS, OrderedSemigroup, principal_ideal
from verification.harness import SUITE_IDS, verify
from verification.models import DiscrepancyRecord, RunStatus, SuiteRun
from verification.runner import SuiteReport

logger = logging.getLogger(__name__)


def build_profile(S: OrderedSemigroup) -> dict:
    """Everything the toolkit can say about one structure, as plain JSON data."""
    regularity = regularity_profile(S)
    suites = {}
    for theorem_id in SUITE_IDS:
        report = verify(S, theorem_id)
        suites[theorem_id] = {
            "verdict": report.verdict,
            "hypothesis": dict(report.hypothesis),
            "conditions": [c.holds for c in report.conditions],
            "observations": list(report.observations),
        }
    return {
        "structure": S.as_dict(),
        "structure_key": S.key,
        "ordered_idempotents": list(ordered_idempotents(S)),
        "element_sets": {
            "regular": list(regularity.regular_elements),
            "completely_regular": list(regularity.completely_regular_elements),
            "intra_regular": list(regularity.intra_regular_elements),
        },
        "power_profiles": [p.as_dict() for p in S.power_profiles],
        "principal_ideals": {
            kind: [list(principal_ideal(S, a, kind)) for a in S.elements] for kind in IDEAL_KINDS
        },
        "green": {kind: green(S, kind).as_lists() for kind in GREEN_KINDS},
        "starred": {kind: starred(S, kind).as_lists() for kind in GREEN_KINDS},
        "regularity": [entry.as_dict() for entry in regularity.entries],
        "predicates": {name: structure_predicate(S, name).holds for name in PREDICATE_NAMES},
        "kernels": {
            "left_pi_t_simple": left_pi_t_simple_direct(S).as_dict(),
            "nil_extension": {tag: nil_extension_search(S, tag).as_dict() for tag in KERNEL_TAGS},
        },
        "semilattice_congruences": [
            classify_partition(S, partition).as_dict() for partition in enumerate_semilattice_congruences(S)
        ],
        "suites": suites,
    }


@transaction.atomic
def record_suite_run(report: SuiteReport) -> SuiteRun:
    data = report.to_dict()
    run = SuiteRun.objects.create(
        theorem_ids=list(report.config.theorem_ids),
        max_order=report.config.max_order,
        samples=report.config.samples,
        seed=report.config.seed,
        workers=report.config.workers,
        fail_fast=report.config.fail_fast,
        structure_count=report.structure_count,
        totals=data["totals"],
        discrepancy_count=len(report.discrepancies),
        stopped_early=report.stopped_early,
        status=RunStatus.PASSED if report.ok else RunStatus.FAILED,
        elapsed_seconds=round(report.elapsed, 3),
    )
    DiscrepancyRecord.objects.bulk_create(
        DiscrepancyRecord(
            run=run,
            theorem=entry.theorem,
            structure_key=structure.key,
            structure=structure.as_dict(),
            report=entry.to_dict(),
        )
        for entry, structure in report.discrepancies
    )
    logger.info("recorded suite run %s (%s)", run.pk, run.status)
    return run
