import logging

from celery import shared_task

from verification.runner import ORDER4_SAMPLES, SAMPLE_SEED, VerificationConfig, run_suite
from verification.services import record_suite_run

logger = logging.getLogger(__name__)


@shared_task
def run_verification_suite(theorem_ids, max_order: int, samples: int | None = None, seed: int | None = None, fail_fast: bool = False) -> int:
    """Run the given suites over the catalog up to ``max_order`` and store the outcome; returns the run id."""
    config = VerificationConfig(
        theorem_ids=theorem_ids,
        max_order=max_order,
        samples=ORDER4_SAMPLES if samples is None else samples,
        seed=SAMPLE_SEED if seed is None else seed,
        fail_fast=fail_fast,
    )
    report = run_suite(config)
    run = record_suite_run(report)
    if not report.ok:
        logger.warning("suite run %s found %d discrepancies", run.pk, run.discrepancy_count)
    return run.pk
