from __future__ import annotations

from django.core.management.base import BaseCommand, CommandError
from tabulate import tabulate

from semigroups.structures import SizeCapExceeded
from semigroups.utils import EXIT_DISCREPANCY, EXIT_USAGE, dump_json
from verification.harness import VERDICTS, UnknownSuiteError
from verification.runner import ORDER4_SAMPLES, SAMPLE_SEED, WORKERS, VerificationConfig, run_suite
from verification.services import record_suite_run


class Command(BaseCommand):
    help = "Run theorem suites over every ordered semigroup up to a given order; exits 3 on any discrepancy"

    def add_arguments(self, parser):
        parser.add_argument("--theorem", default="all", help="Suite id, comma-separated ids, or 'all'.")
        parser.add_argument("--max-order", type=int, required=True, help="Largest carrier size to check.")
        parser.add_argument("--fail-fast", action="store_true", help="Stop at the first structure with a discrepancy.")
        parser.add_argument("--json", action="store_true", help="Print the suite report as JSON.")
        parser.add_argument("--record", action="store_true", help="Store the run and its discrepancies in the database.")
        parser.add_argument("--samples", type=int, default=ORDER4_SAMPLES, help="Nontrivial-order samples per order above 3.")
        parser.add_argument("--seed", type=int, default=SAMPLE_SEED, help="Base seed for those samples.")
        parser.add_argument("--workers", type=int, default=WORKERS, help="Worker processes.")

    def handle(self, *args, **options):
        try:
            config = VerificationConfig(
                theorem_ids=options["theorem"],
                max_order=options["max_order"],
                samples=options["samples"],
                seed=options["seed"],
                workers=options["workers"],
                fail_fast=options["fail_fast"],
            )
            report = run_suite(config)
        except UnknownSuiteError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except (SizeCapExceeded, ValueError) as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

        if options["json"]:
            self.stdout.write(dump_json(report.to_dict()))
        else:
            self.stdout.write(tabulate(report.total_rows(), headers=["suite", *VERDICTS]))
            self.stdout.write(f"{report.structure_count} structure(s) checked up to order {config.max_order}.")
            for entry, structure in report.discrepancies:
                self.stdout.write(self.style.ERROR(entry.one_line()))
                self.stdout.write(dump_json(structure.as_dict(), indent=None))
                self.stdout.write(dump_json(entry.to_dict()))

        if options["record"]:
            run = record_suite_run(report)
            self.stdout.write(self.style.SUCCESS(f"Recorded suite run {run.pk}."))

        if not report.ok:
            raise CommandError(f"{len(report.discrepancies)} discrepancy verdict(s).", returncode=EXIT_DISCREPANCY)
        if not options["json"]:
            self.stdout.write(self.style.SUCCESS("No discrepancies."))
