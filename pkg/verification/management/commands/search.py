from __future__ import annotations

from django.core.management.base import BaseCommand, CommandError

from semigroups.predicates import UnknownPredicateError
from semigroups.structures import SizeCapExceeded
from semigroups.utils import EXIT_USAGE, dump_json
from verification.runner import search_model


def _names(raw: str) -> list[str]:
    return [part for part in raw.split(",") if part.strip()]


class Command(BaseCommand):
    help = "Find the first ordered semigroup, in enumeration order, that satisfies and violates the given predicates"

    def add_arguments(self, parser):
        parser.add_argument("--satisfy", default="", help="Comma-separated predicates that must hold.")
        parser.add_argument("--violate", default="", help="Comma-separated predicates that must fail.")
        parser.add_argument("--max-order", type=int, required=True)

    def handle(self, *args, **options):
        try:
            result = search_model(_names(options["satisfy"]), _names(options["violate"]), options["max_order"])
        except UnknownPredicateError as exc:
            raise CommandError(f"unknown predicate {exc.args[0]!r}", returncode=EXIT_USAGE) from exc
        except SizeCapExceeded as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

        self.stdout.write(dump_json(result.to_dict(), indent=None))
        if not result.found:
            self.stderr.write(f"No match among {result.examined} structure(s) up to order {result.max_order}.")
