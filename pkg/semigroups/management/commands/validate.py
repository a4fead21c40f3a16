from __future__ import annotations

from django.core.management.base import BaseCommand, CommandError

from semigroups.structures import OrderedSemigroup, StructureShapeError
from semigroups.utils import EXIT_INVALID, EXIT_PARSE, StructureFileError, dump_json, load_structure


class Command(BaseCommand):
    help = "Check an ordered semigroup file against the axioms and print the validation report"

    def add_arguments(self, parser):
        parser.add_argument("path", help="JSON file in the structure format")

    def handle(self, *args, **options):
        try:
            outcome = load_structure(options["path"])
        except (StructureFileError, StructureShapeError) as exc:
            raise CommandError(str(exc), returncode=EXIT_PARSE) from exc

        if isinstance(outcome, OrderedSemigroup):
            self.stdout.write(dump_json({"ok": True, "violations": [], "structure_key": outcome.key}))
            self.stdout.write(self.style.SUCCESS(f"Valid ordered semigroup of order {outcome.order}."))
            return

        self.stdout.write(dump_json(outcome.as_dict()))
        raise CommandError(f"Invalid ordered semigroup: {outcome.summary()}", returncode=EXIT_INVALID)
