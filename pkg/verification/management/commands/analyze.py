from __future__ import annotations

from django.core.management.base import BaseCommand, CommandError
from tabulate import tabulate

from semigroups.structures import OrderedSemigroup, SizeCapExceeded, StructureShapeError
from semigroups.utils import (
    EXIT_INVALID,
    EXIT_PARSE,
    EXIT_USAGE,
    StructureFileError,
    dump_json,
    load_structure,
)
from verification.services import build_profile


def _mark(flag: bool) -> str:
    return "✓" if flag else "✗"


def _classes(lists) -> str:
    return " | ".join("{" + ",".join(str(x) for x in block) + "}" for block in lists)


def _certificate_members(result: dict) -> str:
    certificate = result.get("certificate") or {}
    members = certificate.get("members", certificate.get("kernel"))
    return "{" + ",".join(str(x) for x in members) + "}" if members is not None else "-"


class Command(BaseCommand):
    help = "Print the full profile of an ordered semigroup: idempotents, relations, regularity, predicates, suites"

    def add_arguments(self, parser):
        parser.add_argument("path", help="JSON file in the structure format")
        parser.add_argument("--json", action="store_true", help="Emit the profile as JSON.")

    def handle(self, *args, **options):
        try:
            outcome = load_structure(options["path"])
        except (StructureFileError, StructureShapeError) as exc:
            raise CommandError(str(exc), returncode=EXIT_PARSE) from exc
        if not isinstance(outcome, OrderedSemigroup):
            self.stdout.write(dump_json(outcome.as_dict()))
            raise CommandError(f"Invalid ordered semigroup: {outcome.summary()}", returncode=EXIT_INVALID)

        try:
            profile = build_profile(outcome)
        except SizeCapExceeded as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

        if options["json"]:
            self.stdout.write(dump_json(profile))
            return
        self.stdout.write(self.render(profile))

    def render(self, profile: dict) -> str:
        idempotents = set(profile["ordered_idempotents"])
        sets = {name: set(members) for name, members in profile["element_sets"].items()}
        elements = [
            [
                entry["element"],
                _mark(entry["element"] in idempotents),
                _mark(entry["element"] in sets["regular"]),
                _mark(entry["element"] in sets["completely_regular"]),
                _mark(entry["element"] in sets["intra_regular"]),
                entry["smallest_regular_power"],
                entry["inverse"],
            ]
            for entry in profile["regularity"]
        ]
        relations = [
            [kind, _classes(profile["green"][kind]), _classes(profile["starred"][kind])] for kind in profile["green"]
        ]
        predicates = [[name, _mark(holds)] for name, holds in profile["predicates"].items()]
        kernels = [["left-pi-t-simple", _mark(profile["kernels"]["left_pi_t_simple"]["holds"]), _certificate_members(profile["kernels"]["left_pi_t_simple"])]]
        kernels += [
            [f"nil-extension ({tag})", _mark(result["holds"]), _certificate_members(result)]
            for tag, result in profile["kernels"]["nil_extension"].items()
        ]
        congruences = [
            [_classes(c["classes"]), _mark(c["is_complete"])] for c in profile["semilattice_congruences"]
        ]
        suites = [
            [theorem_id, suite["verdict"], "".join("1" if v else "0" for v in suite["conditions"])]
            for theorem_id, suite in profile["suites"].items()
        ]
        structure = profile["structure"]
        blocks = [
            f"structure {profile['structure_key']} (order {structure['order']})",
            tabulate(structure["table"], headers=["·"] + list(range(structure["order"])), showindex=True),
            tabulate(elements, headers=["a", "e≤e²", "regular", "compl. regular", "intra-regular", "reg. power", "inverse"]),
            tabulate(relations, headers=["relation", "Green", "starred"]),
            tabulate(predicates, headers=["predicate", "holds"]),
            tabulate(kernels, headers=["search", "holds", "subset"]),
            tabulate(congruences, headers=["semilattice congruence", "complete"]),
            tabulate(suites, headers=["suite", "verdict", "conditions"]),
        ]
        return "\n\n".join(blocks)
