from __future__ import annotations

import tempfile
from pathlib import Path

from django.core.management.base import BaseCommand, CommandError

from catalog.enumeration import (
    ORDER_MODES,
    GenerationConfig,
    SamplingBudgetExhausted,
    enumerate_ordered_semigroups,
    random_ordered_semigroups,
)
from semigroups.structures import SizeCapExceeded
from semigroups.utils import EXIT_USAGE, dump_json, write_ndjson


class Command(BaseCommand):
    help = "Write ordered semigroups of one order as newline-delimited JSON, with a manifest"

    def add_arguments(self, parser):
        parser.add_argument("--order", type=int, required=True, help="Number of elements.")
        parser.add_argument("--orders", choices=ORDER_MODES, default="all", help="Every compatible order or only the discrete one.")
        parser.add_argument("--up-to-iso", action="store_true", help="Keep one structure per isomorphism class.")
        parser.add_argument("--limit", type=int, help="Stop after this many structures.")
        parser.add_argument("--seed", type=int, help="Sample --limit random structures (default 1) instead of enumerating.")
        parser.add_argument("--out", help="Output file. Standard output when omitted; the manifest then goes to standard error.")

    def handle(self, *args, **options):
        try:
            config = GenerationConfig(
                order=options["order"],
                up_to_iso=options["up_to_iso"],
                order_mode=options["orders"],
                seed=options["seed"],
                limit=options["limit"],
            )
        except ValueError as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc

        if config.seed is not None:
            mode, structures = "random", random_ordered_semigroups(config)
        else:
            mode, structures = "exhaustive", enumerate_ordered_semigroups(config)

        out = options["out"]
        try:
            if out:
                count = self.write_file(Path(out), structures)
            else:
                count = write_ndjson(self.stdout, structures)
        except SizeCapExceeded as exc:
            raise CommandError(str(exc), returncode=EXIT_USAGE) from exc
        except SamplingBudgetExhausted as exc:
            raise CommandError(str(exc)) from exc

        manifest = dump_json({"config": config.as_dict(), "mode": mode, "count": count})
        if out:
            manifest_path = Path(f"{out}.manifest.json")
            manifest_path.write_text(manifest + "\n", encoding="utf-8")
            self.stdout.write(self.style.SUCCESS(f"Wrote {count} structure(s) to {out} (manifest {manifest_path})."))
        else:
            self.stderr.write(manifest)

    def write_file(self, target: Path, structures) -> int:
        """Write through a sibling temporary file so a failed run leaves no partial output behind."""
        handle = tempfile.NamedTemporaryFile(
            "w", encoding="utf-8", dir=target.parent, prefix=f".{target.name}.", suffix=".part", delete=False
        )
        partial = Path(handle.name)
        try:
            with handle:
                count = write_ndjson(handle, structures)
            partial.replace(target)
        except BaseException:
            partial.unlink(missing_ok=True)
            raise
        return count
