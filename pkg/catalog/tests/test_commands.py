import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from semigroups.fixtures import T1
from semigroups.structures import OrderedSemigroup, SizeCapExceeded, validate
from semigroups.utils import EXIT_USAGE


class EnumerateCommandTests(SimpleTestCase):
    def run_command(self, *args):
        out, err = StringIO(), StringIO()
        call_command("enumerate", *args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()

    def test_writes_ndjson_and_manifest_to_standard_streams(self):
        out, err = self.run_command("--order", "2")

        lines = out.splitlines()
        self.assertEqual(len(lines), 20)
        for line in lines:
            data = json.loads(line)
            self.assertIsInstance(validate(data["table"], data["leq"]), OrderedSemigroup)
        manifest = json.loads(err)
        self.assertEqual(manifest["mode"], "exhaustive")
        self.assertEqual(manifest["count"], 20)
        self.assertEqual(manifest["config"]["order"], 2)

    def test_up_to_iso_discrete(self):
        out, err = self.run_command("--order", "2", "--up-to-iso", "--orders", "discrete")

        self.assertEqual(len(out.splitlines()), 5)
        self.assertEqual(json.loads(err)["count"], 5)

    def test_out_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "order3.ndjson"

            out, _ = self.run_command("--order", "3", "--limit", "10", "--out", str(target))

            self.assertEqual(len(target.read_text(encoding="utf-8").splitlines()), 10)
            manifest = json.loads(Path(f"{target}.manifest.json").read_text(encoding="utf-8"))
            self.assertEqual(manifest["count"], 10)
            self.assertIn("Wrote 10 structure(s)", out)

    def test_failed_run_leaves_no_file(self):
        def interrupted(config):
            yield T1
            raise SizeCapExceeded("exhaustive table enumeration", 3, 2)

        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "order3.ndjson"

            with mock.patch("catalog.management.commands.enumerate.enumerate_ordered_semigroups", interrupted):
                with self.assertRaises(CommandError) as ctx:
                    self.run_command("--order", "3", "--out", str(target))
            with self.assertRaises(CommandError):
                self.run_command("--order", "9", "--out", str(target))

            self.assertEqual(ctx.exception.returncode, EXIT_USAGE)
            self.assertEqual(list(Path(tmp).iterdir()), [])

    def test_random_mode_is_reproducible(self):
        first, err = self.run_command("--order", "3", "--seed", "5", "--limit", "3")
        second, _ = self.run_command("--order", "3", "--seed", "5", "--limit", "3")

        self.assertEqual(first, second)
        self.assertEqual(len(first.splitlines()), 3)
        self.assertEqual(json.loads(err)["mode"], "random")

    def test_usage_errors_exit_64(self):
        for args in (("--order", "0"), ("--order", "2", "--limit", "0"), ("--order", "9")):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    self.run_command(*args)
                self.assertEqual(ctx.exception.returncode, EXIT_USAGE)
