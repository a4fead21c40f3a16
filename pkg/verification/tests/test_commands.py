import json
import tempfile
from io import StringIO
from pathlib import Path
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import TestCase

from semigroups.utils import EXIT_DISCREPANCY, EXIT_INVALID, EXIT_PARSE, EXIT_USAGE
from verification.harness import DISCREPANCY, EquivalenceReport
from verification.models import DiscrepancyRecord, SuiteRun


def _discrepancy(S, theorem_id):
    return EquivalenceReport(theorem=theorem_id, structure_key=S.key, hypothesis=(), conditions=(), verdict=DISCREPANCY)


class VerifyCommandTests(TestCase):
    def run_command(self, *args):
        out = StringIO()
        call_command("verify", *args, stdout=out)
        return out.getvalue()

    def test_clean_run(self):
        out = self.run_command("--max-order", "2", "--samples", "0")

        self.assertIn("21 structure(s) checked up to order 2.", out)
        self.assertIn("cor-cpr", out)
        self.assertIn("No discrepancies.", out)

    def test_json_report(self):
        out = self.run_command("--theorem", "thm2,thm6", "--max-order", "2", "--json")

        data = json.loads(out)
        self.assertEqual(data["structure_count"], 21)
        self.assertEqual(data["discrepancy_count"], 0)
        self.assertEqual(list(data["totals"]), ["thm2", "thm6"])
        self.assertNotIn("workers", data["config"])

    def test_record(self):
        out = self.run_command("--theorem", "thm2", "--max-order", "1", "--record")

        run = SuiteRun.objects.get()
        self.assertIn(f"Recorded suite run {run.pk}.", out)
        self.assertEqual(run.structure_count, 1)

    def test_usage_errors_exit_64(self):
        for args in (("--theorem", "thm99", "--max-order", "2"), ("--max-order", "50"), ("--max-order", "0")):
            with self.subTest(args=args):
                with self.assertRaises(CommandError) as ctx:
                    self.run_command(*args)
                self.assertEqual(ctx.exception.returncode, EXIT_USAGE)

    @mock.patch("verification.runner.verify", side_effect=_discrepancy)
    def test_discrepancy_exits_3(self, mock_verify):
        out = StringIO()

        with self.assertRaises(CommandError) as ctx:
            call_command("verify", "--theorem", "thm2", "--max-order", "1", "--fail-fast", "--record", stdout=out)

        self.assertEqual(ctx.exception.returncode, EXIT_DISCREPANCY)
        self.assertIn("thm2: DISCREPANCY []", out.getvalue())
        self.assertEqual(DiscrepancyRecord.objects.count(), 1)


class AnalyzeCommandTests(TestCase):
    def setUp(self):
        tmp = tempfile.TemporaryDirectory()
        self.addCleanup(tmp.cleanup)
        self.tmp = Path(tmp.name)

    def write(self, data):
        path = self.tmp / "structure.json"
        path.write_text(json.dumps(data), encoding="utf-8")
        return str(path)

    def test_json_profile(self):
        path = self.write({"order": 2, "table": [[0, 0], [1, 1]], "leq": [[True, False], [False, True]]})
        out = StringIO()

        call_command("analyze", path, "--json", stdout=out)

        profile = json.loads(out.getvalue())
        self.assertEqual(profile["structure_key"], "2:0011:1001")
        self.assertTrue(profile["predicates"]["left-simple"])
        self.assertEqual(profile["suites"]["thm2"]["verdict"], "equivalent")

    def test_text_profile(self):
        path = self.write({"order": 2, "table": [[0, 0], [0, 1]], "leq": [[True, True], [False, True]]})
        out = StringIO()

        call_command("analyze", path, stdout=out)

        text = out.getvalue()
        self.assertIn("structure 2:0001:1101 (order 2)", text)
        self.assertIn("left-pi-t-simple", text)
        self.assertIn("hypothesis_not_met", text)

    def test_invalid_structure_exits_1(self):
        path = self.write({"order": 2, "table": [[1, 0], [0, 0]], "leq": [[True, False], [False, True]]})

        with self.assertRaises(CommandError) as ctx:
            call_command("analyze", path, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_INVALID)

    def test_parse_error_exits_2(self):
        path = self.write({"order": 2})

        with self.assertRaises(CommandError) as ctx:
            call_command("analyze", path, stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_PARSE)


class SearchCommandTests(TestCase):
    def test_finds_a_model(self):
        out = StringIO()

        call_command("search", "--satisfy", "left-simple", "--violate", "right-simple", "--max-order", "2", stdout=out)

        data = json.loads(out.getvalue())
        self.assertTrue(data["found"])
        self.assertEqual(data["structure"]["table"], [[0, 0], [1, 1]])

    def test_reports_a_miss_on_stderr(self):
        out, err = StringIO(), StringIO()

        call_command("search", "--satisfy", "regular", "--violate", "regular", "--max-order", "1", stdout=out, stderr=err)

        self.assertFalse(json.loads(out.getvalue())["found"])
        self.assertIn("No match among 1 structure(s) up to order 1.", err.getvalue())

    def test_unknown_predicate_exits_64(self):
        with self.assertRaises(CommandError) as ctx:
            call_command("search", "--satisfy", "abelian", "--max-order", "2", stdout=StringIO())
        self.assertEqual(ctx.exception.returncode, EXIT_USAGE)
