from unittest import mock

from django.test import TestCase

from verification.models import RunStatus, SuiteRun
from verification.runner import SuiteReport, VerificationConfig
from verification.tasks import run_verification_suite


class RunVerificationSuiteTaskTests(TestCase):
    def test_runs_and_records(self):
        run_id = run_verification_suite("thm2,thm5", max_order=2, samples=0)

        run = SuiteRun.objects.get(pk=run_id)
        self.assertEqual(run.status, RunStatus.PASSED)
        self.assertEqual(run.theorem_ids, ["thm2", "thm5"])
        self.assertEqual(run.structure_count, 21)

    @mock.patch("verification.tasks.run_suite")
    def test_passes_configuration_through(self, mock_run_suite):
        mock_run_suite.side_effect = lambda config: SuiteReport(config=config)

        run_id = run_verification_suite(["lemma3"], max_order=3, samples=5, seed=42, fail_fast=True)

        config = mock_run_suite.call_args.args[0]
        self.assertIsInstance(config, VerificationConfig)
        self.assertEqual(config.theorem_ids, ("lemma3",))
        self.assertEqual((config.max_order, config.samples, config.seed, config.fail_fast), (3, 5, 42, True))
        self.assertEqual(SuiteRun.objects.get(pk=run_id).max_order, 3)

    @mock.patch("verification.tasks.run_suite")
    def test_defaults_come_from_settings(self, mock_run_suite):
        mock_run_suite.side_effect = lambda config: SuiteReport(config=config)

        with mock.patch("verification.tasks.ORDER4_SAMPLES", 7), mock.patch("verification.tasks.SAMPLE_SEED", 99):
            run_verification_suite("all", max_order=1)

        config = mock_run_suite.call_args.args[0]
        self.assertEqual((config.samples, config.seed), (7, 99))
