from unittest import mock

from django.test import SimpleTestCase

from semigroups.fixtures import LZ2, N2, RZ2, SL2, T1
from semigroups.results import PredicateResult
from verification.harness import (
    DISCREPANCY,
    EQUIVALENT,
    HYPOTHESIS_NOT_MET,
    SUITE_IDS,
    SUITES,
    Suite,
    SuiteOutcome,
    UnknownSuiteError,
    resolve_suite_ids,
    verify,
)


E, H = EQUIVALENT, HYPOTHESIS_NOT_MET

# one verdict per suite, in registry order
FIXTURE_VERDICTS = {
    "T1": (T1, (E,) * 15),
    "LZ2": (LZ2, (E, E, E, E, E, H, E, H, E, H, E, E, H, H, H)),
    "RZ2": (RZ2, (E, E, E, E, E, E, E, H, E, E, E, E, H, H, E)),
    "SL2": (SL2, (E, E, E, E, E, E, E, H, E, E, E, E, H, E, E)),
    "N2": (N2, (E, E, E, E, H, E, H, E, E, E, E, E, E, E, E)),
}


def _split_suite(S):
    return SuiteOutcome(
        hypothesis=(("always", PredicateResult.success()),),
        conditions=((1, PredicateResult.success()), (2, PredicateResult.failure((0,)))),
    )


class RegistryTests(SimpleTestCase):
    def test_registry_lists_every_suite(self):
        self.assertEqual(
            SUITE_IDS,
            (
                "thm2", "thm4", "thm5", "thm6", "thm7-open", "thm8", "thm51", "thm-wc",
                "lemma3", "lemma7", "cor1", "cor-pi-inverse", "cor-pi-t-simple", "cor-hstar", "cor-cpr",
            ),
        )
        self.assertEqual({SUITES[i].kind for i in SUITE_IDS}, {"equivalence", "implication"})

    def test_resolve_keeps_registry_order(self):
        self.assertEqual(resolve_suite_ids("thm4, thm2"), ("thm2", "thm4"))
        self.assertEqual(resolve_suite_ids(["lemma7", "thm8"]), ("thm8", "lemma7"))
        self.assertEqual(resolve_suite_ids("all"), SUITE_IDS)
        self.assertEqual(resolve_suite_ids(""), SUITE_IDS)

    def test_unknown_suite(self):
        with self.assertRaises(UnknownSuiteError) as ctx:
            resolve_suite_ids("thm2,thm99")
        self.assertIn("unknown theorem id 'thm99'", str(ctx.exception))

        with self.assertRaises(UnknownSuiteError):
            verify(T1, "thm99")


class VerdictTests(SimpleTestCase):
    def test_all_conditions_false_is_equivalent(self):
        report = verify(SL2, "thm2")

        self.assertEqual(report.verdict, EQUIVALENT)
        self.assertEqual(report.one_line(), "thm2: equivalent [00000000]")
        self.assertEqual(report.conditions[3].witness, {"counterexample": [1, 0]})
        self.assertEqual(report.structure_key, SL2.key)

    def test_all_conditions_true_is_equivalent(self):
        report = verify(LZ2, "thm2")

        self.assertEqual(report.one_line(), "thm2: equivalent [11111111]")

    def test_failed_hypothesis(self):
        report = verify(N2, "thm7-open")

        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertEqual(report.hypothesis, (("regular", False),))

    def test_implication_with_false_antecedent(self):
        report = verify(LZ2, "lemma7")

        self.assertEqual(report.verdict, HYPOTHESIS_NOT_MET)
        self.assertEqual([c.index for c in report.conditions], [1, 2])

    def test_cor1_renumbers_conditions(self):
        report = verify(SL2, "cor1")

        self.assertEqual([c.index for c in report.conditions], [1, 2, 3, 4, 5])
        self.assertEqual(report.conditions[2].witness, {"counterexample": [1, 0]})

    def test_discrepancy_is_logged(self):
        with mock.patch.dict(SUITES, {"split": Suite("split", "split", "equivalence", _split_suite)}):
            with self.assertLogs("verification.harness", level="WARNING") as logs:
                report = verify(LZ2, "split")

        self.assertTrue(report.is_discrepancy)
        self.assertEqual(report.verdict, DISCREPANCY)
        self.assertEqual(report.one_line(), "split: DISCREPANCY [10]")
        self.assertIn("DISCREPANCY in split", logs.output[0])

    def test_reports_are_deterministic(self):
        for theorem_id in SUITE_IDS:
            with self.subTest(theorem_id=theorem_id):
                self.assertEqual(verify(N2, theorem_id).to_dict(), verify(N2, theorem_id).to_dict())

    def test_fixture_verdicts(self):
        for name, (S, expected) in FIXTURE_VERDICTS.items():
            with self.subTest(structure=name):
                self.assertEqual(tuple(verify(S, theorem_id).verdict for theorem_id in SUITE_IDS), expected)

    def test_small_fixtures_have_no_discrepancies(self):
        for S in (T1, LZ2, SL2, N2):
            for theorem_id in SUITE_IDS:
                self.assertNotEqual(verify(S, theorem_id).verdict, DISCREPANCY, msg=f"{theorem_id} on {S.key}")
