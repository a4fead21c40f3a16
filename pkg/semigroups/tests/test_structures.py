from django.test import SimpleTestCase

from semigroups.fixtures import LZ2, N2, RZ2, SL2, T1
from semigroups.structures import (
    InvalidStructureError,
    OrderedSemigroup,
    SizeCapExceeded,
    StructureShapeError,
    SubsetMask,
    ValidationReport,
    check_cap,
    discrete_order,
    downward_closure,
    power_profile,
    principal_ideal,
    subset_product,
    validate,
)

CHAIN = [[True, True], [False, True]]
# the two-element group
Z2 = [[0, 1], [1, 0]]


class ValidateTests(SimpleTestCase):
    def test_semilattice_chain_is_valid(self):
        structure = validate([[0, 0], [0, 1]], CHAIN)

        self.assertIsInstance(structure, OrderedSemigroup)
        self.assertEqual(structure, SL2)

    def test_left_zero_with_comparable_elements_is_valid(self):
        structure = validate([[0, 0], [1, 1]], CHAIN)

        self.assertIsInstance(structure, OrderedSemigroup)
        self.assertFalse(structure.is_discrete)

    def test_first_associativity_failure_is_reported(self):
        report = validate([[1, 0], [0, 0]], discrete_order(2))

        self.assertIsInstance(report, ValidationReport)
        self.assertFalse(report.ok)
        self.assertEqual(report.axioms, ("associativity",))
        self.assertEqual(report.violations[0].witness, (0, 0, 1))

    def test_compatibility_failures_name_both_sides(self):
        report = validate(Z2, CHAIN)

        self.assertEqual(report.axioms, ("left-compatibility", "right-compatibility"))
        self.assertEqual(report.violations[0].witness, (0, 1, 1))
        self.assertEqual(report.violations[1].witness, (0, 1, 1))

    def test_antisymmetry_failure(self):
        report = validate([[0, 0], [0, 0]], [[True, True], [True, True]])

        self.assertEqual(report.axioms, ("antisymmetry",))
        self.assertEqual(report.violations[0].witness, (0, 1))

    def test_reflexivity_and_transitivity_failures(self):
        leq = [
            [True, True, False],
            [False, True, True],
            [False, False, False],
        ]
        report = validate([[0, 0, 0]] * 3, leq)

        self.assertIn("reflexivity", report.axioms)
        self.assertIn("transitivity", report.axioms)
        self.assertEqual(report.as_dict()["ok"], False)

    def test_strict_mode_raises_with_report(self):
        with self.assertRaises(InvalidStructureError) as ctx:
            validate([[1, 0], [0, 0]], discrete_order(2), strict=True)
        self.assertEqual(ctx.exception.report.axioms, ("associativity",))

    def test_shape_errors(self):
        with self.assertRaises(StructureShapeError):
            validate([], [])
        with self.assertRaises(StructureShapeError):
            validate([[0, 1]], discrete_order(1))
        with self.assertRaises(StructureShapeError):
            validate([[0, 2], [0, 0]], discrete_order(2))
        with self.assertRaises(StructureShapeError):
            validate([[0, 0], [0, 0]], discrete_order(3))
        with self.assertRaises(StructureShapeError):
            validate([[0, 0], [0, 0]], [[True, False]])

    def test_fixtures_are_valid(self):
        for structure in (T1, LZ2, RZ2, SL2, N2):
            self.assertTrue(validate(structure.table, structure.leq).order >= 1)


class ClosureCalculusTests(SimpleTestCase):
    def test_downward_closure(self):
        self.assertEqual(downward_closure(SL2, SubsetMask.of(2, [1])).members(), (0, 1))
        self.assertEqual(downward_closure(LZ2, SubsetMask.of(2, [0])).members(), (0,))
        self.assertEqual(len(downward_closure(SL2, SubsetMask.empty(2))), 0)

    def test_subset_product(self):
        self.assertEqual(subset_product(LZ2, SubsetMask.full(2), SubsetMask.of(2, [0])).members(), (0, 1))
        self.assertEqual(subset_product(N2, SubsetMask.full(2), SubsetMask.full(2)).members(), (0,))
        self.assertEqual(subset_product(SL2, SubsetMask.of(2, [1]), SubsetMask.of(2, [0])).members(), (0,))

    def test_mask_size_must_match(self):
        with self.assertRaises(StructureShapeError):
            downward_closure(SL2, SubsetMask.full(3))

    def test_principal_ideals(self):
        self.assertEqual(principal_ideal(LZ2, 1, "left").members(), (0, 1))
        self.assertEqual(principal_ideal(RZ2, 1, "left").members(), (1,))
        self.assertEqual(principal_ideal(SL2, 0, "two_sided").members(), (0,))
        self.assertEqual(principal_ideal(SL2, 1, "bi").members(), (0, 1))
        self.assertEqual(principal_ideal(LZ2, 0, "bi").members(), (0,))

    def test_principal_ideal_rejects_unknown_kind(self):
        with self.assertRaises(ValueError):
            principal_ideal(SL2, 0, "middle")


class PowerProfileTests(SimpleTestCase):
    def test_null_semigroup(self):
        profile = power_profile(N2, 1)

        self.assertEqual((profile.index, profile.period), (2, 1))
        self.assertEqual(profile.distinct_powers, (1, 0))

    def test_idempotents(self):
        self.assertEqual(power_profile(SL2, 1).distinct_powers, (1,))
        for a in LZ2.elements:
            profile = power_profile(LZ2, a)
            self.assertEqual((profile.index, profile.period), (1, 1))

    def test_cyclic_powers(self):
        group = validate(Z2, discrete_order(2))
        profile = power_profile(group, 1)

        self.assertEqual((profile.index, profile.period), (1, 2))
        self.assertEqual(list(profile.exponents), [1, 2])
        self.assertEqual(profile.power(3), 1)
        self.assertEqual(group.exponent_horizon, 2)


class CapTests(SimpleTestCase):
    def test_cap_exceeded(self):
        with self.assertRaises(SizeCapExceeded):
            check_cap("subset search", 13, 12)
        check_cap("subset search", 12, 12)

    def test_structure_key_is_stable(self):
        self.assertEqual(SL2.key, "2:0001:1101")
        self.assertEqual(SL2.as_dict(), {"order": 2, "table": [[0, 0], [0, 1]], "leq": CHAIN})
