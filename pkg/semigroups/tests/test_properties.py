"""Structural laws checked over every ordered semigroup of order at most three."""

from itertools import product

from django.test import SimpleTestCase

from catalog.enumeration import GenerationConfig, enumerate_ordered_semigroups
from semigroups.congruences import enumerate_semilattice_congruences
from semigroups.predicates import (
    left_pi_t_simple_direct,
    right_pi_inverse_def,
    structure_predicate,
    theorem2_conditions,
    theorem5_conditions,
    theorem6_condition,
)
from semigroups.relations import GREEN_KINDS, green, ordered_idempotents, regularity_profile, starred
from semigroups.structures import IDEAL_KINDS, SubsetMask, downward_closure, principal_ideal, validate


def _all_structures(max_order=3):
    for n in range(1, max_order + 1):
        yield from enumerate_ordered_semigroups(GenerationConfig(order=n))


class ClosureLawTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.structures = list(_all_structures())

    def test_enumerated_structures_validate(self):
        for S in self.structures:
            self.assertEqual(validate(S.table, S.leq), S)

    def test_downward_closure_is_extensive_and_idempotent(self):
        for S in self.structures:
            for bits in range(1 << S.order):
                subset = SubsetMask(bits, S.order)
                closed = downward_closure(S, subset)
                self.assertTrue(subset.issubset(closed))
                self.assertEqual(downward_closure(S, closed), closed)

    def test_downward_closure_is_monotone(self):
        for S in self.structures:
            closures = [downward_closure(S, SubsetMask(bits, S.order)) for bits in range(1 << S.order)]
            for smaller, larger in product(range(1 << S.order), repeat=2):
                if smaller & ~larger == 0:
                    self.assertTrue(closures[smaller].issubset(closures[larger]), msg=f"{S.key} {smaller} {larger}")

    def test_principal_ideals(self):
        for S in self.structures:
            for a in S.elements:
                ideals = {kind: principal_ideal(S, a, kind) for kind in IDEAL_KINDS}
                for kind, ideal in ideals.items():
                    self.assertIn(a, ideal, msg=f"{S.key} {kind}({a})")
                    self.assertTrue(S.is_down_closed(ideal.bits))
                self.assertTrue(ideals["left"].issubset(ideals["two_sided"]))
                self.assertTrue(ideals["right"].issubset(ideals["two_sided"]))
                self.assertTrue(ideals["bi"].issubset(ideals["right"]))

    def test_closure_commutes_with_products(self):
        for S in self.structures:
            for left, right in product(range(1 << S.order), repeat=2):
                self.assertEqual(S.closure(S.product(S.closure(left), S.closure(right))), S.closure(S.product(left, right)))

    def test_ideals_absorb(self):
        for S in self.structures:
            full, masks = S.full_bits, S.principal_masks
            for a in S.elements:
                self.assertEqual(S.product(full, masks["left"][a]) & ~masks["left"][a], 0)
                self.assertEqual(S.product(masks["right"][a], full) & ~masks["right"][a], 0)
                two_sided = masks["two_sided"][a]
                self.assertEqual((S.product(full, two_sided) | S.product(two_sided, full)) & ~two_sided, 0)

    def test_green_relations_nest(self):
        for S in self.structures:
            h, l, r, j = (green(S, kind) for kind in ("H", "L", "R", "J"))
            self.assertTrue(h.refines(l))
            self.assertTrue(h.refines(r))
            self.assertTrue(l.refines(j), msg=S.key)
            self.assertTrue(r.refines(j), msg=S.key)

    def test_green_one_sided_compatibility(self):
        for S in self.structures:
            l_classes, r_classes = green(S, "L"), green(S, "R")
            for a, b, c in product(S.elements, repeat=3):
                if l_classes.related(a, b):
                    self.assertTrue(l_classes.related(S.mul(a, c), S.mul(b, c)), msg=f"{S.key} L ({a},{b})·{c}")
                if r_classes.related(a, b):
                    self.assertTrue(r_classes.related(S.mul(c, a), S.mul(c, b)), msg=f"{S.key} {c}·R ({a},{b})")

    def test_starred_relations(self):
        for S in self.structures:
            regular = list(regularity_profile(S).regular_elements)
            for kind in GREEN_KINDS:
                plain, star = green(S, kind), starred(S, kind)
                for a, b, c in product(S.elements, repeat=3):
                    if star.related(a, b) and star.related(b, c):
                        self.assertTrue(star.related(a, c) and star.related(b, a))
                for a, b in product(regular, repeat=2):
                    self.assertEqual(plain.related(a, b), star.related(a, b), msg=f"{S.key} {kind} ({a},{b})")

    def test_semilattice_congruence_classes_are_subsemigroups(self):
        for S in self.structures:
            for partition in enumerate_semilattice_congruences(S):
                for block in partition.classes:
                    self.assertTrue(S.is_closed(block.bits), msg=f"{S.key} {partition}")

    def test_idempotents_are_ordered_idempotents(self):
        for S in self.structures:
            marked = ordered_idempotents(S)
            for e in S.elements:
                if S.mul(e, e) == e:
                    self.assertIn(e, marked)

    def test_regularity_witnesses(self):
        for S in self.structures:
            for entry in regularity_profile(S).entries:
                power = entry.regular_power
                self.assertTrue(S.leq[power][S.mul3(power, entry.witness, power)])
                if entry.regular:
                    self.assertEqual(entry.smallest_regular_power, 1)


class PredicateLawTests(SimpleTestCase):
    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.structures = list(_all_structures())

    def implies(self, antecedent, consequent):
        for S in self.structures:
            if structure_predicate(S, antecedent).holds:
                self.assertTrue(structure_predicate(S, consequent).holds, msg=f"{antecedent} -> {consequent} at {S.key}")

    def test_regularity_hierarchy(self):
        self.implies("completely-regular", "regular")
        self.implies("regular", "pi-regular")
        self.implies("completely-pi-regular", "pi-regular")
        self.implies("completely-regular", "completely-pi-regular")

    def test_simplicity_hierarchy(self):
        self.implies("left-simple", "simple")
        self.implies("right-simple", "simple")
        self.implies("t-simple", "left-simple")
        for S in self.structures:
            both = structure_predicate(S, "left-simple").holds and structure_predicate(S, "right-simple").holds
            self.assertEqual(structure_predicate(S, "t-simple").holds, both)

    def test_finite_structures_are_pi_regular(self):
        for S in self.structures:
            self.assertTrue(structure_predicate(S, "pi-regular").holds, msg=S.key)

    def test_archimedean_hierarchy(self):
        self.implies("left-archimedean", "archimedean")
        self.implies("right-archimedean", "archimedean")


class OracleAgreementTests(SimpleTestCase):
    """The subset-search definitions against the condition batteries that characterise them."""

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.structures = list(_all_structures())

    def test_left_pi_t_simple(self):
        for S in self.structures:
            conditions = theorem2_conditions(S)
            direct = left_pi_t_simple_direct(S).holds
            self.assertEqual(conditions[3].holds, direct, msg=S.key)
            self.assertEqual(conditions[6].holds, direct, msg=S.key)

    def test_right_pi_inverse(self):
        for S in self.structures:
            direct = right_pi_inverse_def(S).holds
            self.assertEqual(theorem5_conditions(S)[2].holds, direct, msg=S.key)
            self.assertEqual(theorem6_condition(S).holds, direct, msg=S.key)

