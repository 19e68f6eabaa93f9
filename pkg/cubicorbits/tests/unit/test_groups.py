#    Licensed under the Apache License, Version 2.0 (the "License"); you may
#    not use this file except in compliance with the License. You may obtain
#    a copy of the License at
#
#         http://www.apache.org/licenses/LICENSE-2.0
#
#    Unless required by applicable law or agreed to in writing, software
#    distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#    WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#    License for the specific language governing permissions and limitations
#    under the License.

import itertools

import numpy as np

from cubicorbits import exc
from cubicorbits import groups
from cubicorbits.tests.unit import utils


P = groups.parse_permutation


class PermutationTest(utils.BaseTestCase):

    def test_from_cycles_str(self):
        g = groups.Permutation.from_cycles((1, 3), (2, 4))
        self.assertEqual('(1 3)(2 4)', str(g))
        self.assertEqual((2, 3, 0, 1), g.images)

    def test_identity_str(self):
        self.assertEqual('e', str(groups.Permutation.identity()))

    def test_parse_round_trip(self):
        for text in ('(1 2)', '(1 2)(3 4)', '(1 2 3)', '(1 2 3 4)', 'e'):
            self.assertEqual(text, str(P(text)))

    def test_parse_commas(self):
        self.assertEqual(P('(1 2 3)'), P('(1,2,3)'))

    def test_parse_invalid(self):
        for text in ('(1 5)', '(1 1)', '(1 2)x', '(a b)'):
            self.assertRaises(exc.ParseError, P, text)

    def test_invalid_images(self):
        self.assertRaises(exc.InvalidPermutation, groups.Permutation,
                          (0, 0, 1, 2))

    def test_immutable(self):
        g = P('(1 2)')
        self.assertRaises(AttributeError, setattr, g, 'images', (0, 1))

    def test_compose_applies_right_first(self):
        a = P('(1 2)')
        b = P('(2 3)')
        ab = groups.compose(a, b)
        for i in range(4):
            self.assertEqual(a(b(i)), ab(i))
        self.assertEqual('(1 2 3)', str(ab))

    def test_inverse(self):
        g = P('(1 2 3 4)')
        self.assertTrue((g * g.inverse()).is_identity())
        self.assertEqual('(1 4 3 2)', str(~g))

    def test_order_cycle_type(self):
        self.assertEqual(4, P('(1 2 3 4)').order())
        self.assertEqual((1, 3), P('(1 2 3)').cycle_type())
        self.assertEqual(2, P('(3 4)').fixed_point_count())


class SubgroupTest(utils.BaseTestCase):

    def test_empty_rejected(self):
        self.assertRaises(ValueError, groups.Subgroup, [])

    def test_generate_orders(self):
        expected = {'e': 1, 'C2o': 2, 'C2e': 2, 'C3': 3, 'K4norm': 4,
                    'K4': 4, 'C4': 4, 'S3': 6, 'D8': 8, 'A4': 12, 'S4': 24}
        for name, order in expected.items():
            self.assertEqual(order, len(groups.canonical_subgroup(name)))

    def test_classify_canonical(self):
        for name in groups.CLASS_NAMES:
            subgroup = groups.canonical_subgroup(name)
            self.assertEqual(name, groups.classify_subgroup(subgroup))

    def test_conjugate(self):
        h = groups.canonical_subgroup('C2o')
        g = P('(2 3)')
        self.assertEqual(groups.Subgroup.generate([P('(1 3)')]),
                         h.conjugate(g))

    def test_normality(self):
        s4 = groups.symmetric_group()
        self.assertTrue(groups.canonical_subgroup('K4norm').is_normal_in(s4))
        self.assertTrue(groups.canonical_subgroup('A4').is_normal_in(s4))
        self.assertFalse(groups.canonical_subgroup('K4').is_normal_in(s4))
        self.assertFalse(groups.canonical_subgroup('D8').is_normal_in(s4))

    def test_generators_span(self):
        for name in groups.CLASS_NAMES:
            h = groups.canonical_subgroup(name)
            self.assertEqual(h, groups.Subgroup.generate(h.generators()))

    def test_unknown_name(self):
        self.assertRaises(exc.UnknownName, groups.canonical_subgroup, 'Q8')

    def test_enumerate_subgroups_s4(self):
        subs = groups.enumerate_subgroups(groups.symmetric_group())
        self.assertEqual(30, len(subs))
        self.assertEqual(len(subs), len(set(subs)))

    def test_coset_space(self):
        s4 = groups.symmetric_group()
        for name in groups.CLASS_NAMES:
            h = groups.canonical_subgroup(name)
            cosets = groups.coset_space(s4, h)
            self.assertEqual(24 // len(h), len(cosets))
            self.assertEqual(set(s4), set().union(*cosets))

    def test_coset_space_not_subgroup(self):
        self.assertRaises(exc.NotASubgroup, groups.coset_space,
                          groups.canonical_subgroup('C3'),
                          groups.canonical_subgroup('C2o'))


class OrbitTest(utils.BaseTestCase):

    @staticmethod
    def _act(g, pair):
        return frozenset(g(i) for i in pair)

    def test_orbits_and_stabilizers_of_pairs(self):
        points = [frozenset(p) for p in itertools.combinations(range(4), 2)]
        eq = lambda a, b: a == b
        blocks = groups.orbits(self._act, points, eq)
        self.assertEqual([list(range(6))], blocks)
        stab = groups.stabilizer(self._act, points[0], eq)
        self.assertEqual('K4', groups.classify_subgroup(stab))

    def test_orbits_under_subgroup(self):
        points = list(range(4))
        c2 = groups.canonical_subgroup('C2o')
        blocks = groups.orbits(lambda g, i: g(i), points,
                               lambda a, b: a == b, group=c2)
        self.assertEqual([[0, 1], [2], [3]], blocks)

    def test_orbits_not_closed(self):
        self.assertRaises(exc.PointsNotClosed, groups.orbits,
                          lambda g, i: g(i), [0, 1], lambda a, b: a == b)

    def test_hashed_orbits_match_scan(self):
        points = [frozenset(p) for p in itertools.combinations(range(4), 2)]
        for name in groups.CLASS_NAMES:
            h = groups.canonical_subgroup(name)
            self.assertEqual(
                groups.orbits(self._act, points, lambda a, b: a == b,
                              group=h),
                groups.orbits(self._act, points, group=h), name)
        self.assertEqual(
            groups.stabilizer(self._act, points[0], lambda a, b: a == b),
            groups.stabilizer(self._act, points[0]))

    def test_hashed_orbits_not_closed(self):
        self.assertRaises(exc.PointsNotClosed, groups.orbits,
                          lambda g, i: g(i), [0, 1])


class SubgroupLatticeTest(utils.BaseTestCase):

    def test_s4_classes(self):
        lattice = groups.lattice_for('S4')
        self.assertEqual(list(groups.CLASS_NAMES),
                         [c.label for c in lattice.classes])
        sizes = [len(c.members) for c in lattice.classes]
        self.assertEqual([1, 6, 3, 4, 1, 3, 3, 4, 3, 1, 1], sizes)

    def test_s4_element_classes(self):
        lattice = groups.lattice_for('S4')
        self.assertEqual([1, 6, 3, 8, 6],
                         [len(c) for c in lattice.element_classes])
        self.assertEqual([1, 2, 2, 3, 4],
                         [c.representative.order()
                          for c in lattice.element_classes])

    def test_klein_labels(self):
        k4 = groups.lattice_for('K4')
        self.assertEqual(['e', 'C2L', 'C2R', 'C2D', 'K4'],
                         [c.label for c in k4.classes])
        self.assertEqual(P('(1 2)'),
                         max(k4.class_named('C2L').representative))
        self.assertEqual(P('(3 4)'),
                         max(k4.class_named('C2R').representative))
        norm = groups.lattice_for('K4norm')
        self.assertEqual(['e', 'C2L', 'C2R', 'C2D', 'K4norm'],
                         [c.label for c in norm.classes])
        self.assertEqual(P('(1 4)(2 3)'),
                         max(norm.class_named('C2D').representative))

    def test_d8_labels(self):
        d8 = groups.lattice_for('D8')
        labels = [c.label for c in d8.classes]
        self.assertEqual(['e', 'C2o', 'C2c', 'C2e', 'K4norm', 'K4', 'C4',
                          'D8'], labels)

    def test_aliases(self):
        k4 = groups.lattice_for('K4')
        self.assertIs(k4.class_named('C2D'), k4.class_named('C2Δ'))
        self.assertIs(k4.class_named('C2D'), k4.class_named('C2Delta'))

    def test_class_named_coarse(self):
        a4 = groups.lattice_for('A4')
        self.assertEqual('C2e', a4.class_named('C2e').label)
        self.assertEqual('K4norm', a4.class_named('K4').label)
        d8 = groups.lattice_for('D8')
        # exact labels win over the coarse Klein name
        self.assertEqual('K4', d8.class_named('K4').label)
        self.assertRaises(exc.UnknownName, d8.class_named, 'S3')

    def test_class_of_not_member(self):
        c3 = groups.lattice_for('C3')
        self.assertRaises(exc.NotASubgroup, c3.class_of,
                          groups.canonical_subgroup('C2o'))

    def test_non_canonical_lattice(self):
        k4 = groups.canonical_subgroup('K4').conjugate(P('(2 3)'))
        lattice = groups.lattice_of(k4)
        self.assertEqual('K4', lattice.name)
        self.assertEqual(['e', 'C2o.1', 'C2o.2', 'C2e', 'K4'],
                         [c.label for c in lattice.classes])

    def test_lattice_of_is_shared(self):
        k4 = groups.canonical_subgroup('K4').conjugate(P('(2 3)'))
        self.assertIs(groups.lattice_of(k4),
                      groups.lattice_of(groups.Subgroup(list(k4))))

    def test_classify_by_normality(self):
        s4 = groups.symmetric_group()
        for g in s4:
            for name in ('K4', 'K4norm'):
                h = groups.canonical_subgroup(name).conjugate(g)
                self.assertEqual(name, groups.classify_subgroup(h))


class TableOfMarksTest(utils.BaseTestCase):

    def setUp(self):
        super(TableOfMarksTest, self).setUp()
        self.table = groups.table_of_marks()

    def test_lower_triangular_positive_diagonal(self):
        marks = self.table.marks
        self.assertTrue(np.all(np.diag(marks) > 0))
        self.assertTrue(np.all(np.triu(marks, 1) == 0) or
                        np.all(np.tril(marks, -1) == 0))

    def test_known_values(self):
        self.assertEqual(24, self.table['e', 'e'])
        self.assertEqual(12, self.table['e', 'C2o'])
        self.assertEqual(2, self.table['C2o', 'C2o'])
        self.assertEqual(4, self.table['C2e', 'C2e'])
        self.assertEqual(6, self.table['K4norm', 'K4norm'])
        self.assertEqual(3, self.table['C2e', 'D8'])
        self.assertEqual(1, self.table['C4', 'D8'])
        self.assertEqual(0, self.table['C3', 'D8'])
        self.assertEqual(1, self.table['S4', 'S4'])

    def test_first_row_is_index(self):
        for cls in self.table.classes:
            self.assertEqual(24 // cls.order, self.table['e', cls])

    def test_read_only(self):
        self.assertRaises(ValueError, self.table.marks.__setitem__,
                          (0, 0), 1)


class CoarseNameTest(utils.BaseTestCase):

    def test_group_names(self):
        self.assertEqual('C2', groups.coarse_group_name('C2o'))
        self.assertEqual('C2', groups.coarse_group_name('C2e'))
        self.assertEqual('K4', groups.coarse_group_name('K4norm'))
        self.assertEqual('D8', groups.coarse_group_name('D8'))

    def test_labels_in_d8(self):
        d8 = groups.lattice_for('D8')
        self.assertEqual(
            ['e', 'C2o', 'C2e', 'C2e', 'K4', 'K4', 'C4', 'D8'],
            [groups.coarse_label(d8, c) for c in d8.classes])
