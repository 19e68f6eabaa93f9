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

from cubicorbits import exc
from cubicorbits.tests.unit import utils as test_utils


class ExcTest(test_utils.BaseTestCase):

    def test_message_formatting(self):
        e = exc.DegenerateSurface(reason='found 26 lines instead of 27')
        self.assertEqual('Degenerate surface: found 26 lines instead of 27',
                         str(e))
        self.assertEqual({'reason': 'found 26 lines instead of 27'},
                         e.kwargs)

    def test_default_message(self):
        self.assertEqual('surface not real', str(exc.SurfaceNotReal()))
        self.assertEqual('Invalid command', str(exc.CommandError()))

    def test_explicit_message(self):
        self.assertEqual('bad chart', str(exc.CommandError('bad chart')))

    def test_exit_codes(self):
        expected = {
            exc.CommandError: 1,
            exc.UnknownName: 1,
            exc.ParseError: 1,
            exc.NotASubgroup: 1,
            exc.NoSolution: 1,
            exc.SurfaceNotReal: 1,
            exc.DegenerateSurface: 2,
            exc.BudgetExhausted: 2,
            exc.PointsNotClosed: 3,
            exc.Mismatch: 4,
            exc.SegreViolation: 5,
            exc.DegenerateInvolution: 5,
            exc.ConservationMismatch: 6,
        }
        for cls, code in expected.items():
            self.assertEqual(code, cls.exit_code, cls.__name__)
            self.assertTrue(issubclass(cls, exc.CubicOrbitsException))

    def test_budget_is_degenerate(self):
        e = exc.BudgetExhausted(attempts=20)
        self.assertIsInstance(e, exc.DegenerateSurface)
        self.assertEqual('No smooth surface found after 20 attempts', str(e))
