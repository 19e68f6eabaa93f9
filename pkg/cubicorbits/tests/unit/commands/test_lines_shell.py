#   Licensed under the Apache License, Version 2.0 (the "License"); you may
#   not use this file except in compliance with the License. You may obtain
#   a copy of the License at
#
#       http://www.apache.org/licenses/LICENSE-2.0
#
#   Unless required by applicable law or agreed to in writing, software
#   distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
#   WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
#   License for the specific language governing permissions and limitations
#   under the License.

import io
import json
import os

import fixtures
import mock

from cubicorbits.commands import lines_shell as l_shell
from cubicorbits import exc
from cubicorbits import export
from cubicorbits import geometry
from cubicorbits.tests.unit import utils


class LinesShellTest(utils.BaseTestCase):

    def setUp(self):
        super(LinesShellTest, self).setUp()
        self.stdout = io.StringIO()
        self.useFixture(fixtures.MonkeyPatch('sys.stdout', self.stdout))
        self.mock_find = self.useFixture(fixtures.MockPatchObject(
            geometry, 'find_lines')).mock
        self.mock_find.return_value = utils.find_lines('fermat')

    def _get_args(self, surface='fermat', surface_file=None, seed=None,
                  out=None, radius=export.DEFAULT_RADIUS, chart='auto'):
        args = mock.MagicMock(spec=True)
        args.surface = surface
        args.surface_file = surface_file
        args.config = None
        args.seed = seed
        args.newton_starts = None
        args.newton_max_iter = None
        args.workers = None
        args.out = out
        args.format = 'obj'
        args.radius = radius
        args.chart = chart
        return args

    def test_do_find_lines(self):
        l_shell.do_find_lines(self._get_args(seed=5))
        data = json.loads(self.stdout.getvalue())
        self.assertEqual(27, len(data['lines']))
        conf = self.mock_find.call_args[1]['conf']
        self.assertEqual(5, conf.seed)

    def test_do_find_lines_out(self):
        tmp = self.useFixture(fixtures.TempDir()).path
        path = os.path.join(tmp, 'lines.json')
        l_shell.do_find_lines(self._get_args(out=path))
        self.assertEqual('', self.stdout.getvalue())
        with open(path) as f:
            self.assertEqual(27, len(json.load(f)['lines']))

    def test_do_find_lines_degenerate(self):
        self.mock_find.side_effect = exc.DegenerateSurface(reason='cone')
        self.assertRaises(exc.DegenerateSurface, l_shell.do_find_lines,
                          self._get_args())

    def test_do_export_lines(self):
        l_shell.do_export_lines(self._get_args())
        parsed = export.read_obj(self.stdout.getvalue())
        self.assertEqual(['orbit-D8'], list(parsed))
        self.assertEqual(3, len(parsed['orbit-D8']))
        self.assertTrue(self.stdout.getvalue().startswith('# fermat\n'))

    def test_do_export_lines_chart(self):
        l_shell.do_export_lines(self._get_args(chart='0,0,0,-2'))
        self.assertIn('# chart 0,0,0,-1 radius 3',
                      self.stdout.getvalue())

    def test_do_export_lines_bad_options(self):
        self.assertRaises(exc.CommandError, l_shell.do_export_lines,
                          self._get_args(radius=0))
        self.assertRaises(exc.CommandError, l_shell.do_export_lines,
                          self._get_args(chart='1,2'))
        self.assertFalse(self.mock_find.called)

    def test_do_export_lines_not_real(self):
        path = self.write_json_file({'monomials': [
            {'exponents': [3, 0, 0, 0], 're': 1.0, 'im': 2.0}]})
        self.assertRaises(exc.SurfaceNotReal, l_shell.do_export_lines,
                          self._get_args(surface=None, surface_file=path))
        self.assertFalse(self.mock_find.called)

    def test_do_export_lines_nothing_to_export(self):
        empty = export.ObjExport(export.AffineChart([1, 0, 0, 0]), 3.0, [])
        with mock.patch.object(export, 'export_lines', return_value=empty):
            self.assertRaises(exc.CommandError, l_shell.do_export_lines,
                              self._get_args())
        self.assertTrue(self.stdout.getvalue().startswith('# fermat'))
