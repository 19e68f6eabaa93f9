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
import logging
import re
import sys

import fixtures
import mock
from testtools import matchers

from cubicorbits import equivariant
from cubicorbits import exc
from cubicorbits import geometry
from cubicorbits import shell as cubic_shell
from cubicorbits.tests.unit import utils


class ShellTest(utils.BaseTestCase):
    re_options = re.DOTALL | re.MULTILINE

    def shell(self, argv):
        if isinstance(argv, str):
            argv = argv.split()
        orig = sys.stdout
        try:
            sys.stdout = io.StringIO()
            _shell = cubic_shell.CubicOrbitsShell()
            _shell.main(argv)
        except SystemExit:
            exc_type, exc_value, exc_traceback = sys.exc_info()
            self.assertEqual(0, exc_value.code)
        finally:
            out = sys.stdout.getvalue()
            sys.stdout.close()
            sys.stdout = orig
        return out

    def test_help_unknown_command(self):
        self.assertRaises(exc.CommandError, self.shell, 'help foofoo')

    def test_help(self):
        required = [
            '.*?^usage: cubicorbits',
            '.*?^ +bash-completion',
            '.*?^ +find-lines',
            '.*?^ +verify-conservation',
            '.*?^See "cubicorbits help COMMAND" '
            'for help on a specific command',
        ]
        for argstr in ['--help', 'help', '']:
            help_text = self.shell(argstr)
            for r in required:
                self.assertThat(help_text,
                                matchers.MatchesRegex(r, self.re_options))

    def test_help_on_subcommand(self):
        required = [
            '.*?^usage: cubicorbits orbits',
            '.*?^Decompose the 27 lines into orbits',
            '.*?--notation',
        ]
        help_text = self.shell('help orbits')
        for r in required:
            self.assertThat(help_text,
                            matchers.MatchesRegex(r, self.re_options))

    def test_bash_completion(self):
        words = self.shell('bash-completion').split()
        for word in ('find-lines', 'export-lines', 'orbits', 'table1',
                     'real', 'burnside', 'verify-conservation', '--surface',
                     '--surface-file', '--notation', '--trials'):
            self.assertIn(word, words)
        self.assertNotIn('bash-completion', words)
        self.assertEqual(sorted(words), words)

    def test_usage_error(self):
        self.assertRaises(exc.CommandError, self.shell, 'orbits --group')
        self.assertRaises(exc.CommandError, self.shell, 'no-such-command')

    def test_version(self):
        self.assertRaises(SystemExit, cubic_shell.CubicOrbitsShell().main,
                          ['--version'])

    @mock.patch.object(geometry, 'find_lines')
    def test_orbits(self, mock_find):
        mock_find.return_value = utils.find_lines('fermat')
        out = self.shell('orbits --surface fermat --json')
        self.assertEqual(equivariant.S4_ANSWER,
                         json.loads(out)['euler_number'])

    def test_burnside(self):
        out = self.shell(['burnside', 'res', '[S4/D8]', '--to', 'C2e'])
        self.assertEqual('3[C2e/C2e]\n', out)

    def test_debug_logging(self):
        with mock.patch('logging.basicConfig') as mock_config:
            self.shell('--debug help')
        self.assertEqual('DEBUG', logging_level(mock_config))
        with mock.patch('logging.basicConfig') as mock_config:
            self.shell('help')
        self.assertEqual('CRITICAL', logging_level(mock_config))


def logging_level(mock_config):
    return logging.getLevelName(mock_config.call_args[1]['level'])


class MainTest(utils.BaseTestCase):

    def setUp(self):
        super(MainTest, self).setUp()
        self.stderr = io.StringIO()
        self.useFixture(fixtures.MonkeyPatch('sys.stderr', self.stderr))

    def _exit_code(self, argv, error):
        with mock.patch.object(cubic_shell.CubicOrbitsShell, 'main',
                               side_effect=error):
            e = self.assertRaises(SystemExit, cubic_shell.main, argv)
        return e.code

    def test_exit_codes(self):
        cases = [
            (exc.CommandError('bad'), 1),
            (exc.DegenerateSurface(reason='x'), 2),
            (exc.BudgetExhausted(attempts=3), 2),
            (exc.PointsNotClosed(index=1, element='(1 2)'), 3),
            (exc.Mismatch(group='C4', direct='a', restricted='b'), 4),
            (exc.SegreViolation(hyperbolic=1, elliptic=2), 5),
            (exc.ConservationMismatch(failed=1, trials=2, expected='x'), 6),
            (ValueError('boom'), 1),
            (KeyboardInterrupt(), 130),
        ]
        for error, code in cases:
            self.assertEqual(code, self._exit_code(['help'], error))

    def test_message_on_stderr(self):
        self._exit_code(['real'], exc.SurfaceNotReal())
        self.assertEqual('surface not real\n', self.stderr.getvalue())

    def test_debug_reraises(self):
        with mock.patch.object(cubic_shell.CubicOrbitsShell, 'main',
                               side_effect=exc.Mismatch(group='C4',
                                                        direct='a',
                                                        restricted='b')):
            self.assertRaises(exc.Mismatch, cubic_shell.main,
                              ['--debug', 'table1'])

    def test_usage_error_exit_code(self):
        e = self.assertRaises(SystemExit, cubic_shell.main,
                              ['orbits', '--notation', 'latex'])
        self.assertEqual(1, e.code)
        self.assertIn('invalid choice', self.stderr.getvalue())
