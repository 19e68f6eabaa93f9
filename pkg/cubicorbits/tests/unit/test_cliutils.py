# Copyright 2012 Red Hat, Inc.
#
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

import io

import fixtures
import mock

from cubicorbits.common import cliutils
from cubicorbits.tests.unit import utils as test_utils


class _FakeOrbit(object):
    def __init__(self, stabilizer, size):
        self.stabilizer = stabilizer
        self.size = size


class ArgTest(test_utils.BaseTestCase):

    def test_positional_order_preserved(self):
        @cliutils.arg('first')
        @cliutils.arg('second')
        def do_thing(args):
            pass

        self.assertEqual([(('first',), {}), (('second',), {})],
                         do_thing.arguments)

    def test_no_duplicates(self):
        def do_thing(args):
            pass

        cliutils.add_arg(do_thing, '--flag', action='store_true')
        cliutils.add_arg(do_thing, '--flag', action='store_true')
        self.assertEqual(1, len(do_thing.arguments))


class PrintResultTestCase(test_utils.BaseTestCase):

    def setUp(self):
        super(PrintResultTestCase, self).setUp()
        self.mock_add_row = mock.MagicMock()
        self.useFixture(fixtures.MonkeyPatch(
            "prettytable.PrettyTable.add_row",
            self.mock_add_row))
        self.mock_get_string = mock.MagicMock(return_value="")
        self.useFixture(fixtures.MonkeyPatch(
            "prettytable.PrettyTable.get_string",
            self.mock_get_string))
        self.mock_init = mock.MagicMock(return_value=None)
        self.useFixture(fixtures.MonkeyPatch(
            "prettytable.PrettyTable.__init__",
            self.mock_init))
        # NOTE: won't work with mocked __init__
        self.useFixture(fixtures.MonkeyPatch(
            "prettytable.PrettyTable.align",
            mock.MagicMock()))

    def test_print_list_objects(self):
        objs = [_FakeOrbit('C2o', 12),
                _FakeOrbit('D8', 3),
                _FakeOrbit('C2e', 12)]

        cliutils.print_list(objs, ['stabilizer', 'size'],
                            field_labels=['Stabilizer', 'Size'])

        self.assertEqual(self.mock_add_row.call_args_list,
                         [mock.call(['C2o', 12]),
                          mock.call(['D8', 3]),
                          mock.call(['C2e', 12])])
        self.mock_get_string.assert_called_with()
        self.mock_init.assert_called_once_with(['Stabilizer', 'Size'])

    def test_print_list_formatters_and_missing_keys(self):
        objs = [{'members': [0, 4, 7]}]

        cliutils.print_list(
            objs, ['members', 'size'],
            formatters={'members': lambda o: ' '.join(
                str(m) for m in o['members'])})

        self.mock_add_row.assert_called_once_with(['0 4 7', ''])

    def test_print_list_label_mismatch(self):
        self.assertRaises(ValueError, cliutils.print_list, [], ['a', 'b'],
                          field_labels=['A'])

    def test_print_dict(self):
        cliutils.print_dict({'real': 27, 'elliptic': 12,
                             'orbits': ['C2o', 'D8']})
        self.assertEqual(self.mock_add_row.call_args_list,
                         [mock.call(['elliptic', 12]),
                          mock.call(['orbits', "['C2o', 'D8']"]),
                          mock.call(['real', 27])])
        self.mock_init.assert_called_once_with(['Property', 'Value'])


class PrintOutputTest(test_utils.BaseTestCase):

    def test_print_list_renders_table(self):
        with mock.patch('sys.stdout', new_callable=io.StringIO) as out:
            cliutils.print_list([{'class': 'D8', 'mark': 1}],
                                ['class', 'mark'],
                                field_labels=['Class', 'Mark'])
        text = out.getvalue()
        self.assertIn('| Class | Mark |', text)
        self.assertIn('| D8    | 1    |', text)

