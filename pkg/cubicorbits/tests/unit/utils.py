# Copyright 2012 OpenStack LLC.
# All Rights Reserved.
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

import functools
import json
import os

import fixtures
from oslo_utils import strutils
import testtools

from cubicorbits import geometry


class BaseTestCase(testtools.TestCase):

    def setUp(self):
        super(BaseTestCase, self).setUp()
        self.useFixture(fixtures.FakeLogger())

        # If enabled, stdout and/or stderr is captured and will appear in
        # test results if that test fails.
        if strutils.bool_from_string(os.environ.get('OS_STDOUT_CAPTURE')):
            stdout = self.useFixture(fixtures.StringStream('stdout')).stream
            self.useFixture(fixtures.MonkeyPatch('sys.stdout', stdout))
        if strutils.bool_from_string(os.environ.get('OS_STDERR_CAPTURE')):
            stderr = self.useFixture(fixtures.StringStream('stderr')).stream
            self.useFixture(fixtures.MonkeyPatch('sys.stderr', stderr))

    def write_json_file(self, data, name='data.json'):
        """Dump ``data`` into a file in a per-test temporary directory."""
        path = os.path.join(self.useFixture(fixtures.TempDir()).path, name)
        with open(path, 'w') as f:
            json.dump(data, f)
        return path


# Line searches are the slow part of the suite; each surface is solved
# once per test process.

@functools.lru_cache(maxsize=None)
def find_lines(name, seed=0):
    return geometry.find_lines(geometry.builtin_surface(name), seed=seed)


def fermat_lines():
    return find_lines('fermat').lines


def clebsch_lines():
    return find_lines('clebsch').lines


@functools.lru_cache(maxsize=None)
def random_symmetric(seed):
    return geometry.random_symmetric_lines(seed)


def surface_json(surface):
    return json.loads(json.dumps(surface.to_dict()))
