# Copyright 2014 Red Hat, Inc.
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

from cubicorbits.common.i18n import _


class Resource(object):
    """Resource class

    This class is used to manage the columns of a table the CLI prints
    (e.g. orbits, subgroup rows, conservation trials).  An individual field
    consists of a 'field_id' (key) and a 'label' (value).  The caller only
    provides the 'field_ids' when instantiating the object.

    Ordering of the 'field_ids' will be preserved as specified by the caller.
    """

    FIELDS = {
        'agrees': 'Agrees',
        'class': 'Class',
        'direct': 'Direct',
        'element': 'Euler number',
        'group': 'Group',
        'index': 'Index',
        'mark': 'Mark',
        'members': 'Members',
        'real': 'Real',
        'restricted': 'Restricted',
        'result': 'Result',
        'seed': 'Seed',
        'size': 'Size',
        'solution': 'Solution',
        'stabilizer': 'Stabilizer',
        'trial': 'Trial',
        'types': 'Types',
        'value': 'Value',
    }

    def __init__(self, field_ids):
        """Create a Resource object

        :param field_ids:  A list of strings that the Resource object will
                           contain.  Each string must match an existing key in
                           FIELDS.

        :raises: ValueError if a field id is not in FIELDS
        """
        unknown = [x for x in field_ids if x not in self.FIELDS]
        if unknown:
            raise ValueError(_("Unknown field(s): %s") % ','.join(unknown))
        self._fields = tuple(field_ids)
        self._labels = tuple([self.FIELDS[x] for x in field_ids])

    @property
    def fields(self):
        return self._fields

    @property
    def labels(self):
        return self._labels


ORBIT_RESOURCE = Resource(
    ['stabilizer',
     'size',
     'members',
     ])

TABLE1_RESOURCE = Resource(
    ['group',
     'direct',
     'restricted',
     'agrees',
     ])

TRIAL_RESOURCE = Resource(
    ['trial',
     'seed',
     'element',
     'result',
     ])

MARKS_RESOURCE = Resource(
    ['class',
     'mark',
     ])

CHARACTER_RESOURCE = Resource(
    ['class',
     'value',
     ])

SOLUTION_RESOURCE = Resource(
    ['index',
     'solution',
     ])

REAL_ORBIT_RESOURCE = Resource(
    ['stabilizer',
     'size',
     'real',
     'types',
     ])
