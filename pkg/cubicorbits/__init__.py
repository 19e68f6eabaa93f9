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

import pbr.version

from cubicorbits import burnside
from cubicorbits import equivariant
from cubicorbits import exc as exceptions
from cubicorbits import geometry
from cubicorbits import groups
from cubicorbits import real_lines


__version__ = pbr.version.VersionInfo('cubicorbits').version_string()

__all__ = [
    'burnside',
    'equivariant',
    'exc',
    'exceptions',
    'geometry',
    'groups',
    'real_lines',
]
